#pragma once

#include "factoria/harness.hpp"
#include "factoria/method.hpp"
#include "factoria/modmath.hpp"
#include "factoria/oracle.hpp"
#include "factoria/report.hpp"
#include "factoria/theorems.hpp"
