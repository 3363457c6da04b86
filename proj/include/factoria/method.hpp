#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace factoria {

enum class Method { wilson, theorem1, clement, theorem2, oracle };

inline constexpr std::array<Method, 5> kAllMethods = {Method::wilson, Method::theorem1,
                                                      Method::clement, Method::theorem2,
                                                      Method::oracle};

constexpr std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::wilson: return "wilson";
    case Method::theorem1: return "theorem1";
    case Method::clement: return "clement";
    case Method::theorem2: return "theorem2";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

constexpr std::optional<Method> parse_method(std::string_view name) noexcept {
  for (Method m : kAllMethods) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

/// True for the tests that decide a single number's primality.
constexpr bool is_primality_method(Method method) noexcept {
  return method == Method::wilson || method == Method::theorem1;
}

/// True for the tests that decide whether (n, n+2) is a twin-prime pair.
constexpr bool is_twin_method(Method method) noexcept {
  return method == Method::clement || method == Method::theorem2;
}

/// Smallest admissible input for each test.
constexpr std::uint64_t domain_floor(Method method) noexcept {
  switch (method) {
    case Method::wilson: return 2;
    case Method::theorem1: return 5;
    case Method::clement: return 2;
    case Method::theorem2: return 3;
    case Method::oracle: return 0;
  }
  return 0;
}

}  // namespace factoria
