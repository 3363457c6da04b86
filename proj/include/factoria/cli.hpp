#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process; tools/factoria.cpp only forwards argv.
//
// Exit codes: 0 ran (and, for verify, conformed), 1 verify found an
// unexpected mismatch, 2 usage or domain error.

#include <charconv>
#include <cstdint>
#include <exception>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "factoria/harness.hpp"
#include "factoria/method.hpp"
#include "factoria/oracle.hpp"
#include "factoria/report.hpp"
#include "factoria/theorems.hpp"

namespace factoria::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Numeric arguments above this are rejected rather than truncated.
inline constexpr std::uint64_t kMaxInput = std::uint64_t{1} << 62;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strict base-10 parse of a non-negative integer <= 2^62.
inline std::uint64_t parse_integer(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (text.empty() || text.front() < '0' || text.front() > '9') {
    throw UsageError(what + ": expected a non-negative base-10 integer, got '" + text + "'");
  }
  auto [ptr, ec] = std::from_chars(first, last, value, 10);
  if (ec == std::errc::result_out_of_range || (ec == std::errc{} && value > kMaxInput)) {
    throw UsageError(what + ": value '" + text + "' exceeds 2^62");
  }
  if (ec != std::errc{} || ptr != last) {
    throw UsageError(what + ": expected a non-negative base-10 integer, got '" + text + "'");
  }
  return value;
}

inline Method parse_method_arg(const std::string& text) {
  auto m = parse_method(text);
  if (!m) throw UsageError("unknown method '" + text + "'");
  return *m;
}

inline report::OutputFormat parse_format_arg(const std::string& text) {
  auto f = report::parse_format(text);
  if (!f) throw UsageError("unknown format '" + text + "' (expected table, jsonl or csv)");
  return *f;
}

namespace detail {

struct Options {
  std::string n;
  std::string method;
  std::string lo;
  std::string hi;
  std::string step;
  std::string reps_positional;
  std::string reps_flag;
  std::string cap;
  std::string format = "table";
  bool raw = false;
};

inline int do_check(const Options& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t n = parse_integer(o.n, "n");
  const Method method = parse_method_arg(o.method.empty() ? "theorem1" : o.method);
  const auto format = parse_format_arg(o.format);
  if (!is_primality_method(method)) {
    throw UsageError("check supports --method wilson or theorem1; use 'twins' for pair tests");
  }
  PrimalityVerdict verdict =
      method == Method::wilson ? wilson_test(n) : (o.raw ? theorem1_raw(n) : theorem1_test(n));
  const bool mismatch = verdict.is_prime != oracle::trial_division_is_prime(n);
  if (mismatch) {
    err << "warning: " << to_string(method) << " verdict for " << n
        << " disagrees with trial division\n";
  }
  report::write_one(out, report::CheckRecord{verdict, o.raw, mismatch}, format);
  return kExitOk;
}

inline int do_twins(const Options& o, std::ostream& out, std::ostream& err) {
  const std::uint64_t n = parse_integer(o.n, "n");
  const Method method = parse_method_arg(o.method.empty() ? "theorem2" : o.method);
  const auto format = parse_format_arg(o.format);
  if (!is_twin_method(method)) {
    throw UsageError("twins supports --method clement or theorem2");
  }
  TwinVerdict verdict =
      method == Method::clement ? clement_test(n) : (o.raw ? theorem2_raw(n) : theorem2_test(n));
  const bool truth = oracle::trial_division_is_prime(n) && oracle::trial_division_is_prime(n + 2);
  const bool mismatch = verdict.is_twin_pair != truth;
  if (mismatch) {
    err << "warning: " << to_string(method) << " verdict for (" << n << ", " << n + 2
        << ") disagrees with trial division\n";
  }
  report::write_one(out, report::TwinRecord{verdict, o.raw, mismatch}, format);
  return kExitOk;
}

inline std::uint64_t resolve_cap(const Options& o) {
  return o.cap.empty() ? kDefaultVerifyCap : parse_integer(o.cap, "cap");
}

inline int do_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Method method = parse_method_arg(o.method);
  const std::uint64_t lo = parse_integer(o.lo, "lo");
  const std::uint64_t hi = parse_integer(o.hi, "hi");
  const auto format = parse_format_arg(o.format);
  if (method == Method::oracle) throw UsageError("verify needs a congruence method, not oracle");
  VerifyOptions options;
  options.cap = resolve_cap(o);
  const RangeReport rep = verify_range(method, lo, hi, o.raw, options);
  report::write_one(out, rep, format);
  if (!rep.conforms) {
    err << "verify: " << to_string(method) << " mismatches differ from the expected set\n";
    return kExitMismatch;
  }
  return kExitOk;
}

inline int do_bench(const Options& o, std::ostream& out, std::ostream&) {
  const Method method = parse_method_arg(o.method);
  const std::uint64_t lo = parse_integer(o.lo, "lo");
  const std::uint64_t hi = parse_integer(o.hi, "hi");
  const std::uint64_t step = parse_integer(o.step, "step");
  const auto format = parse_format_arg(o.format);
  std::uint64_t reps = 5;
  if (!o.reps_flag.empty()) {
    reps = parse_integer(o.reps_flag, "reps");
  } else if (!o.reps_positional.empty()) {
    reps = parse_integer(o.reps_positional, "reps");
  }
  if (step == 0) throw UsageError("step must be >= 1");
  if (reps == 0) throw UsageError("reps must be >= 1");
  if (hi < lo) throw UsageError("hi must be >= lo");
  const std::uint64_t cap = resolve_cap(o);
  if (hi > cap) {
    throw UsageError("hi " + std::to_string(hi) + " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::uint64_t> inputs;
  for (std::uint64_t n = lo; n <= hi; n += step) {
    inputs.push_back(n);
    if (hi - n < step) break;
  }
  std::vector<report::Record> records;
  for (const auto& r : bench_method(method, inputs, reps)) records.push_back(report::to_record(r));
  report::write(out, records, format);
  return kExitOk;
}

}  // namespace detail

/// Runs the CLI on args (program name excluded).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorial-congruence primality and twin-prime tests", "factoria"};
  app.require_subcommand(1);
  detail::Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format: table, jsonl or csv");
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Upper limit on hi (default 100000)")->envname("FACTORIA_CAP");
  };

  auto* check = app.add_subcommand("check", "Test a single number for primality");
  check->add_option("n", o.n, "Number to test")->required();
  check->add_option("--method", o.method, "wilson or theorem1 (default theorem1)");
  check->add_flag("--raw", o.raw, "Apply the congruence verbatim, ignoring known exceptions");
  add_format(check);

  auto* twins = app.add_subcommand("twins", "Test whether n and n+2 are twin primes");
  twins->add_option("n", o.n, "Smaller member of the candidate pair")->required();
  twins->add_option("--method", o.method, "clement or theorem2 (default theorem2)");
  twins->add_flag("--raw", o.raw, "Apply the congruence verbatim, ignoring known exceptions");
  add_format(twins);

  auto* verify = app.add_subcommand("verify", "Compare a test against the sieve over [lo, hi]");
  verify->add_option("method", o.method, "wilson, theorem1, clement or theorem2")->required();
  verify->add_option("lo", o.lo, "First input")->required();
  verify->add_option("hi", o.hi, "Last input")->required();
  verify->add_flag("--raw", o.raw, "Verify the raw congruence (expects the known exceptions)");
  add_cap(verify);
  add_format(verify);

  auto* bench = app.add_subcommand("bench", "Time a test on lo, lo+step, ..., <= hi");
  bench->add_option("method", o.method, "wilson, theorem1, clement, theorem2 or oracle")->required();
  bench->add_option("lo", o.lo, "First input")->required();
  bench->add_option("hi", o.hi, "Last input")->required();
  bench->add_option("step", o.step, "Stride between inputs")->required();
  bench->add_option("reps_positional", o.reps_positional, "Repetitions per input (default 5)");
  bench->add_option("--reps", o.reps_flag, "Repetitions per input (default 5)");
  add_cap(bench);
  add_format(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return detail::do_check(o, out, err);
    if (twins->parsed()) return detail::do_twins(o, out, err);
    if (verify->parsed()) return detail::do_verify(o, out, err);
    if (bench->parsed()) return detail::do_bench(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // domain_error, out_of_range and length_error from the library
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace factoria::cli
