#pragma once

// Exhaustive range verification of the congruence tests against the sieve,
// and wall-clock / multiplication-count benchmarking.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "factoria/method.hpp"
#include "factoria/oracle.hpp"
#include "factoria/theorems.hpp"

namespace factoria {

inline constexpr std::uint64_t kDefaultVerifyCap = 100'000;

struct Mismatch {
  std::uint64_t n;
  bool theorem_verdict;
  bool oracle_verdict;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct RangeReport {
  Method method;
  bool raw;
  std::uint64_t lo;
  std::uint64_t hi;
  std::uint64_t checked;
  std::vector<Mismatch> mismatches;  // sorted by n
  std::vector<std::uint64_t> expected_mismatches;
  bool conforms;

  friend bool operator==(const RangeReport&, const RangeReport&) = default;
};

struct VerifyOptions {
  std::uint64_t cap = kDefaultVerifyCap;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Inputs handed to a worker at a time.
  std::uint64_t chunk = 512;
};

/// Positions in [lo, hi] where the test is known to disagree with the oracle.
inline std::vector<std::uint64_t> expected_mismatches(Method method, bool raw, std::uint64_t lo,
                                                      std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (!raw) return out;
  auto keep = [&](auto const& set) {
    for (std::uint64_t n : set) {
      if (n >= lo && n <= hi) out.push_back(n);
    }
  };
  if (method == Method::theorem1) keep(kTheorem1Exceptions);
  if (method == Method::theorem2) keep(kTheorem2Exceptions);
  return out;
}

namespace detail {

inline bool theorem_verdict(Method method, bool raw, std::uint64_t n) {
  switch (method) {
    case Method::wilson: return wilson_test(n).is_prime;
    case Method::theorem1: return (raw ? theorem1_raw(n) : theorem1_test(n)).is_prime;
    case Method::clement: return clement_test(n).is_twin_pair;
    case Method::theorem2: return (raw ? theorem2_raw(n) : theorem2_test(n)).is_twin_pair;
    case Method::oracle: break;
  }
  throw std::domain_error("no congruence test for method oracle");
}

inline bool conforms(const std::vector<Mismatch>& found, const std::vector<std::uint64_t>& expected) {
  if (found.size() != expected.size()) return false;
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].n != expected[i]) return false;
  }
  return true;
}

}  // namespace detail

inline RangeReport verify_range(Method method, std::uint64_t lo, std::uint64_t hi, bool use_raw,
                                const VerifyOptions& options = {}) {
  if (method == Method::oracle) {
    throw std::domain_error("verify_range: the oracle cannot be verified against itself");
  }
  if (lo < domain_floor(method)) {
    throw std::domain_error("verify_range: " + std::string(to_string(method)) +
                            " requires lo >= " + std::to_string(domain_floor(method)));
  }
  if (hi < lo) {
    throw std::domain_error("verify_range: hi < lo");
  }
  if (hi > options.cap) {
    throw std::length_error("verify_range: hi " + std::to_string(hi) + " exceeds cap " +
                            std::to_string(options.cap));
  }

  const bool twin = is_twin_method(method);
  const oracle::PrimeTable table = oracle::sieve(std::max<std::uint64_t>(twin ? hi + 2 : hi, 2));
  auto oracle_verdict = [&](std::uint64_t n) {
    return twin ? table.is_twin_start(n) : table.is_prime(n);
  };

  const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk, 1);
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t chunks = (span + chunk - 1) / chunk;
  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, chunks));

  std::atomic<std::uint64_t> next{0};
  std::vector<std::vector<Mismatch>> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::uint64_t c = next++; c < chunks; c = next++) {
        const std::uint64_t first = lo + c * chunk;
        const std::uint64_t last = std::min(hi, first + chunk - 1);
        for (std::uint64_t n = first; n <= last; ++n) {
          const bool got = detail::theorem_verdict(method, use_raw, n);
          const bool want = oracle_verdict(n);
          if (got != want) found[id].push_back({n, got, want});
        }
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  RangeReport report{method, use_raw, lo, hi, span, {}, expected_mismatches(method, use_raw, lo, hi),
                     false};
  for (auto& part : found) {
    report.mismatches.insert(report.mismatches.end(), part.begin(), part.end());
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const Mismatch& a, const Mismatch& b) { return a.n < b.n; });
  report.conforms = detail::conforms(report.mismatches, report.expected_mismatches);
  return report;
}

/// Joins reports over adjacent ranges [a.lo, a.hi] and [a.hi+1, b.hi].
inline RangeReport merge_reports(const RangeReport& a, const RangeReport& b) {
  if (a.method != b.method || a.raw != b.raw) {
    throw std::invalid_argument("merge_reports: reports cover different tests");
  }
  if (b.lo != a.hi + 1) {
    throw std::invalid_argument("merge_reports: ranges are not adjacent");
  }
  RangeReport out{a.method, a.raw, a.lo, b.hi, a.checked + b.checked, a.mismatches, {}, false};
  out.mismatches.insert(out.mismatches.end(), b.mismatches.begin(), b.mismatches.end());
  out.expected_mismatches = expected_mismatches(out.method, out.raw, out.lo, out.hi);
  out.conforms = detail::conforms(out.mismatches, out.expected_mismatches);
  return out;
}

struct BenchRecord {
  Method method;
  std::uint64_t n;
  std::chrono::nanoseconds elapsed;  // median over repetitions
  std::uint64_t multiplications;
};

namespace detail {

// Runs one evaluation; returns the kernel's multiplication count.
// The oracle performs trial divisions only and always reports zero.
inline std::uint64_t run_once(Method method, std::uint64_t n) {
  MulCounter counter;
  switch (method) {
    case Method::wilson: (void)wilson_test(n, &counter); break;
    case Method::theorem1: (void)theorem1_test(n, &counter); break;
    case Method::clement: (void)clement_test(n, &counter); break;
    case Method::theorem2: (void)theorem2_test(n, &counter); break;
    case Method::oracle: {
      volatile bool sink = oracle::trial_division_is_prime(n);
      (void)sink;
      break;
    }
  }
  return counter.count;
}

}  // namespace detail

inline std::vector<BenchRecord> bench_method(Method method, const std::vector<std::uint64_t>& inputs,
                                             std::uint64_t repetitions) {
  if (repetitions < 1) {
    throw std::domain_error("bench_method: repetitions must be >= 1");
  }
  for (std::uint64_t n : inputs) {
    if (n < domain_floor(method)) {
      throw std::domain_error("bench_method: " + std::string(to_string(method)) +
                              " requires n >= " + std::to_string(domain_floor(method)) +
                              ", got " + std::to_string(n));
    }
  }

  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  records.reserve(inputs.size());
  std::vector<std::chrono::nanoseconds> samples(repetitions);
  for (std::uint64_t n : inputs) {
    std::uint64_t mults = 0;
    for (std::uint64_t r = 0; r < repetitions; ++r) {
      const auto start = clock::now();
      mults = detail::run_once(method, n);
      samples[r] = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start);
    }
    std::sort(samples.begin(), samples.end());
    const std::size_t mid = samples.size() / 2;
    const auto median = samples.size() % 2 == 1 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
    records.push_back({method, n, median, mults});
  }
  return records;
}

}  // namespace factoria
