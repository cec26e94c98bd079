// Verification report entries, JSON emission and the seeded sampler.
#pragma once

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace jacklr {

inline constexpr const char* kVersion = "1.0.0";

enum class Status { Pass, Fail, Skip };
const char* status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string details;
  std::vector<std::string> witnesses;  // canonical polynomial text; nonempty on fail
  long long elapsed_ms = 0;

  bool ok() const { return status != Status::Fail; }
  // set status from a predicate; a failing check gets `witness` appended
  Check& expect(bool cond, const std::string& witness);
};

struct ReportMeta {
  std::string version;
  std::uint64_t seed = 42;
  int degree_cap = 12;
  int corpus_bound = 7;
};

struct Report {
  ReportMeta meta;
  std::vector<Check> checks;

  bool ok() const;
  int failures() const;
  std::string to_json() const;  // two-space indented, stable key order
};

// runs f() -> Check and stamps elapsed_ms
template <class F>
Check timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  Check c = f();
  c.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

/* 64-bit LCG x' = 6364136223846793005 x + 1442695040888963407 (mod 2^64)
 * seeded with x0 = seed.  A draw in [0,n) is (x' >> 33) % n. */
using Lcg64 = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0ULL>;
inline int draw(Lcg64& g, int n) { return static_cast<int>((g() >> 33) % static_cast<std::uint64_t>(n)); }

}  // namespace jacklr
