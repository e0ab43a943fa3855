#pragma once

// Harness for the self-verification suites: seeded context, per-suite
// outcome, tag filtering, timing against pinned limits.

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arithtrace/arithtrace.hpp"

namespace arithtrace::suites {

inline constexpr std::uint64_t kDefaultSeed = 1729;

struct SuiteContext {
  std::uint64_t seed = kDefaultSeed;
  std::mt19937_64 rng;
  /// Phi_n table used by Kronecker checks; the self-test may corrupt it.
  const CyclotomicTable* phi = &default_cyclotomic_table();

  explicit SuiteContext(std::uint64_t s, const CyclotomicTable* table = nullptr) : seed(s), rng(s) {
    if (table) phi = table;
  }

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  long nonzero(long bound) {
    long v = uniform(1, bound);
    return uniform(0, 1) ? v : -v;
  }
  Rational small_rational(long num_bound, long den_bound) { return make_rational(Integer(uniform(-num_bound, num_bound)), Integer(uniform(1, den_bound))); }
};

/// Records checks; keeps a count and the first few failure messages.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return failures_ == 0 && checks_ > 0; }
  long checks() const { return checks_; }
  long failures() const { return failures_; }

  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed";
    if (checks_ == 0) os << ", nothing checked";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& m : messages_) os << "; " << m;
    return os.str();
  }

 private:
  long checks_ = 0, failures_ = 0;
  std::vector<std::string> messages_, notes_;
};

struct Suite {
  int id = 0;
  std::string name;
  std::vector<std::string> tags;
  double limit_seconds = 0;
  std::function<void(SuiteContext&, Checker&)> run;

  bool matches(const std::string& filter) const {
    if (filter.empty()) return true;
    if (name.find(filter) != std::string::npos) return true;
    for (const auto& t : tags)
      if (t.find(filter) != std::string::npos) return true;
    return false;
  }
};

struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool within_limit = true;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

inline SuiteResult run_suite(const Suite& s, std::uint64_t seed, const CyclotomicTable* phi = nullptr) {
  SuiteResult r{s.id, s.name, false, true, "", 0, s.limit_seconds};
  // each suite gets its own stream so filtering does not shift the others
  SuiteContext ctx(seed + static_cast<std::uint64_t>(s.id) * 0x9E3779B97F4A7C15ULL, phi);
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    s.run(ctx, c);
  } catch (const Error& e) {
    c.expect(false, std::string("error ") + e.what());
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.within_limit = r.seconds <= s.limit_seconds;
  r.passed = c.ok() && r.within_limit;
  r.detail = c.summary();
  if (!r.within_limit) r.detail += "; exceeded time limit";
  return r;
}

}  // namespace arithtrace::suites
