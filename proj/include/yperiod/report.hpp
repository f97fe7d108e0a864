#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yperiod/lattice.hpp"

namespace yperiod {

struct Counter {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;

  void record(bool ok) {
    ++checked;
    ok ? ++passed : ++failed;
  }
  Counter& operator+=(const Counter& o) {
    checked += o.checked;
    passed += o.passed;
    failed += o.failed;
    return *this;
  }
  friend bool operator==(const Counter&, const Counter&) = default;
};

// A failed check: where it happened and the two sides that disagreed.
struct Violation {
  std::string check;
  std::string shape;
  std::string where;
  std::string expected;
  std::string actual;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct TrialMeta {
  std::string shape;
  std::uint64_t seed = 0;
  int retries = 0;
  bool transposed = false;
  bool exhausted = false;
  double wall_ms = 0.0;
  // wall time is deliberately excluded from equality
  friend bool operator==(const TrialMeta& a, const TrialMeta& b) {
    return a.shape == b.shape && a.seed == b.seed && a.retries == b.retries &&
           a.transposed == b.transposed && a.exhausted == b.exhausted;
  }
};

struct CounterKey {
  std::string check;
  std::string shape;
  friend auto operator<=>(const CounterKey&, const CounterKey&) = default;
};

class Report {
 public:
  // Keeps at most this many violation records; counters are always exact.
  static constexpr std::size_t kMaxViolations = 200;

  void record(const std::string& check, SystemShape shape, bool ok, const std::string& where = {},
              const std::string& expected = {}, const std::string& actual = {});
  // Bumps a counter without keeping a violation record.
  void tally(const std::string& check, SystemShape shape, bool ok) {
    counters_[{check, shape.label()}].record(ok);
  }

  void add_trial(TrialMeta meta) { trials_.push_back(std::move(meta)); }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  // Associative merge; order of arguments fixes violation/trial order only.
  Report& merge(const Report& other);

  const std::map<CounterKey, Counter>& counters() const { return counters_; }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<TrialMeta>& trials() const { return trials_; }
  const std::vector<std::string>& notes() const { return notes_; }
  std::map<CounterKey, Counter>& mutable_counters() { return counters_; }
  std::vector<Violation>& mutable_violations() { return violations_; }
  std::vector<TrialMeta>& mutable_trials() { return trials_; }

  // Sum over shapes for one check name.
  Counter total(const std::string& check) const;
  std::uint64_t total_failed() const;
  std::uint64_t total_checked() const;
  bool all_passed() const { return total_failed() == 0; }
  bool any_exhausted() const;

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::map<CounterKey, Counter> counters_;
  std::vector<Violation> violations_;
  std::vector<TrialMeta> trials_;
  std::vector<std::string> notes_;
};

}  // namespace yperiod
