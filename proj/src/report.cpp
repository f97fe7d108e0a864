#include "yperiod/report.hpp"

namespace yperiod {

void Report::record(const std::string& check, SystemShape shape, bool ok, const std::string& where,
                    const std::string& expected, const std::string& actual) {
  const std::string label = shape.label();
  counters_[{check, label}].record(ok);
  if (!ok && violations_.size() < kMaxViolations) {
    violations_.push_back({check, label, where, expected, actual});
  }
}

Report& Report::merge(const Report& other) {
  for (const auto& [key, counter] : other.counters_) {
    counters_[key] += counter;
  }
  for (const auto& v : other.violations_) {
    if (violations_.size() >= kMaxViolations) break;
    violations_.push_back(v);
  }
  trials_.insert(trials_.end(), other.trials_.begin(), other.trials_.end());
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
  return *this;
}

Counter Report::total(const std::string& check) const {
  Counter sum;
  for (const auto& [key, counter] : counters_) {
    if (key.check == check) sum += counter;
  }
  return sum;
}

std::uint64_t Report::total_failed() const {
  std::uint64_t n = 0;
  for (const auto& [key, counter] : counters_) n += counter.failed;
  return n;
}

std::uint64_t Report::total_checked() const {
  std::uint64_t n = 0;
  for (const auto& [key, counter] : counters_) n += counter.checked;
  return n;
}

bool Report::any_exhausted() const {
  for (const auto& t : trials_) {
    if (t.exhausted) return true;
  }
  return false;
}

}  // namespace yperiod
