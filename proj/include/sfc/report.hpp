#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfc/scalars.hpp"

namespace sfc {

/// Malformed input data: out-of-range indices, entries outside the allowed
/// support, missing required fields. Raised before any verification runs.
class StructureError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A verification precondition failed (e.g. lifting data that does not
/// satisfy its own identity).
class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  /// Index tuple of the failing instance; meaning given by
  /// CheckReport::index_names.
  std::vector<int> index;
  std::string detail;
  std::optional<Cyclotomic> lhs;
  std::optional<Cyclotomic> rhs;
};

struct CheckReport {
  std::string name;
  std::vector<std::string> index_names;
  /// First max_violations violations in index order.
  std::vector<Violation> violations;
  std::size_t total_violations = 0;
  /// Required table entries that were absent (treated as zero).
  std::size_t missing_entries = 0;
  std::size_t instances_checked = 0;
  std::vector<std::string> notes;

  bool passed() const { return total_violations == 0 && missing_entries == 0; }
};

struct VerifyOptions {
  std::size_t max_violations = 25;
  unsigned jobs = 1;
};

/// Bounded violation sink used by the checkers.
class ViolationCollector {
public:
  explicit ViolationCollector(std::size_t limit) : limit_(limit) {}

  void add(Violation v) {
    ++total_;
    if (kept_.size() < limit_) kept_.push_back(std::move(v));
  }
  std::size_t total() const { return total_; }
  std::vector<Violation>& kept() { return kept_; }

  /// Appends another collector's results after this one's.
  void merge(ViolationCollector&& other) {
    total_ += other.total_;
    for (auto& v : other.kept_) {
      if (kept_.size() >= limit_) break;
      kept_.push_back(std::move(v));
    }
  }

  void write_to(CheckReport& report) {
    report.total_violations = total_;
    report.violations = std::move(kept_);
  }

private:
  std::size_t limit_;
  std::size_t total_ = 0;
  std::vector<Violation> kept_;
};

}  // namespace sfc
