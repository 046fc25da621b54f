#ifndef HYPERLAB_REPORT_HPP
#define HYPERLAB_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperlab {

/// Where a check failed: ordered (name, value) bindings naming the violating
/// tuple, plus the two rendered values that should have agreed.
struct Witness {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string lhs;
  std::string rhs;

  /// "a=1, gamma=g, r=1, lhs=1, rhs=0"
  std::string to_string() const;
};

/// Outcome of a structural check. verdict == false iff a witness is present.
struct CheckReport {
  bool verdict = true;
  std::optional<Witness> witness;

  static CheckReport pass() { return CheckReport{}; }
  static CheckReport fail(Witness w) { return CheckReport{false, std::move(w)}; }

  explicit operator bool() const { return verdict; }
};

}  // namespace hyperlab

#endif  // HYPERLAB_REPORT_HPP
