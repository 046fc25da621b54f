#ifndef HYPERLAB_CARRIER_HPP
#define HYPERLAB_CARRIER_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/grade.hpp"

namespace hyperlab {

/// The finite carrier pair (M, Gamma): element labels and sort labels,
/// both non-empty, with stable integer indexing.
class Carrier {
public:
  Carrier(std::vector<std::string> elements, std::vector<std::string> sorts);

  std::size_t size() const { return elements_.size(); }
  std::size_t sort_count() const { return sorts_.size(); }

  const std::string& element_label(std::size_t i) const { return elements_.at(i); }
  const std::string& sort_label(std::size_t j) const { return sorts_.at(j); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::string>& sorts() const { return sorts_; }

  std::optional<std::size_t> element_index(const std::string& label) const;
  std::optional<std::size_t> sort_index(const std::string& label) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.elements_ == b.elements_ && a.sorts_ == b.sorts_;
  }
  friend bool operator!=(const Carrier& a, const Carrier& b) { return !(a == b); }

private:
  std::vector<std::string> elements_;
  std::vector<std::string> sorts_;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

CarrierPtr make_carrier(std::vector<std::string> elements,
                        std::vector<std::string> sorts);

/// Numbered carrier {"0",...,"m-1"} with sorts {"g0",...}; single sort is "g".
CarrierPtr make_numbered_carrier(std::size_t m_size, std::size_t gamma_size = 1);

/// True when both pointers describe the same carrier (by label content).
bool same_carrier(const CarrierPtr& a, const CarrierPtr& b);

/// A subset of M, stored as a membership vector over element indices.
class CrispSubset {
public:
  /// The empty subset.
  explicit CrispSubset(CarrierPtr carrier);
  CrispSubset(CarrierPtr carrier, const std::vector<std::size_t>& members);

  static CrispSubset full(CarrierPtr carrier);

  const CarrierPtr& carrier() const { return carrier_; }
  bool contains(std::size_t i) const { return member_.at(i); }
  void insert(std::size_t i) { member_.at(i) = true; }
  bool empty() const;
  std::size_t count() const;
  bool is_full() const;

  /// Member indices in increasing order.
  std::vector<std::size_t> indices() const;

  bool subset_of(const CrispSubset& other) const;

  friend CrispSubset set_union(const CrispSubset& a, const CrispSubset& b);
  friend CrispSubset set_intersection(const CrispSubset& a, const CrispSubset& b);

  friend bool operator==(const CrispSubset& a, const CrispSubset& b);
  friend bool operator!=(const CrispSubset& a, const CrispSubset& b) {
    return !(a == b);
  }

  /// "{a,b}" with member labels in index order; "{}" when empty.
  std::string to_string() const;

private:
  CarrierPtr carrier_;
  std::vector<bool> member_;
};

/// A total grade assignment over M: a fuzzy subset of the carrier.
class FuzzySubset {
public:
  /// The zero fuzzy subset.
  explicit FuzzySubset(CarrierPtr carrier);
  FuzzySubset(CarrierPtr carrier, std::vector<Grade> grades);

  static FuzzySubset zero(CarrierPtr carrier) { return FuzzySubset(std::move(carrier)); }
  /// Grade 1 exactly on the given subset.
  static FuzzySubset characteristic(const CrispSubset& set);
  /// Grade 1 exactly at one element.
  static FuzzySubset point(CarrierPtr carrier, std::size_t i);
  /// The top element chi_M.
  static FuzzySubset full(CarrierPtr carrier);

  const CarrierPtr& carrier() const { return carrier_; }
  const Grade& at(std::size_t i) const { return grades_.at(i); }
  void set(std::size_t i, Grade g) { grades_.at(i) = g; }
  std::size_t size() const { return grades_.size(); }
  const std::vector<Grade>& grades() const { return grades_; }

  bool is_zero() const;
  bool is_full() const;

  /// Indices with strictly positive grade.
  CrispSubset support() const;

  friend bool operator==(const FuzzySubset& a, const FuzzySubset& b);
  friend bool operator!=(const FuzzySubset& a, const FuzzySubset& b) {
    return !(a == b);
  }

  /// "(g0, g1, ...)" in index order.
  std::string to_string() const;

private:
  CarrierPtr carrier_;
  std::vector<Grade> grades_;
};

/// Pointwise order: mu <= nu. Throws std::invalid_argument on carrier mismatch.
bool leq(const FuzzySubset& mu, const FuzzySubset& nu);

/// Pointwise join / meet. Throw std::invalid_argument on carrier mismatch.
FuzzySubset join(const FuzzySubset& mu, const FuzzySubset& nu);
FuzzySubset meet(const FuzzySubset& mu, const FuzzySubset& nu);

}  // namespace hyperlab

#endif  // HYPERLAB_CARRIER_HPP
