#ifndef HYPERLAB_RELATIONS_HPP
#define HYPERLAB_RELATIONS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlab/bridge.hpp"
#include "hyperlab/crisp.hpp"
#include "hyperlab/hyperop.hpp"

namespace hyperlab {

/// An equivalence relation on M, stored as a partition so reflexivity,
/// symmetry and transitivity hold by construction. Classes are numbered by
/// their least element; labels render as "{a,b}".
class EquivRelation {
public:
  /// class_of[i] names the block of element i; block ids are renumbered
  /// canonically by first occurrence.
  EquivRelation(CarrierPtr carrier, const std::vector<std::size_t>& class_of);

  static EquivRelation discrete(CarrierPtr carrier);
  static EquivRelation universal(CarrierPtr carrier);
  /// Throws std::invalid_argument unless blocks form a partition of M.
  static EquivRelation from_blocks(CarrierPtr carrier,
                                   const std::vector<std::vector<std::size_t>>& blocks);

  const CarrierPtr& carrier() const { return carrier_; }
  std::size_t class_count() const { return blocks_.size(); }
  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }
  const CrispSubset& block(std::size_t c) const { return blocks_.at(c); }
  bool related(std::size_t a, std::size_t b) const {
    return class_of_.at(a) == class_of_.at(b);
  }

  std::string class_label(std::size_t c) const { return blocks_.at(c).to_string(); }

  /// Indices of the classes meeting the support of mu, increasing.
  std::vector<std::size_t> classes_meeting(const FuzzySubset& mu) const;
  std::vector<std::size_t> classes_meeting(const CrispSubset& s) const;

  /// One element per class, labeled by class_label; sorts are inherited.
  CarrierPtr quotient_carrier() const;

  friend bool operator==(const EquivRelation& a, const EquivRelation& b);
  friend bool operator!=(const EquivRelation& a, const EquivRelation& b) {
    return !(a == b);
  }

private:
  CarrierPtr carrier_;
  std::vector<std::size_t> class_of_;
  std::vector<CrispSubset> blocks_;
};

/// Each support element of mu is related to some support element of nu and
/// conversely; equivalently the supports meet the same classes.
bool rel_extends(const EquivRelation& rho, const FuzzySubset& mu, const FuzzySubset& nu);

/// aρb implies a o gamma o c extends-to b o gamma o c and c o gamma o a
/// extends-to c o gamma o b, for every c and gamma.
CheckReport is_fuzzy_regular(const FuzzyGammaHyperop& h, const EquivRelation& rho);

/// The two-sided form: aρa' and bρb' imply a o gamma o b extends-to
/// a' o gamma o b'. Agrees with is_fuzzy_regular on every input.
CheckReport is_fuzzy_regular_pairwise(const FuzzyGammaHyperop& h,
                                      const EquivRelation& rho);

/// aρb and cρd imply every support element of a o gamma o c is related to
/// every support element of b o gamma o d.
CheckReport is_fuzzy_strongly_regular(const FuzzyGammaHyperop& h,
                                      const EquivRelation& rho);

/// Crisp analogue of is_fuzzy_regular on hyperproduct cells.
CheckReport is_crisp_regular(const CrispGammaHyperop& k, const EquivRelation& rho);

/// Crisp analogue of is_fuzzy_strongly_regular.
CheckReport is_crisp_strongly_regular(const CrispGammaHyperop& k,
                                      const EquivRelation& rho);

/// Raised by quotient_crisp when the cell at some class pair depends on the
/// choice of representatives, i.e. rho is not regular.
class QuotientError : public std::runtime_error {
public:
  explicit QuotientError(Witness w);
  const Witness& witness() const { return witness_; }

private:
  Witness witness_;
};

/// Table over M/rho: cell (A, gamma, B) is the set of classes meeting the
/// support of a o gamma o b. Independence of the representatives a, b is
/// verified exhaustively; QuotientError carries the violating pair.
CrispGammaHyperop quotient_crisp(const FuzzyGammaHyperop& h, const EquivRelation& rho);

struct FuzzyQuotient {
  FuzzyGammaHyperop structure;
  /// True when rho passed is_fuzzy_strongly_regular; the table is computed
  /// either way.
  bool strongly_regular;
};

/// Fuzzy table over M/rho: grade of class C in (A, gamma, B) is the sup of
/// (a o gamma o b)(c) over representatives a in A, b in B, c in C.
FuzzyQuotient quotient_fuzzy(const FuzzyGammaHyperop& h, const EquivRelation& rho);

/// Fuzzy regularity of h and crisp regularity of its support structure must
/// agree, in both the plain and the strong form. Disagreement signals a bug.
CheckReport verify_regular_transfer(const FuzzyGammaHyperop& h, const EquivRelation& rho);

/// Strong regularity of rho must coincide with the crisp quotient being a
/// single-valued associative table. Propagates QuotientError for non-regular
/// rho. Disagreement signals a bug.
CheckReport verify_strong_quotient_is_semigroup(const FuzzyGammaHyperop& h,
                                                const EquivRelation& rho);

}  // namespace hyperlab

#endif  // HYPERLAB_RELATIONS_HPP
