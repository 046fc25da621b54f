#ifndef HYPERLAB_HYPEROP_HPP
#define HYPERLAB_HYPEROP_HPP

#include <cstddef>
#include <vector>

#include "hyperlab/carrier.hpp"
#include "hyperlab/crisp.hpp"
#include "hyperlab/grade.hpp"
#include "hyperlab/report.hpp"

namespace hyperlab {

/// A fuzzy Gamma-hyperoperation: a total table (a, gamma, b) -> fuzzy subset
/// of M. Immutable after construction; all checks are pure.
class FuzzyGammaHyperop {
public:
  /// Cells indexed by (a * sort_count + gamma) * m + b.
  /// With require_proper (the default), a zero cell is rejected; pass false
  /// to represent improper structures.
  FuzzyGammaHyperop(CarrierPtr carrier, std::vector<FuzzySubset> cells,
                    bool require_proper = true);

  const CarrierPtr& carrier() const { return carrier_; }
  std::size_t size() const { return carrier_->size(); }
  std::size_t sort_count() const { return carrier_->sort_count(); }

  const FuzzySubset& cell(std::size_t a, std::size_t gamma, std::size_t b) const;
  const std::vector<FuzzySubset>& cells() const { return cells_; }

  /// True when no cell is the zero fuzzy subset.
  bool is_proper() const;

  friend bool operator==(const FuzzyGammaHyperop& x, const FuzzyGammaHyperop& y);
  friend bool operator!=(const FuzzyGammaHyperop& x, const FuzzyGammaHyperop& y) {
    return !(x == y);
  }

private:
  CarrierPtr carrier_;
  std::vector<FuzzySubset> cells_;
};

/// a o gamma o b: plain table lookup.
const FuzzySubset& compose_elem(const FuzzyGammaHyperop& h, std::size_t a,
                                std::size_t gamma, std::size_t b);

/// (a o gamma o mu)(r) = sup_t ((a o gamma o t)(r) meet mu(t)), 0 for mu = 0.
FuzzySubset compose_left(const FuzzyGammaHyperop& h, std::size_t a,
                         std::size_t gamma, const FuzzySubset& mu);

/// (mu o gamma o a)(r) = sup_t (mu(t) meet (t o gamma o a)(r)), 0 for mu = 0.
FuzzySubset compose_right(const FuzzyGammaHyperop& h, const FuzzySubset& mu,
                          std::size_t gamma, std::size_t a);

/// (mu o gamma o nu)(t) = sup_{p,q} (mu(p) meet (p o gamma o q)(t) meet nu(q)).
FuzzySubset compose_fuzzy(const FuzzyGammaHyperop& h, const FuzzySubset& mu,
                          std::size_t gamma, const FuzzySubset& nu);

/// Left fold of compose_fuzzy over factors[0] sorts[0] factors[1] ... .
/// Requires factors.size() >= 2 and sorts.size() == factors.size() - 1;
/// bracketing is immaterial on associative structures.
FuzzySubset compose_many(const FuzzyGammaHyperop& h,
                         const std::vector<FuzzySubset>& factors,
                         const std::vector<std::size_t>& sorts);

/// (a o alpha o b) o beta o c == a o alpha o (b o beta o c) for all tuples,
/// both sides through the element-level sup-min formulas. The witness is the
/// lexicographically first violating (a, alpha, b, beta, c, r).
CheckReport is_associative(const FuzzyGammaHyperop& h);

/// Associative and x o gamma o M = M o gamma o x = chi_M for all x, gamma.
CheckReport is_hypergroup(const FuzzyGammaHyperop& h);

/// The one-point construction over a Gamma-semigroup: cell (a, gamma, b)
/// carries grade mu(a) meet mu(b) at a gamma b and 0 elsewhere.
/// Requires op associative, mu != 0, and mu(a gamma b) >= mu(a) meet mu(b)
/// for all a, b, gamma; throws std::invalid_argument otherwise.
FuzzyGammaHyperop from_gamma_semigroup_and_fuzzy_sub(const GammaSemigroup& op,
                                                     const FuzzySubset& mu);

}  // namespace hyperlab

#endif  // HYPERLAB_HYPEROP_HPP
