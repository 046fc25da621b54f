#ifndef HYPERLAB_CRISP_HPP
#define HYPERLAB_CRISP_HPP

#include <cstddef>
#include <vector>

#include "hyperlab/carrier.hpp"
#include "hyperlab/report.hpp"

namespace hyperlab {

/// A crisp Gamma-hyperoperation table: (a, gamma, b) -> subset of M.
///
/// Cells may be empty only on structures flagged partial; a table with all
/// cells non-empty and associative is a Gamma-hypersemigroup, and with all
/// cells singletons additionally a Gamma-semigroup.
class CrispGammaHyperop {
public:
  /// Cells indexed by (a * sort_count + gamma) * m + b. The partial flag is
  /// derived: set iff some cell is empty.
  CrispGammaHyperop(CarrierPtr carrier, std::vector<CrispSubset> cells);

  const CarrierPtr& carrier() const { return carrier_; }
  const CrispSubset& cell(std::size_t a, std::size_t gamma, std::size_t b) const;
  bool partial() const { return partial_; }

  /// True when every cell is a singleton (the Gamma-semigroup shape).
  bool all_singletons() const;

  friend bool operator==(const CrispGammaHyperop& x, const CrispGammaHyperop& y);
  friend bool operator!=(const CrispGammaHyperop& x, const CrispGammaHyperop& y) {
    return !(x == y);
  }

private:
  CarrierPtr carrier_;
  std::vector<CrispSubset> cells_;
  bool partial_ = false;
};

/// A crisp Gamma-semigroup: single-valued ternary product M x Gamma x M -> M.
class GammaSemigroup {
public:
  /// Products indexed by (a * sort_count + gamma) * m + b, values are
  /// element indices. Associativity is not checked here; see is_associative.
  GammaSemigroup(CarrierPtr carrier, std::vector<std::size_t> products);

  const CarrierPtr& carrier() const { return carrier_; }
  std::size_t product(std::size_t a, std::size_t gamma, std::size_t b) const;

  /// (a alpha b) beta c == a alpha (b beta c) for all tuples.
  CheckReport is_associative() const;

  /// The same table as a singleton-celled hyperoperation.
  CrispGammaHyperop as_hyperop() const;

private:
  CarrierPtr carrier_;
  std::vector<std::size_t> products_;
};

/// A gamma B: union of cells over A x B; empty when A or B is empty.
CrispSubset crisp_product(const CrispGammaHyperop& k, const CrispSubset& a,
                          std::size_t gamma, const CrispSubset& b);

/// Set equality of both union-bracketings for all x, y, z and sort pairs.
CheckReport crisp_is_associative(const CrispGammaHyperop& k);

}  // namespace hyperlab

#endif  // HYPERLAB_CRISP_HPP
