#ifndef HYPERLAB_BRIDGE_HPP
#define HYPERLAB_BRIDGE_HPP

#include <cstddef>
#include <vector>

#include "hyperlab/crisp.hpp"
#include "hyperlab/hyperop.hpp"

namespace hyperlab {

/// A total map between the element sets of two carriers sharing the same
/// sort labels. Sorts are never remapped.
class CarrierMap {
public:
  /// assignment[i] is the target index of source element i.
  /// Throws std::invalid_argument unless the assignment is total, in range,
  /// and the two carriers agree on sorts.
  CarrierMap(CarrierPtr source, CarrierPtr target,
             std::vector<std::size_t> assignment);

  static CarrierMap identity(CarrierPtr carrier);

  const CarrierPtr& source() const { return source_; }
  const CarrierPtr& target() const { return target_; }
  std::size_t apply(std::size_t i) const { return assignment_.at(i); }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

private:
  CarrierPtr source_;
  CarrierPtr target_;
  std::vector<std::size_t> assignment_;
};

/// g after f. Throws std::invalid_argument unless f.target matches g.source.
CarrierMap compose_map(const CarrierMap& g, const CarrierMap& f);

/// Cellwise support: a*gamma*b = {x : (a o gamma o b)(x) > 0}. Throws
/// std::invalid_argument when some cell of h is zero, naming that cell.
CrispGammaHyperop psi(const FuzzyGammaHyperop& h);

/// Cellwise characteristic function. Throws std::invalid_argument when some
/// cell of k is empty, naming that cell.
FuzzyGammaHyperop phi(const CrispGammaHyperop& k);

/// (f(mu))(t) = sup of mu over the preimage of t; 0 on empty preimage.
FuzzySubset image_fuzzy(const CarrierMap& f, const FuzzySubset& mu);

/// f(a o1 gamma o1 b) <= f(a) o2 gamma o2 f(b) for all a, b, gamma.
CheckReport is_fuzzy_homomorphism(const CarrierMap& f, const FuzzyGammaHyperop& h1,
                                  const FuzzyGammaHyperop& h2);

/// f(a *1 gamma *1 b) is a subset of f(a) *2 gamma *2 f(b) for all a, b, gamma.
CheckReport is_crisp_homomorphism(const CarrierMap& f, const CrispGammaHyperop& k1,
                                  const CrispGammaHyperop& k2);

}  // namespace hyperlab

#endif  // HYPERLAB_BRIDGE_HPP
