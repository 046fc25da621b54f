#ifndef HYPERLAB_IDEALS_HPP
#define HYPERLAB_IDEALS_HPP

#include <cstddef>

#include "hyperlab/hyperop.hpp"

namespace hyperlab {

// All predicates below assume h is associative; they take the structure
// explicitly so one subset can be probed against several structures.

/// mu o gamma o mu <= mu for every sort.
CheckReport is_sub_hypersemigroup(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// a o gamma o mu <= mu for all a, gamma.
CheckReport is_left_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// mu o gamma o a <= mu for all a, gamma (the mirrored dual).
CheckReport is_right_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// chi_M o gamma o mu <= mu for every sort; agrees with is_left_ideal.
CheckReport left_ideal_via_M(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// mu o gamma o chi_M <= mu for every sort; agrees with is_right_ideal.
CheckReport right_ideal_via_M(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// The smallest left ideal containing mu: mu joined with M o gamma o mu over
/// every sort. Throws std::invalid_argument when mu is zero.
FuzzySubset generate_left_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// Mirrored dual of generate_left_ideal.
FuzzySubset generate_right_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// mu joined with M o gamma o mu for the one given sort only. On a single
/// sort this is the generated left ideal; with several sorts it can fail
/// closure under the other sorts.
FuzzySubset generate_left_ideal_single_sort(const FuzzyGammaHyperop& h,
                                            const FuzzySubset& mu,
                                            std::size_t gamma);

/// Sub-hypersemigroup with mu o alpha o y o beta o mu <= mu for all y and
/// sort pairs.
CheckReport is_bi_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// mu o alpha o M o beta o mu <= mu for all sort pairs; agrees with
/// is_bi_ideal on sub-hypersemigroups.
CheckReport bi_ideal_via_M(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// x o alpha o mu o beta o y <= mu for all x, y and sort pairs.
CheckReport is_interior_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// M o alpha o mu o beta o M <= mu for all sort pairs; agrees with
/// is_interior_ideal.
CheckReport interior_ideal_via_M(const FuzzyGammaHyperop& h, const FuzzySubset& mu);

/// For any mu and a bi-ideal nu, checks that mu o gamma o nu and
/// nu o gamma o mu are bi-ideals for every sort. The law always holds, so
/// false signals a bug. Throws when nu is not a bi-ideal.
CheckReport ideal_products_are_bi_ideals(const FuzzyGammaHyperop& h,
                                         const FuzzySubset& mu,
                                         const FuzzySubset& nu);

}  // namespace hyperlab

#endif  // HYPERLAB_IDEALS_HPP
