#ifndef HYPERLAB_FAMILIES_HPP
#define HYPERLAB_FAMILIES_HPP

#include <cstdint>
#include <random>

#include "hyperlab/crisp.hpp"
#include "hyperlab/hyperop.hpp"

namespace hyperlab {

// Deterministic structure generators over numbered carriers. Each family is
// associative by construction; the random samplers below relabel elements
// and remap grade levels, which preserves associativity.

/// a o gamma o b = chi_{a,b}.
FuzzyGammaHyperop pair_characteristic_structure(std::size_t m, std::size_t gammas = 1);

/// a o gamma o b = chi_max(a,b) over the chain 0 < 1 < ... < m-1.
FuzzyGammaHyperop max_chain_structure(std::size_t m, std::size_t gammas = 1);

/// The chain "-inf" < "0" < ... < "n" under max, except that any product
/// with the bottom element collapses to chi_bottom.
FuzzyGammaHyperop bottom_absorbing_max_structure(std::size_t n, std::size_t gammas = 1);

/// Carrier "-inf","0",...,"n": cell grade 1/2 at min(a+b, n), 0 elsewhere;
/// sums with the bottom element stay at the bottom.
FuzzyGammaHyperop capped_sum_structure(std::size_t n, std::size_t gammas = 1);

/// Carrier: nonempty subsets of {0..base_size-1}; (A o gamma o B)(C) = 1/3
/// when C is a subset of A union B, 0 otherwise.
FuzzyGammaHyperop subset_cover_structure(std::size_t base_size, std::size_t gammas = 1);

/// Every cell is chi_M; a fuzzy hypergroup.
FuzzyGammaHyperop total_structure(std::size_t m, std::size_t gammas = 1);

/// Every cell equals the given fuzzy subset.
FuzzyGammaHyperop constant_cell_structure(const FuzzySubset& cell);

/// a gamma b = (a + b + gamma) mod m; each sort is a group operation.
GammaSemigroup cyclic_gamma_group(std::size_t m, std::size_t gammas = 1);

// Seed-deterministic random material for property sweeps.

Grade random_grade_on(std::mt19937& rng, std::int64_t denominator);
FuzzySubset random_fuzzy_subset(std::mt19937& rng, const CarrierPtr& carrier,
                                std::int64_t denominator);
FuzzySubset random_nonzero_fuzzy_subset(std::mt19937& rng, const CarrierPtr& carrier,
                                        std::int64_t denominator);

/// Uniform grade table; not associative in general.
FuzzyGammaHyperop random_structure(std::mt19937& rng, std::size_t m,
                                   std::size_t gammas, std::int64_t denominator);

/// Commutative base products a * e_gamma * b with a random per-sort element;
/// always associative.
GammaSemigroup random_gamma_semigroup(std::mt19937& rng, std::size_t m,
                                      std::size_t gammas);

/// Random mu with mu(a gamma b) >= mu(a) meet mu(b) everywhere, obtained by
/// raising products to a fixpoint; never zero.
FuzzySubset random_compatible_fuzzy_sub(std::mt19937& rng, const GammaSemigroup& op,
                                        std::int64_t denominator);

/// A random pick across the families above, relabeled by a random element
/// permutation and pushed through a random increasing grade remap.
FuzzyGammaHyperop random_associative_structure(std::mt19937& rng, std::size_t max_m,
                                               std::size_t max_gammas);

// Fixpoint closures producing hypothesis-satisfying subsets.

/// Smallest sub-hypersemigroup above mu on the ambient grade set.
FuzzySubset sub_hypersemigroup_closure(const FuzzyGammaHyperop& h, FuzzySubset mu);

/// Smallest bi-ideal above mu.
FuzzySubset bi_ideal_closure(const FuzzyGammaHyperop& h, FuzzySubset mu);

}  // namespace hyperlab

#endif  // HYPERLAB_FAMILIES_HPP
