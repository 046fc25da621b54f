#ifndef HYPERLAB_CUTS_HPP
#define HYPERLAB_CUTS_HPP

#include <cstddef>
#include <vector>

#include "hyperlab/crisp.hpp"
#include "hyperlab/hyperop.hpp"

namespace hyperlab {

/// {t : mu(t) >= p}; the cut at p = 0 is all of M.
CrispSubset cut_subset(const FuzzySubset& mu, const Grade& p);

/// Cellwise cut; the result is partial when some cell cuts to empty.
CrispGammaHyperop cut_structure(const FuzzyGammaHyperop& h, const Grade& p);

/// Sorted set of grades occurring in any cell, 0 removed, 1 appended if
/// absent. Cuts are constant between consecutive occurring grades, so this
/// grid decides every "for all p in [0,1]" quantifier over cuts of h.
std::vector<Grade> distinct_grades(const FuzzyGammaHyperop& h);

/// Checks that fuzzy associativity of h agrees with crisp associativity of
/// every cut on the distinct_grades grid. The two sides always coincide, so
/// a false verdict signals an implementation bug; both are computed by
/// independent code paths.
CheckReport verify_cut_equivalence(const FuzzyGammaHyperop& h);

/// Checks x o gamma o M = chi_M against "every cut reproduces M at x" on the
/// distinct_grades grid; the two sides must agree.
CheckReport verify_reproduction_cut(const FuzzyGammaHyperop& h, std::size_t x,
                                    std::size_t gamma);

}  // namespace hyperlab

#endif  // HYPERLAB_CUTS_HPP
