#include "hyperlab/cuts.hpp"

#include <algorithm>

namespace hyperlab {

CrispSubset cut_subset(const FuzzySubset& mu, const Grade& p) {
  CrispSubset out(mu.carrier());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.at(i) >= p) {
      out.insert(i);
    }
  }
  return out;
}

CrispGammaHyperop cut_structure(const FuzzyGammaHyperop& h, const Grade& p) {
  std::vector<CrispSubset> cells;
  cells.reserve(h.cells().size());
  for (const auto& cell : h.cells()) {
    cells.push_back(cut_subset(cell, p));
  }
  return CrispGammaHyperop(h.carrier(), std::move(cells));
}

std::vector<Grade> distinct_grades(const FuzzyGammaHyperop& h) {
  std::vector<Grade> grades;
  for (const auto& cell : h.cells()) {
    for (const auto& g : cell.grades()) {
      if (!g.is_zero()) {
        grades.push_back(g);
      }
    }
  }
  std::sort(grades.begin(), grades.end());
  grades.erase(std::unique(grades.begin(), grades.end()), grades.end());
  if (grades.empty() || !grades.back().is_one()) {
    grades.push_back(Grade::one());
  }
  return grades;
}

CheckReport verify_cut_equivalence(const FuzzyGammaHyperop& h) {
  const bool fuzzy_side = is_associative(h).verdict;
  bool crisp_side = true;
  Grade failing_p = Grade::zero();
  for (const Grade& p : distinct_grades(h)) {
    if (!crisp_is_associative(cut_structure(h, p)).verdict) {
      crisp_side = false;
      failing_p = p;
      break;
    }
  }
  if (fuzzy_side == crisp_side) {
    return CheckReport::pass();
  }
  Witness w;
  w.bindings = {{"fuzzy_associative", fuzzy_side ? "yes" : "no"},
                {"all_cuts_associative", crisp_side ? "yes" : "no"}};
  if (!crisp_side) {
    w.bindings.emplace_back("failing_p", failing_p.to_string());
  }
  return CheckReport::fail(std::move(w));
}

CheckReport verify_reproduction_cut(const FuzzyGammaHyperop& h, std::size_t x,
                                    std::size_t gamma) {
  const FuzzySubset product = compose_left(h, x, gamma, FuzzySubset::full(h.carrier()));
  const bool fuzzy_side = product.is_full();

  bool crisp_side = true;
  Grade failing_p = Grade::zero();
  for (const Grade& p : distinct_grades(h)) {
    const CrispGammaHyperop cut = cut_structure(h, p);
    const CrispSubset reach =
        crisp_product(cut, CrispSubset(h.carrier(), {x}), gamma,
                      CrispSubset::full(h.carrier()));
    if (!reach.is_full()) {
      crisp_side = false;
      failing_p = p;
      break;
    }
  }
  if (fuzzy_side == crisp_side) {
    return CheckReport::pass();
  }
  Witness w;
  w.bindings = {{"x", h.carrier()->element_label(x)},
                {"gamma", h.carrier()->sort_label(gamma)},
                {"fuzzy_reproduces", fuzzy_side ? "yes" : "no"},
                {"all_cuts_reproduce", crisp_side ? "yes" : "no"}};
  if (!crisp_side) {
    w.bindings.emplace_back("failing_p", failing_p.to_string());
  }
  return CheckReport::fail(std::move(w));
}

}  // namespace hyperlab
