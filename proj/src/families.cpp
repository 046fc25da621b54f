#include "hyperlab/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "hyperlab/search.hpp"

namespace hyperlab {

namespace {

std::vector<FuzzySubset> empty_cells(const CarrierPtr& carrier) {
  std::size_t n = carrier->size() * carrier->sort_count() * carrier->size();
  return std::vector<FuzzySubset>(n, FuzzySubset(carrier));
}

std::size_t cell_index(const CarrierPtr& carrier, std::size_t a, std::size_t g,
                       std::size_t b) {
  return (a * carrier->sort_count() + g) * carrier->size() + b;
}

/// Carrier "-inf", "0", ..., "n": index 0 is the bottom element.
CarrierPtr chain_with_bottom(std::size_t n, std::size_t gammas) {
  std::vector<std::string> labels{"-inf"};
  for (std::size_t i = 0; i <= n; ++i) labels.push_back(std::to_string(i));
  return make_carrier(std::move(labels), make_numbered_carrier(1, gammas)->sorts());
}

}  // namespace

FuzzyGammaHyperop pair_characteristic_structure(std::size_t m, std::size_t gammas) {
  CarrierPtr carrier = make_numbered_carrier(m, gammas);
  auto cells = empty_cells(carrier);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t g = 0; g < gammas; ++g) {
      for (std::size_t b = 0; b < m; ++b) {
        FuzzySubset cell(carrier);
        cell.set(a, Grade::one());
        cell.set(b, Grade::one());
        cells[cell_index(carrier, a, g, b)] = std::move(cell);
      }
    }
  }
  return FuzzyGammaHyperop(carrier, std::move(cells));
}

FuzzyGammaHyperop max_chain_structure(std::size_t m, std::size_t gammas) {
  CarrierPtr carrier = make_numbered_carrier(m, gammas);
  auto cells = empty_cells(carrier);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t g = 0; g < gammas; ++g) {
      for (std::size_t b = 0; b < m; ++b) {
        cells[cell_index(carrier, a, g, b)] =
            FuzzySubset::point(carrier, std::max(a, b));
      }
    }
  }
  return FuzzyGammaHyperop(carrier, std::move(cells));
}

FuzzyGammaHyperop bottom_absorbing_max_structure(std::size_t n, std::size_t gammas) {
  CarrierPtr carrier = chain_with_bottom(n, gammas);
  const std::size_t m = carrier->size();
  auto cells = empty_cells(carrier);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t g = 0; g < gammas; ++g) {
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t target = (a == 0 || b == 0) ? 0 : std::max(a, b);
        cells[cell_index(carrier, a, g, b)] = FuzzySubset::point(carrier, target);
      }
    }
  }
  return FuzzyGammaHyperop(carrier, std::move(cells));
}

FuzzyGammaHyperop capped_sum_structure(std::size_t n, std::size_t gammas) {
  CarrierPtr carrier = chain_with_bottom(n, gammas);
  const std::size_t m = carrier->size();
  auto cells = empty_cells(carrier);
  const Grade half(1, 2);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t g = 0; g < gammas; ++g) {
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t target = 0;
        if (a != 0 && b != 0) {
          target = std::min((a - 1) + (b - 1), n) + 1;
        }
        FuzzySubset cell(carrier);
        cell.set(target, half);
        cells[cell_index(carrier, a, g, b)] = std::move(cell);
      }
    }
  }
  return FuzzyGammaHyperop(carrier, std::move(cells));
}

FuzzyGammaHyperop subset_cover_structure(std::size_t base_size, std::size_t gammas) {
  if (base_size == 0 || base_size > 16) {
    throw std::invalid_argument("subset_cover_structure: base size out of range");
  }
  const std::size_t m = (std::size_t{1} << base_size) - 1;
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t mask = 1; mask <= m; ++mask) {
    std::string label = "{";
    bool first = true;
    for (std::size_t i = 0; i < base_size; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      if (!first) label += ",";
      label += std::to_string(i);
      first = false;
    }
    label += "}";
    labels.push_back(std::move(label));
  }
  CarrierPtr carrier =
      make_carrier(std::move(labels), make_numbered_carrier(1, gammas)->sorts());
  auto cells = empty_cells(carrier);
  const Grade third(1, 3);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t g = 0; g < gammas; ++g) {
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t cover = (a + 1) | (b + 1);
        FuzzySubset cell(carrier);
        for (std::size_t c = 0; c < m; ++c) {
          if (((c + 1) & ~cover) == 0) cell.set(c, third);
        }
        cells[cell_index(carrier, a, g, b)] = std::move(cell);
      }
    }
  }
  return FuzzyGammaHyperop(carrier, std::move(cells));
}

FuzzyGammaHyperop total_structure(std::size_t m, std::size_t gammas) {
  CarrierPtr carrier = make_numbered_carrier(m, gammas);
  std::vector<FuzzySubset> cells(m * gammas * m, FuzzySubset::full(carrier));
  return FuzzyGammaHyperop(carrier, std::move(cells));
}

FuzzyGammaHyperop constant_cell_structure(const FuzzySubset& cell) {
  const CarrierPtr& carrier = cell.carrier();
  std::size_t n = carrier->size() * carrier->sort_count() * carrier->size();
  std::vector<FuzzySubset> cells(n, cell);
  return FuzzyGammaHyperop(carrier, std::move(cells), false);
}

GammaSemigroup cyclic_gamma_group(std::size_t m, std::size_t gammas) {
  CarrierPtr carrier = make_numbered_carrier(m, gammas);
  std::vector<std::size_t> products(m * gammas * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t g = 0; g < gammas; ++g) {
      for (std::size_t b = 0; b < m; ++b) {
        products[cell_index(carrier, a, g, b)] = (a + b + g) % m;
      }
    }
  }
  return GammaSemigroup(carrier, std::move(products));
}

Grade random_grade_on(std::mt19937& rng, std::int64_t denominator) {
  std::uniform_int_distribution<std::int64_t> dist(0, denominator);
  return Grade(dist(rng), denominator);
}

FuzzySubset random_fuzzy_subset(std::mt19937& rng, const CarrierPtr& carrier,
                                std::int64_t denominator) {
  FuzzySubset out(carrier);
  for (std::size_t i = 0; i < carrier->size(); ++i) {
    out.set(i, random_grade_on(rng, denominator));
  }
  return out;
}

FuzzySubset random_nonzero_fuzzy_subset(std::mt19937& rng, const CarrierPtr& carrier,
                                        std::int64_t denominator) {
  FuzzySubset out = random_fuzzy_subset(rng, carrier, denominator);
  if (out.is_zero()) {
    std::uniform_int_distribution<std::size_t> at(0, carrier->size() - 1);
    std::uniform_int_distribution<std::int64_t> num(1, denominator);
    out.set(at(rng), Grade(num(rng), denominator));
  }
  return out;
}

FuzzyGammaHyperop random_structure(std::mt19937& rng, std::size_t m,
                                   std::size_t gammas, std::int64_t denominator) {
  CarrierPtr carrier = make_numbered_carrier(m, gammas);
  std::vector<FuzzySubset> cells;
  cells.reserve(m * gammas * m);
  for (std::size_t k = 0; k < m * gammas * m; ++k) {
    cells.push_back(random_fuzzy_subset(rng, carrier, denominator));
  }
  return FuzzyGammaHyperop(carrier, std::move(cells), false);
}

GammaSemigroup random_gamma_semigroup(std::mt19937& rng, std::size_t m,
                                      std::size_t gammas) {
  CarrierPtr carrier = make_numbered_carrier(m, gammas);
  std::uniform_int_distribution<std::size_t> elem(0, m - 1);
  std::uniform_int_distribution<int> kind_dist(0, 2);
  int kind = kind_dist(rng);
  std::vector<std::size_t> mid(gammas);
  for (std::size_t g = 0; g < gammas; ++g) mid[g] = elem(rng);
  std::vector<std::size_t> products(m * gammas * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t g = 0; g < gammas; ++g) {
      for (std::size_t b = 0; b < m; ++b) {
        std::size_t e = mid[g];
        std::size_t p = 0;
        switch (kind) {
          case 0: p = (a + e + b) % m; break;
          case 1: p = std::max({a, e, b}); break;
          default: p = std::min(a + e + b, m - 1); break;
        }
        products[cell_index(carrier, a, g, b)] = p;
      }
    }
  }
  return GammaSemigroup(carrier, std::move(products));
}

FuzzySubset random_compatible_fuzzy_sub(std::mt19937& rng, const GammaSemigroup& op,
                                        std::int64_t denominator) {
  const CarrierPtr& carrier = op.carrier();
  FuzzySubset mu = random_nonzero_fuzzy_subset(rng, carrier, denominator);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < carrier->size(); ++a) {
      for (std::size_t g = 0; g < carrier->sort_count(); ++g) {
        for (std::size_t b = 0; b < carrier->size(); ++b) {
          std::size_t p = op.product(a, g, b);
          Grade bound = meet(mu.at(a), mu.at(b));
          if (mu.at(p) < bound) {
            mu.set(p, bound);
            changed = true;
          }
        }
      }
    }
  }
  return mu;
}

namespace {

FuzzyGammaHyperop remap_grades(std::mt19937& rng, const FuzzyGammaHyperop& h) {
  std::vector<Grade> levels;
  for (const FuzzySubset& cell : h.cells()) {
    for (const Grade& g : cell.grades()) {
      if (!g.is_zero()) levels.push_back(g);
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.empty() || levels.size() > 5) return h;
  std::uniform_int_distribution<std::int64_t> den_dist(
      static_cast<std::int64_t>(levels.size()), 6);
  std::int64_t den = den_dist(rng);
  std::vector<std::int64_t> numerators(static_cast<std::size_t>(den));
  std::iota(numerators.begin(), numerators.end(), 1);
  std::shuffle(numerators.begin(), numerators.end(), rng);
  numerators.resize(levels.size());
  std::sort(numerators.begin(), numerators.end());
  std::vector<FuzzySubset> cells;
  cells.reserve(h.cells().size());
  for (const FuzzySubset& cell : h.cells()) {
    FuzzySubset next(h.carrier());
    for (std::size_t r = 0; r < cell.size(); ++r) {
      const Grade& g = cell.at(r);
      if (g.is_zero()) continue;
      std::size_t at = static_cast<std::size_t>(
          std::lower_bound(levels.begin(), levels.end(), g) - levels.begin());
      next.set(r, Grade(numerators[at], den));
    }
    cells.push_back(std::move(next));
  }
  return FuzzyGammaHyperop(h.carrier(), std::move(cells), false);
}

FuzzyGammaHyperop gamma_semigroup_image(const GammaSemigroup& op) {
  const CarrierPtr& carrier = op.carrier();
  std::vector<FuzzySubset> cells;
  cells.reserve(carrier->size() * carrier->sort_count() * carrier->size());
  for (std::size_t a = 0; a < carrier->size(); ++a) {
    for (std::size_t g = 0; g < carrier->sort_count(); ++g) {
      for (std::size_t b = 0; b < carrier->size(); ++b) {
        cells.push_back(FuzzySubset::point(carrier, op.product(a, g, b)));
      }
    }
  }
  return FuzzyGammaHyperop(carrier, std::move(cells));
}

}  // namespace

FuzzyGammaHyperop random_associative_structure(std::mt19937& rng, std::size_t max_m,
                                               std::size_t max_gammas) {
  if (max_m == 0 || max_gammas == 0) {
    throw std::invalid_argument("random_associative_structure: empty bounds");
  }
  std::uniform_int_distribution<std::size_t> g_dist(1, max_gammas);
  std::uniform_int_distribution<std::size_t> m_dist(1, max_m);
  std::uniform_int_distribution<int> family(0, 8);
  std::size_t gammas = g_dist(rng);
  std::size_t m = m_dist(rng);
  FuzzyGammaHyperop h = [&]() -> FuzzyGammaHyperop {
    switch (family(rng)) {
      case 0: return pair_characteristic_structure(m, gammas);
      case 1: return max_chain_structure(m, gammas);
      case 2:
        if (max_m < 2) return max_chain_structure(m, gammas);
        return bottom_absorbing_max_structure(max_m - 2, gammas);
      case 3:
        if (max_m < 2) return max_chain_structure(m, gammas);
        return capped_sum_structure(max_m - 2, gammas);
      case 4:
        return subset_cover_structure(max_m >= 3 ? 2 : 1, gammas);
      case 5: return total_structure(m, gammas);
      case 6:
        return constant_cell_structure(random_nonzero_fuzzy_subset(
            rng, make_numbered_carrier(m, gammas), 6));
      case 7: return gamma_semigroup_image(random_gamma_semigroup(rng, m, gammas));
      default: {
        GammaSemigroup op = random_gamma_semigroup(rng, m, gammas);
        FuzzySubset mu = random_compatible_fuzzy_sub(rng, op, 6);
        // A positive floor keeps every cell nonzero; joining with a constant
        // preserves product compatibility.
        for (std::size_t r = 0; r < mu.size(); ++r) {
          if (mu.at(r).is_zero()) mu.set(r, Grade(1, 6));
        }
        return from_gamma_semigroup_and_fuzzy_sub(op, mu);
      }
    }
  }();
  std::vector<std::size_t> perm(h.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  h = permute_elements(h, perm);
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
    h = remap_grades(rng, h);
  }
  return h;
}

FuzzySubset sub_hypersemigroup_closure(const FuzzyGammaHyperop& h, FuzzySubset mu) {
  if (!same_carrier(h.carrier(), mu.carrier())) {
    throw std::invalid_argument("sub_hypersemigroup_closure: carrier mismatch");
  }
  for (;;) {
    FuzzySubset next = mu;
    for (std::size_t g = 0; g < h.sort_count(); ++g) {
      next = join(next, compose_fuzzy(h, mu, g, mu));
    }
    if (next == mu) return mu;
    mu = std::move(next);
  }
}

FuzzySubset bi_ideal_closure(const FuzzyGammaHyperop& h, FuzzySubset mu) {
  if (!same_carrier(h.carrier(), mu.carrier())) {
    throw std::invalid_argument("bi_ideal_closure: carrier mismatch");
  }
  FuzzySubset full = FuzzySubset::full(h.carrier());
  for (;;) {
    FuzzySubset next = mu;
    for (std::size_t a = 0; a < h.sort_count(); ++a) {
      next = join(next, compose_fuzzy(h, mu, a, mu));
      FuzzySubset left = compose_fuzzy(h, mu, a, full);
      for (std::size_t b = 0; b < h.sort_count(); ++b) {
        next = join(next, compose_fuzzy(h, left, b, mu));
      }
    }
    if (next == mu) return mu;
    mu = std::move(next);
  }
}

}  // namespace hyperlab
