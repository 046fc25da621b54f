#include "hyperlab/hyperop.hpp"

#include <stdexcept>

namespace hyperlab {

namespace {

std::size_t table_index(const Carrier& c, std::size_t a, std::size_t gamma,
                        std::size_t b) {
  if (a >= c.size() || b >= c.size() || gamma >= c.sort_count()) {
    throw std::out_of_range("table index (" + std::to_string(a) + "," +
                            std::to_string(gamma) + "," + std::to_string(b) +
                            ") out of range");
  }
  return (a * c.sort_count() + gamma) * c.size() + b;
}

void require_same_carrier(const FuzzyGammaHyperop& h, const FuzzySubset& mu,
                          const char* op) {
  if (!same_carrier(h.carrier(), mu.carrier())) {
    throw std::invalid_argument(std::string(op) + ": carrier mismatch");
  }
}

}  // namespace

FuzzyGammaHyperop::FuzzyGammaHyperop(CarrierPtr carrier,
                                     std::vector<FuzzySubset> cells,
                                     bool require_proper)
    : carrier_(std::move(carrier)), cells_(std::move(cells)) {
  const std::size_t expected =
      carrier_->size() * carrier_->sort_count() * carrier_->size();
  if (cells_.size() != expected) {
    throw std::invalid_argument("fuzzy table has " + std::to_string(cells_.size()) +
                                " cells, expected " + std::to_string(expected));
  }
  for (const auto& cell : cells_) {
    if (!same_carrier(cell.carrier(), carrier_)) {
      throw std::invalid_argument("fuzzy table cell over a different carrier");
    }
    if (require_proper && cell.is_zero()) {
      throw std::invalid_argument(
          "zero cell in a proper fuzzy table (pass require_proper=false to allow)");
    }
  }
}

const FuzzySubset& FuzzyGammaHyperop::cell(std::size_t a, std::size_t gamma,
                                           std::size_t b) const {
  return cells_[table_index(*carrier_, a, gamma, b)];
}

bool FuzzyGammaHyperop::is_proper() const {
  for (const auto& cell : cells_) {
    if (cell.is_zero()) {
      return false;
    }
  }
  return true;
}

bool operator==(const FuzzyGammaHyperop& x, const FuzzyGammaHyperop& y) {
  return same_carrier(x.carrier_, y.carrier_) && x.cells_ == y.cells_;
}

const FuzzySubset& compose_elem(const FuzzyGammaHyperop& h, std::size_t a,
                                std::size_t gamma, std::size_t b) {
  return h.cell(a, gamma, b);
}

FuzzySubset compose_left(const FuzzyGammaHyperop& h, std::size_t a,
                         std::size_t gamma, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "compose_left");
  FuzzySubset out(h.carrier());
  if (mu.is_zero()) {
    return out;
  }
  const std::size_t m = h.size();
  for (std::size_t r = 0; r < m; ++r) {
    Grade best = Grade::zero();
    for (std::size_t t = 0; t < m; ++t) {
      best = join(best, meet(h.cell(a, gamma, t).at(r), mu.at(t)));
    }
    out.set(r, best);
  }
  return out;
}

FuzzySubset compose_right(const FuzzyGammaHyperop& h, const FuzzySubset& mu,
                          std::size_t gamma, std::size_t a) {
  require_same_carrier(h, mu, "compose_right");
  FuzzySubset out(h.carrier());
  if (mu.is_zero()) {
    return out;
  }
  const std::size_t m = h.size();
  for (std::size_t r = 0; r < m; ++r) {
    Grade best = Grade::zero();
    for (std::size_t t = 0; t < m; ++t) {
      best = join(best, meet(mu.at(t), h.cell(t, gamma, a).at(r)));
    }
    out.set(r, best);
  }
  return out;
}

FuzzySubset compose_fuzzy(const FuzzyGammaHyperop& h, const FuzzySubset& mu,
                          std::size_t gamma, const FuzzySubset& nu) {
  require_same_carrier(h, mu, "compose_fuzzy");
  require_same_carrier(h, nu, "compose_fuzzy");
  FuzzySubset out(h.carrier());
  if (mu.is_zero() || nu.is_zero()) {
    return out;
  }
  const std::size_t m = h.size();
  for (std::size_t t = 0; t < m; ++t) {
    Grade best = Grade::zero();
    for (std::size_t p = 0; p < m; ++p) {
      if (mu.at(p).is_zero()) {
        continue;
      }
      for (std::size_t q = 0; q < m; ++q) {
        best = join(best, meet(mu.at(p), meet(h.cell(p, gamma, q).at(t), nu.at(q))));
      }
    }
    out.set(t, best);
  }
  return out;
}

FuzzySubset compose_many(const FuzzyGammaHyperop& h,
                         const std::vector<FuzzySubset>& factors,
                         const std::vector<std::size_t>& sorts) {
  if (factors.size() < 2 || sorts.size() != factors.size() - 1) {
    throw std::invalid_argument("compose_many needs n >= 2 factors and n-1 sorts");
  }
  FuzzySubset acc = compose_fuzzy(h, factors[0], sorts[0], factors[1]);
  for (std::size_t i = 2; i < factors.size(); ++i) {
    acc = compose_fuzzy(h, acc, sorts[i - 1], factors[i]);
  }
  return acc;
}

CheckReport is_associative(const FuzzyGammaHyperop& h) {
  const auto& carrier = *h.carrier();
  const std::size_t m = carrier.size();
  const std::size_t s = carrier.sort_count();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t alpha = 0; alpha < s; ++alpha) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t beta = 0; beta < s; ++beta) {
          for (std::size_t c = 0; c < m; ++c) {
            const FuzzySubset left =
                compose_right(h, h.cell(a, alpha, b), beta, c);
            const FuzzySubset right =
                compose_left(h, a, alpha, h.cell(b, beta, c));
            for (std::size_t r = 0; r < m; ++r) {
              if (left.at(r) != right.at(r)) {
                Witness w;
                w.bindings = {{"a", carrier.element_label(a)},
                              {"alpha", carrier.sort_label(alpha)},
                              {"b", carrier.element_label(b)},
                              {"beta", carrier.sort_label(beta)},
                              {"c", carrier.element_label(c)},
                              {"r", carrier.element_label(r)}};
                w.lhs = left.at(r).to_string();
                w.rhs = right.at(r).to_string();
                return CheckReport::fail(std::move(w));
              }
            }
          }
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport is_hypergroup(const FuzzyGammaHyperop& h) {
  CheckReport assoc = is_associative(h);
  if (!assoc.verdict) {
    return assoc;
  }
  const auto& carrier = *h.carrier();
  const std::size_t m = carrier.size();
  const std::size_t s = carrier.sort_count();
  const FuzzySubset full = FuzzySubset::full(h.carrier());
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t gamma = 0; gamma < s; ++gamma) {
      const FuzzySubset left = compose_left(h, x, gamma, full);
      const FuzzySubset right = compose_right(h, full, gamma, x);
      for (std::size_t r = 0; r < m; ++r) {
        if (!left.at(r).is_one() || !right.at(r).is_one()) {
          bool left_bad = !left.at(r).is_one();
          Witness w;
          w.bindings = {{"x", carrier.element_label(x)},
                        {"gamma", carrier.sort_label(gamma)},
                        {"side", left_bad ? "x o gamma o M" : "M o gamma o x"},
                        {"r", carrier.element_label(r)}};
          w.lhs = (left_bad ? left : right).at(r).to_string();
          w.rhs = "1";
          return CheckReport::fail(std::move(w));
        }
      }
    }
  }
  return CheckReport::pass();
}

FuzzyGammaHyperop from_gamma_semigroup_and_fuzzy_sub(const GammaSemigroup& op,
                                                     const FuzzySubset& mu) {
  if (!same_carrier(op.carrier(), mu.carrier())) {
    throw std::invalid_argument(
        "from_gamma_semigroup_and_fuzzy_sub: carrier mismatch");
  }
  if (mu.is_zero()) {
    throw std::invalid_argument(
        "from_gamma_semigroup_and_fuzzy_sub: mu must be non-zero");
  }
  CheckReport assoc = op.is_associative();
  if (!assoc.verdict) {
    throw std::invalid_argument(
        "from_gamma_semigroup_and_fuzzy_sub: operation is not associative (" +
        assoc.witness->to_string() + ")");
  }
  const auto& carrier = *op.carrier();
  const std::size_t m = carrier.size();
  const std::size_t s = carrier.sort_count();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t gamma = 0; gamma < s; ++gamma) {
      for (std::size_t b = 0; b < m; ++b) {
        const Grade bound = meet(mu.at(a), mu.at(b));
        if (mu.at(op.product(a, gamma, b)) < bound) {
          throw std::invalid_argument(
              "from_gamma_semigroup_and_fuzzy_sub: mu is not a fuzzy "
              "sub-Gamma-semigroup (violated at a=" +
              carrier.element_label(a) + ", gamma=" + carrier.sort_label(gamma) +
              ", b=" + carrier.element_label(b) + ")");
        }
      }
    }
  }
  std::vector<FuzzySubset> cells;
  cells.reserve(m * s * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t gamma = 0; gamma < s; ++gamma) {
      for (std::size_t b = 0; b < m; ++b) {
        FuzzySubset cell(op.carrier());
        cell.set(op.product(a, gamma, b), meet(mu.at(a), mu.at(b)));
        cells.push_back(std::move(cell));
      }
    }
  }
  return FuzzyGammaHyperop(op.carrier(), std::move(cells), /*require_proper=*/false);
}

}  // namespace hyperlab
