#include "hyperlab/crisp.hpp"

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

}  // namespace

CrispGammaHyperop::CrispGammaHyperop(CarrierPtr carrier,
                                     std::vector<CrispSubset> cells)
    : carrier_(std::move(carrier)), cells_(std::move(cells)) {
  const std::size_t expected =
      carrier_->size() * carrier_->sort_count() * carrier_->size();
  if (cells_.size() != expected) {
    throw std::invalid_argument("crisp table has " + std::to_string(cells_.size()) +
                                " cells, expected " + std::to_string(expected));
  }
  for (const auto& cell : cells_) {
    if (!same_carrier(cell.carrier(), carrier_)) {
      throw std::invalid_argument("crisp table cell over a different carrier");
    }
    if (cell.empty()) {
      partial_ = true;
    }
  }
}

const CrispSubset& CrispGammaHyperop::cell(std::size_t a, std::size_t gamma,
                                           std::size_t b) const {
  return cells_[table_index(*carrier_, a, gamma, b)];
}

bool CrispGammaHyperop::all_singletons() const {
  for (const auto& cell : cells_) {
    if (cell.count() != 1) {
      return false;
    }
  }
  return true;
}

bool operator==(const CrispGammaHyperop& x, const CrispGammaHyperop& y) {
  return same_carrier(x.carrier_, y.carrier_) && x.cells_ == y.cells_;
}

GammaSemigroup::GammaSemigroup(CarrierPtr carrier, std::vector<std::size_t> products)
    : carrier_(std::move(carrier)), products_(std::move(products)) {
  const std::size_t expected =
      carrier_->size() * carrier_->sort_count() * carrier_->size();
  if (products_.size() != expected) {
    throw std::invalid_argument("semigroup table has " +
                                std::to_string(products_.size()) +
                                " entries, expected " + std::to_string(expected));
  }
  for (std::size_t p : products_) {
    if (p >= carrier_->size()) {
      throw std::out_of_range("semigroup product index " + std::to_string(p) +
                              " out of range");
    }
  }
}

std::size_t GammaSemigroup::product(std::size_t a, std::size_t gamma,
                                    std::size_t b) const {
  return products_[table_index(*carrier_, a, gamma, b)];
}

CheckReport GammaSemigroup::is_associative() const {
  const std::size_t m = carrier_->size();
  const std::size_t s = carrier_->sort_count();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t alpha = 0; alpha < s; ++alpha) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t beta = 0; beta < s; ++beta) {
          for (std::size_t c = 0; c < m; ++c) {
            const std::size_t left = product(product(a, alpha, b), beta, c);
            const std::size_t right = product(a, alpha, product(b, beta, c));
            if (left != right) {
              Witness w;
              w.bindings = {{"a", carrier_->element_label(a)},
                            {"alpha", carrier_->sort_label(alpha)},
                            {"b", carrier_->element_label(b)},
                            {"beta", carrier_->sort_label(beta)},
                            {"c", carrier_->element_label(c)}};
              w.lhs = carrier_->element_label(left);
              w.rhs = carrier_->element_label(right);
              return CheckReport::fail(std::move(w));
            }
          }
        }
      }
    }
  }
  return CheckReport::pass();
}

CrispGammaHyperop GammaSemigroup::as_hyperop() const {
  std::vector<CrispSubset> cells;
  cells.reserve(products_.size());
  for (std::size_t p : products_) {
    cells.push_back(CrispSubset(carrier_, {p}));
  }
  return CrispGammaHyperop(carrier_, std::move(cells));
}

CrispSubset crisp_product(const CrispGammaHyperop& k, const CrispSubset& a,
                          std::size_t gamma, const CrispSubset& b) {
  CrispSubset out(k.carrier());
  for (std::size_t x : a.indices()) {
    for (std::size_t y : b.indices()) {
      out = set_union(out, k.cell(x, gamma, y));
    }
  }
  return out;
}

CheckReport crisp_is_associative(const CrispGammaHyperop& k) {
  const auto& carrier = *k.carrier();
  const std::size_t m = carrier.size();
  const std::size_t s = carrier.sort_count();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t alpha = 0; alpha < s; ++alpha) {
      for (std::size_t y = 0; y < m; ++y) {
        for (std::size_t beta = 0; beta < s; ++beta) {
          for (std::size_t z = 0; z < m; ++z) {
            CrispSubset zs(k.carrier(), {z});
            CrispSubset xs(k.carrier(), {x});
            const CrispSubset left = crisp_product(k, k.cell(x, alpha, y), beta, zs);
            const CrispSubset right = crisp_product(k, xs, alpha, k.cell(y, beta, z));
            if (left != right) {
              Witness w;
              w.bindings = {{"x", carrier.element_label(x)},
                            {"alpha", carrier.sort_label(alpha)},
                            {"y", carrier.element_label(y)},
                            {"beta", carrier.sort_label(beta)},
                            {"z", carrier.element_label(z)}};
              w.lhs = left.to_string();
              w.rhs = right.to_string();
              return CheckReport::fail(std::move(w));
            }
          }
        }
      }
    }
  }
  return CheckReport::pass();
}

}  // namespace hyperlab
