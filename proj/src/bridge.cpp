#include "hyperlab/bridge.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hyperlab {

CarrierMap::CarrierMap(CarrierPtr source, CarrierPtr target,
                       std::vector<std::size_t> assignment)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)) {
  if (!source_ || !target_) {
    throw std::invalid_argument("CarrierMap: null carrier");
  }
  if (source_->sorts() != target_->sorts()) {
    throw std::invalid_argument("CarrierMap: source and target must share sorts");
  }
  if (assignment_.size() != source_->size()) {
    throw std::invalid_argument("CarrierMap: assignment must cover every source element");
  }
  for (std::size_t v : assignment_) {
    if (v >= target_->size()) {
      throw std::invalid_argument("CarrierMap: assignment value out of target range");
    }
  }
}

CarrierMap CarrierMap::identity(CarrierPtr carrier) {
  std::vector<std::size_t> assignment(carrier->size());
  for (std::size_t i = 0; i < assignment.size(); ++i) assignment[i] = i;
  return CarrierMap(carrier, carrier, std::move(assignment));
}

CarrierMap compose_map(const CarrierMap& g, const CarrierMap& f) {
  if (!same_carrier(f.target(), g.source())) {
    throw std::invalid_argument("compose_map: inner target differs from outer source");
  }
  std::vector<std::size_t> assignment(f.source()->size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    assignment[i] = g.apply(f.apply(i));
  }
  return CarrierMap(f.source(), g.target(), std::move(assignment));
}

CrispGammaHyperop psi(const FuzzyGammaHyperop& h) {
  const Carrier& c = *h.carrier();
  std::vector<CrispSubset> cells;
  cells.reserve(c.size() * c.sort_count() * c.size());
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t g = 0; g < c.sort_count(); ++g) {
      for (std::size_t b = 0; b < c.size(); ++b) {
        CrispSubset supp = h.cell(a, g, b).support();
        if (supp.empty()) {
          throw std::invalid_argument("psi: cell (" + c.element_label(a) + ", " +
                                      c.sort_label(g) + ", " + c.element_label(b) +
                                      ") has empty support");
        }
        cells.push_back(std::move(supp));
      }
    }
  }
  return CrispGammaHyperop(h.carrier(), std::move(cells));
}

FuzzyGammaHyperop phi(const CrispGammaHyperop& k) {
  const Carrier& c = *k.carrier();
  std::vector<FuzzySubset> cells;
  cells.reserve(c.size() * c.sort_count() * c.size());
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t g = 0; g < c.sort_count(); ++g) {
      for (std::size_t b = 0; b < c.size(); ++b) {
        const CrispSubset& cell = k.cell(a, g, b);
        if (cell.empty()) {
          throw std::invalid_argument("phi: cell (" + c.element_label(a) + ", " +
                                      c.sort_label(g) + ", " + c.element_label(b) +
                                      ") is empty");
        }
        cells.push_back(FuzzySubset::characteristic(cell));
      }
    }
  }
  return FuzzyGammaHyperop(k.carrier(), std::move(cells));
}

FuzzySubset image_fuzzy(const CarrierMap& f, const FuzzySubset& mu) {
  if (!same_carrier(f.source(), mu.carrier())) {
    throw std::invalid_argument("image_fuzzy: subset lives on the wrong carrier");
  }
  FuzzySubset out(f.target());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    std::size_t t = f.apply(i);
    out.set(t, join(out.at(t), mu.at(i)));
  }
  return out;
}

CheckReport is_fuzzy_homomorphism(const CarrierMap& f, const FuzzyGammaHyperop& h1,
                                  const FuzzyGammaHyperop& h2) {
  if (!same_carrier(f.source(), h1.carrier()) ||
      !same_carrier(f.target(), h2.carrier())) {
    throw std::invalid_argument("is_fuzzy_homomorphism: carrier mismatch");
  }
  const Carrier& src = *h1.carrier();
  const Carrier& dst = *h2.carrier();
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t g = 0; g < src.sort_count(); ++g) {
      for (std::size_t b = 0; b < src.size(); ++b) {
        FuzzySubset image = image_fuzzy(f, compose_elem(h1, a, g, b));
        const FuzzySubset& bound = compose_elem(h2, f.apply(a), g, f.apply(b));
        for (std::size_t r = 0; r < dst.size(); ++r) {
          if (image.at(r) <= bound.at(r)) continue;
          Witness w;
          w.bindings = {{"a", src.element_label(a)},
                        {"gamma", src.sort_label(g)},
                        {"b", src.element_label(b)},
                        {"r", dst.element_label(r)}};
          w.lhs = image.at(r).to_string();
          w.rhs = bound.at(r).to_string();
          return CheckReport::fail(std::move(w));
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport is_crisp_homomorphism(const CarrierMap& f, const CrispGammaHyperop& k1,
                                  const CrispGammaHyperop& k2) {
  if (!same_carrier(f.source(), k1.carrier()) ||
      !same_carrier(f.target(), k2.carrier())) {
    throw std::invalid_argument("is_crisp_homomorphism: carrier mismatch");
  }
  const Carrier& src = *k1.carrier();
  for (std::size_t a = 0; a < src.size(); ++a) {
    for (std::size_t g = 0; g < src.sort_count(); ++g) {
      for (std::size_t b = 0; b < src.size(); ++b) {
        CrispSubset image(f.target());
        for (std::size_t x : k1.cell(a, g, b).indices()) {
          image.insert(f.apply(x));
        }
        const CrispSubset& bound = k2.cell(f.apply(a), g, f.apply(b));
        if (image.subset_of(bound)) continue;
        Witness w;
        w.bindings = {{"a", src.element_label(a)},
                      {"gamma", src.sort_label(g)},
                      {"b", src.element_label(b)}};
        w.lhs = image.to_string();
        w.rhs = bound.to_string();
        return CheckReport::fail(std::move(w));
      }
    }
  }
  return CheckReport::pass();
}

}  // namespace hyperlab
