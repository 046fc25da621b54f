#include "hyperlab/ideals.hpp"

#include <stdexcept>
#include <utility>

namespace hyperlab {

namespace {

// Shared "observed <= bound" scan. The witness binds the offending element r
// plus whatever context bindings the caller already collected.
bool report_leq(const FuzzySubset& observed, const FuzzySubset& bound,
                std::vector<std::pair<std::string, std::string>> bindings,
                const Carrier& carrier, CheckReport& out) {
  for (std::size_t r = 0; r < carrier.size(); ++r) {
    if (observed.at(r) <= bound.at(r)) continue;
    Witness w;
    w.bindings = std::move(bindings);
    w.bindings.emplace_back("r", carrier.element_label(r));
    w.lhs = observed.at(r).to_string();
    w.rhs = bound.at(r).to_string();
    out = CheckReport::fail(std::move(w));
    return false;
  }
  return true;
}

void require_same_carrier(const FuzzyGammaHyperop& h, const FuzzySubset& mu,
                          const char* who) {
  if (!same_carrier(h.carrier(), mu.carrier())) {
    throw std::invalid_argument(std::string(who) + ": carrier mismatch");
  }
}

}  // namespace

CheckReport is_sub_hypersemigroup(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "is_sub_hypersemigroup");
  const Carrier& c = *h.carrier();
  for (std::size_t g = 0; g < c.sort_count(); ++g) {
    FuzzySubset prod = compose_fuzzy(h, mu, g, mu);
    CheckReport rep;
    if (!report_leq(prod, mu, {{"gamma", c.sort_label(g)}}, c, rep)) return rep;
  }
  return CheckReport::pass();
}

CheckReport is_left_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "is_left_ideal");
  const Carrier& c = *h.carrier();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t g = 0; g < c.sort_count(); ++g) {
      FuzzySubset prod = compose_left(h, a, g, mu);
      CheckReport rep;
      if (!report_leq(prod, mu, {{"a", c.element_label(a)}, {"gamma", c.sort_label(g)}},
                      c, rep)) {
        return rep;
      }
    }
  }
  return CheckReport::pass();
}

CheckReport is_right_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "is_right_ideal");
  const Carrier& c = *h.carrier();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t g = 0; g < c.sort_count(); ++g) {
      FuzzySubset prod = compose_right(h, mu, g, a);
      CheckReport rep;
      if (!report_leq(prod, mu, {{"a", c.element_label(a)}, {"gamma", c.sort_label(g)}},
                      c, rep)) {
        return rep;
      }
    }
  }
  return CheckReport::pass();
}

CheckReport left_ideal_via_M(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "left_ideal_via_M");
  const Carrier& c = *h.carrier();
  FuzzySubset full = FuzzySubset::full(h.carrier());
  for (std::size_t g = 0; g < c.sort_count(); ++g) {
    FuzzySubset prod = compose_fuzzy(h, full, g, mu);
    CheckReport rep;
    if (!report_leq(prod, mu, {{"gamma", c.sort_label(g)}}, c, rep)) return rep;
  }
  return CheckReport::pass();
}

CheckReport right_ideal_via_M(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "right_ideal_via_M");
  const Carrier& c = *h.carrier();
  FuzzySubset full = FuzzySubset::full(h.carrier());
  for (std::size_t g = 0; g < c.sort_count(); ++g) {
    FuzzySubset prod = compose_fuzzy(h, mu, g, full);
    CheckReport rep;
    if (!report_leq(prod, mu, {{"gamma", c.sort_label(g)}}, c, rep)) return rep;
  }
  return CheckReport::pass();
}

FuzzySubset generate_left_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "generate_left_ideal");
  if (mu.is_zero()) {
    throw std::invalid_argument("generate_left_ideal: subset must be nonzero");
  }
  FuzzySubset full = FuzzySubset::full(h.carrier());
  FuzzySubset acc = mu;
  for (std::size_t g = 0; g < h.sort_count(); ++g) {
    acc = join(acc, compose_fuzzy(h, full, g, mu));
  }
  return acc;
}

FuzzySubset generate_right_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "generate_right_ideal");
  if (mu.is_zero()) {
    throw std::invalid_argument("generate_right_ideal: subset must be nonzero");
  }
  FuzzySubset full = FuzzySubset::full(h.carrier());
  FuzzySubset acc = mu;
  for (std::size_t g = 0; g < h.sort_count(); ++g) {
    acc = join(acc, compose_fuzzy(h, mu, g, full));
  }
  return acc;
}

FuzzySubset generate_left_ideal_single_sort(const FuzzyGammaHyperop& h,
                                            const FuzzySubset& mu,
                                            std::size_t gamma) {
  require_same_carrier(h, mu, "generate_left_ideal_single_sort");
  if (mu.is_zero()) {
    throw std::invalid_argument("generate_left_ideal_single_sort: subset must be nonzero");
  }
  if (gamma >= h.sort_count()) {
    throw std::out_of_range("generate_left_ideal_single_sort: sort index out of range");
  }
  FuzzySubset full = FuzzySubset::full(h.carrier());
  return join(mu, compose_fuzzy(h, full, gamma, mu));
}

CheckReport is_bi_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  CheckReport sub = is_sub_hypersemigroup(h, mu);
  if (!sub) return sub;
  const Carrier& c = *h.carrier();
  for (std::size_t y = 0; y < c.size(); ++y) {
    FuzzySubset mid = FuzzySubset::point(h.carrier(), y);
    for (std::size_t a = 0; a < c.sort_count(); ++a) {
      FuzzySubset left = compose_fuzzy(h, mu, a, mid);
      for (std::size_t b = 0; b < c.sort_count(); ++b) {
        FuzzySubset prod = compose_fuzzy(h, left, b, mu);
        CheckReport rep;
        if (!report_leq(prod, mu,
                        {{"alpha", c.sort_label(a)},
                         {"y", c.element_label(y)},
                         {"beta", c.sort_label(b)}},
                        c, rep)) {
          return rep;
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport bi_ideal_via_M(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "bi_ideal_via_M");
  const Carrier& c = *h.carrier();
  FuzzySubset full = FuzzySubset::full(h.carrier());
  for (std::size_t a = 0; a < c.sort_count(); ++a) {
    FuzzySubset left = compose_fuzzy(h, mu, a, full);
    for (std::size_t b = 0; b < c.sort_count(); ++b) {
      FuzzySubset prod = compose_fuzzy(h, left, b, mu);
      CheckReport rep;
      if (!report_leq(prod, mu, {{"alpha", c.sort_label(a)}, {"beta", c.sort_label(b)}},
                      c, rep)) {
        return rep;
      }
    }
  }
  return CheckReport::pass();
}

CheckReport is_interior_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "is_interior_ideal");
  const Carrier& c = *h.carrier();
  for (std::size_t x = 0; x < c.size(); ++x) {
    FuzzySubset xs = FuzzySubset::point(h.carrier(), x);
    for (std::size_t a = 0; a < c.sort_count(); ++a) {
      FuzzySubset left = compose_fuzzy(h, xs, a, mu);
      for (std::size_t y = 0; y < c.size(); ++y) {
        FuzzySubset ys = FuzzySubset::point(h.carrier(), y);
        for (std::size_t b = 0; b < c.sort_count(); ++b) {
          FuzzySubset prod = compose_fuzzy(h, left, b, ys);
          CheckReport rep;
          if (!report_leq(prod, mu,
                          {{"x", c.element_label(x)},
                           {"alpha", c.sort_label(a)},
                           {"y", c.element_label(y)},
                           {"beta", c.sort_label(b)}},
                          c, rep)) {
            return rep;
          }
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport interior_ideal_via_M(const FuzzyGammaHyperop& h, const FuzzySubset& mu) {
  require_same_carrier(h, mu, "interior_ideal_via_M");
  const Carrier& c = *h.carrier();
  FuzzySubset full = FuzzySubset::full(h.carrier());
  for (std::size_t a = 0; a < c.sort_count(); ++a) {
    FuzzySubset left = compose_fuzzy(h, full, a, mu);
    for (std::size_t b = 0; b < c.sort_count(); ++b) {
      FuzzySubset prod = compose_fuzzy(h, left, b, full);
      CheckReport rep;
      if (!report_leq(prod, mu, {{"alpha", c.sort_label(a)}, {"beta", c.sort_label(b)}},
                      c, rep)) {
        return rep;
      }
    }
  }
  return CheckReport::pass();
}

CheckReport ideal_products_are_bi_ideals(const FuzzyGammaHyperop& h,
                                         const FuzzySubset& mu,
                                         const FuzzySubset& nu) {
  require_same_carrier(h, mu, "ideal_products_are_bi_ideals");
  if (!is_bi_ideal(h, nu)) {
    throw std::invalid_argument("ideal_products_are_bi_ideals: nu is not a bi-ideal");
  }
  const Carrier& c = *h.carrier();
  for (std::size_t g = 0; g < c.sort_count(); ++g) {
    for (bool forward : {true, false}) {
      FuzzySubset prod = forward ? compose_fuzzy(h, mu, g, nu)
                                 : compose_fuzzy(h, nu, g, mu);
      CheckReport rep = is_bi_ideal(h, prod);
      if (!rep) {
        Witness w = *rep.witness;
        w.bindings.insert(w.bindings.begin(),
                          {"product", forward ? "mu o gamma o nu" : "nu o gamma o mu"});
        w.bindings.insert(w.bindings.begin(), {"gamma", c.sort_label(g)});
        return CheckReport::fail(std::move(w));
      }
    }
  }
  return CheckReport::pass();
}

}  // namespace hyperlab
