#include "hyperlab/relations.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace hyperlab {

namespace {

void require_same_carrier(const CarrierPtr& a, const CarrierPtr& b, const char* who) {
  if (!same_carrier(a, b)) {
    throw std::invalid_argument(std::string(who) + ": carrier mismatch");
  }
}

std::string render_class_set(const EquivRelation& rho,
                             const std::vector<std::size_t>& classes) {
  std::string out = "{";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (i > 0) out += ", ";
    out += rho.class_label(classes[i]);
  }
  out += "}";
  return out;
}

}  // namespace

EquivRelation::EquivRelation(CarrierPtr carrier,
                             const std::vector<std::size_t>& class_of)
    : carrier_(std::move(carrier)) {
  if (!carrier_) throw std::invalid_argument("EquivRelation: null carrier");
  if (class_of.size() != carrier_->size()) {
    throw std::invalid_argument("EquivRelation: class_of must cover every element");
  }
  // Renumber by first occurrence, so class 0 contains element 0 and each
  // class index is ordered by its least element. Raw ids are opaque tags and
  // may take any value.
  std::unordered_map<std::size_t, std::size_t> renumber;
  class_of_.resize(class_of.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    auto [it, fresh] = renumber.try_emplace(class_of[i], next);
    if (fresh) ++next;
    class_of_[i] = it->second;
  }
  blocks_.assign(next, CrispSubset(carrier_));
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    blocks_[class_of_[i]].insert(i);
  }
}

EquivRelation EquivRelation::discrete(CarrierPtr carrier) {
  std::vector<std::size_t> ids(carrier->size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return EquivRelation(std::move(carrier), ids);
}

EquivRelation EquivRelation::universal(CarrierPtr carrier) {
  std::vector<std::size_t> ids(carrier->size(), 0);
  return EquivRelation(std::move(carrier), ids);
}

EquivRelation EquivRelation::from_blocks(
    CarrierPtr carrier, const std::vector<std::vector<std::size_t>>& blocks) {
  if (!carrier) throw std::invalid_argument("EquivRelation: null carrier");
  std::vector<std::size_t> class_of(carrier->size(), blocks.size());
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    if (blocks[c].empty()) {
      throw std::invalid_argument("EquivRelation: empty block");
    }
    for (std::size_t i : blocks[c]) {
      if (i >= carrier->size()) {
        throw std::invalid_argument("EquivRelation: block element out of range");
      }
      if (class_of[i] != blocks.size()) {
        throw std::invalid_argument("EquivRelation: blocks overlap at element " +
                                    carrier->element_label(i));
      }
      class_of[i] = c;
    }
  }
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    if (class_of[i] == blocks.size()) {
      throw std::invalid_argument("EquivRelation: element " +
                                  carrier->element_label(i) + " not covered");
    }
  }
  return EquivRelation(std::move(carrier), class_of);
}

std::vector<std::size_t> EquivRelation::classes_meeting(const FuzzySubset& mu) const {
  require_same_carrier(carrier_, mu.carrier(), "classes_meeting");
  std::vector<bool> seen(blocks_.size(), false);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!mu.at(i).is_zero()) seen[class_of_[i]] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen[c]) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> EquivRelation::classes_meeting(const CrispSubset& s) const {
  require_same_carrier(carrier_, s.carrier(), "classes_meeting");
  std::vector<bool> seen(blocks_.size(), false);
  for (std::size_t i : s.indices()) seen[class_of_[i]] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen[c]) out.push_back(c);
  }
  return out;
}

CarrierPtr EquivRelation::quotient_carrier() const {
  std::vector<std::string> labels;
  labels.reserve(blocks_.size());
  for (std::size_t c = 0; c < blocks_.size(); ++c) labels.push_back(class_label(c));
  return make_carrier(std::move(labels), carrier_->sorts());
}

bool operator==(const EquivRelation& a, const EquivRelation& b) {
  return *a.carrier_ == *b.carrier_ && a.class_of_ == b.class_of_;
}

bool rel_extends(const EquivRelation& rho, const FuzzySubset& mu,
                 const FuzzySubset& nu) {
  require_same_carrier(rho.carrier(), mu.carrier(), "rel_extends");
  require_same_carrier(rho.carrier(), nu.carrier(), "rel_extends");
  return rho.classes_meeting(mu) == rho.classes_meeting(nu);
}

CheckReport is_fuzzy_regular(const FuzzyGammaHyperop& h, const EquivRelation& rho) {
  require_same_carrier(h.carrier(), rho.carrier(), "is_fuzzy_regular");
  const Carrier& car = *h.carrier();
  for (std::size_t a = 0; a < car.size(); ++a) {
    for (std::size_t b = a + 1; b < car.size(); ++b) {
      if (!rho.related(a, b)) continue;
      for (std::size_t g = 0; g < car.sort_count(); ++g) {
        for (std::size_t c = 0; c < car.size(); ++c) {
          const FuzzySubset& ac = compose_elem(h, a, g, c);
          const FuzzySubset& bc = compose_elem(h, b, g, c);
          if (!rel_extends(rho, ac, bc)) {
            Witness w;
            w.bindings = {{"a", car.element_label(a)},
                          {"b", car.element_label(b)},
                          {"gamma", car.sort_label(g)},
                          {"c", car.element_label(c)},
                          {"compare", "a o gamma o c vs b o gamma o c"}};
            w.lhs = render_class_set(rho, rho.classes_meeting(ac));
            w.rhs = render_class_set(rho, rho.classes_meeting(bc));
            return CheckReport::fail(std::move(w));
          }
          const FuzzySubset& ca = compose_elem(h, c, g, a);
          const FuzzySubset& cb = compose_elem(h, c, g, b);
          if (!rel_extends(rho, ca, cb)) {
            Witness w;
            w.bindings = {{"a", car.element_label(a)},
                          {"b", car.element_label(b)},
                          {"gamma", car.sort_label(g)},
                          {"c", car.element_label(c)},
                          {"compare", "c o gamma o a vs c o gamma o b"}};
            w.lhs = render_class_set(rho, rho.classes_meeting(ca));
            w.rhs = render_class_set(rho, rho.classes_meeting(cb));
            return CheckReport::fail(std::move(w));
          }
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport is_fuzzy_regular_pairwise(const FuzzyGammaHyperop& h,
                                      const EquivRelation& rho) {
  require_same_carrier(h.carrier(), rho.carrier(), "is_fuzzy_regular_pairwise");
  const Carrier& car = *h.carrier();
  for (std::size_t a = 0; a < car.size(); ++a) {
    for (std::size_t a2 = 0; a2 < car.size(); ++a2) {
      if (!rho.related(a, a2)) continue;
      for (std::size_t b = 0; b < car.size(); ++b) {
        for (std::size_t b2 = 0; b2 < car.size(); ++b2) {
          if (!rho.related(b, b2)) continue;
          for (std::size_t g = 0; g < car.sort_count(); ++g) {
            const FuzzySubset& lhs = compose_elem(h, a, g, b);
            const FuzzySubset& rhs = compose_elem(h, a2, g, b2);
            if (rel_extends(rho, lhs, rhs)) continue;
            Witness w;
            w.bindings = {{"a", car.element_label(a)},
                          {"a'", car.element_label(a2)},
                          {"b", car.element_label(b)},
                          {"b'", car.element_label(b2)},
                          {"gamma", car.sort_label(g)}};
            w.lhs = render_class_set(rho, rho.classes_meeting(lhs));
            w.rhs = render_class_set(rho, rho.classes_meeting(rhs));
            return CheckReport::fail(std::move(w));
          }
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport is_fuzzy_strongly_regular(const FuzzyGammaHyperop& h,
                                      const EquivRelation& rho) {
  require_same_carrier(h.carrier(), rho.carrier(), "is_fuzzy_strongly_regular");
  const Carrier& car = *h.carrier();
  for (std::size_t a = 0; a < car.size(); ++a) {
    for (std::size_t b = 0; b < car.size(); ++b) {
      if (!rho.related(a, b)) continue;
      for (std::size_t c = 0; c < car.size(); ++c) {
        for (std::size_t d = 0; d < car.size(); ++d) {
          if (!rho.related(c, d)) continue;
          for (std::size_t g = 0; g < car.sort_count(); ++g) {
            const FuzzySubset& left = compose_elem(h, a, g, c);
            const FuzzySubset& right = compose_elem(h, b, g, d);
            for (std::size_t x = 0; x < car.size(); ++x) {
              if (left.at(x).is_zero()) continue;
              for (std::size_t y = 0; y < car.size(); ++y) {
                if (right.at(y).is_zero()) continue;
                if (rho.related(x, y)) continue;
                Witness w;
                w.bindings = {{"a", car.element_label(a)},
                              {"b", car.element_label(b)},
                              {"c", car.element_label(c)},
                              {"d", car.element_label(d)},
                              {"gamma", car.sort_label(g)},
                              {"x", car.element_label(x)},
                              {"y", car.element_label(y)}};
                w.lhs = rho.class_label(rho.class_of(x));
                w.rhs = rho.class_label(rho.class_of(y));
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

CheckReport is_crisp_regular(const CrispGammaHyperop& k, const EquivRelation& rho) {
  require_same_carrier(k.carrier(), rho.carrier(), "is_crisp_regular");
  const Carrier& car = *k.carrier();
  for (std::size_t a = 0; a < car.size(); ++a) {
    for (std::size_t b = a + 1; b < car.size(); ++b) {
      if (!rho.related(a, b)) continue;
      for (std::size_t g = 0; g < car.sort_count(); ++g) {
        for (std::size_t c = 0; c < car.size(); ++c) {
          const CrispSubset& ac = k.cell(a, g, c);
          const CrispSubset& bc = k.cell(b, g, c);
          const CrispSubset& ca = k.cell(c, g, a);
          const CrispSubset& cb = k.cell(c, g, b);
          bool right_ok = rho.classes_meeting(ac) == rho.classes_meeting(bc);
          bool left_ok = rho.classes_meeting(ca) == rho.classes_meeting(cb);
          if (right_ok && left_ok) continue;
          Witness w;
          w.bindings = {{"a", car.element_label(a)},
                        {"b", car.element_label(b)},
                        {"gamma", car.sort_label(g)},
                        {"c", car.element_label(c)},
                        {"compare", right_ok ? "c * gamma * a vs c * gamma * b"
                                             : "a * gamma * c vs b * gamma * c"}};
          const CrispSubset& lhs = right_ok ? ca : ac;
          const CrispSubset& rhs = right_ok ? cb : bc;
          w.lhs = render_class_set(rho, rho.classes_meeting(lhs));
          w.rhs = render_class_set(rho, rho.classes_meeting(rhs));
          return CheckReport::fail(std::move(w));
        }
      }
    }
  }
  return CheckReport::pass();
}

CheckReport is_crisp_strongly_regular(const CrispGammaHyperop& k,
                                      const EquivRelation& rho) {
  require_same_carrier(k.carrier(), rho.carrier(), "is_crisp_strongly_regular");
  const Carrier& car = *k.carrier();
  for (std::size_t a = 0; a < car.size(); ++a) {
    for (std::size_t b = 0; b < car.size(); ++b) {
      if (!rho.related(a, b)) continue;
      for (std::size_t c = 0; c < car.size(); ++c) {
        for (std::size_t d = 0; d < car.size(); ++d) {
          if (!rho.related(c, d)) continue;
          for (std::size_t g = 0; g < car.sort_count(); ++g) {
            for (std::size_t x : k.cell(a, g, c).indices()) {
              for (std::size_t y : k.cell(b, g, d).indices()) {
                if (rho.related(x, y)) continue;
                Witness w;
                w.bindings = {{"a", car.element_label(a)},
                              {"b", car.element_label(b)},
                              {"c", car.element_label(c)},
                              {"d", car.element_label(d)},
                              {"gamma", car.sort_label(g)},
                              {"x", car.element_label(x)},
                              {"y", car.element_label(y)}};
                w.lhs = rho.class_label(rho.class_of(x));
                w.rhs = rho.class_label(rho.class_of(y));
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

QuotientError::QuotientError(Witness w)
    : std::runtime_error("quotient is not well-defined: " + w.to_string()),
      witness_(std::move(w)) {}

CrispGammaHyperop quotient_crisp(const FuzzyGammaHyperop& h, const EquivRelation& rho) {
  require_same_carrier(h.carrier(), rho.carrier(), "quotient_crisp");
  const Carrier& car = *h.carrier();
  CarrierPtr qcar = rho.quotient_carrier();
  std::vector<CrispSubset> cells;
  cells.reserve(rho.class_count() * car.sort_count() * rho.class_count());
  for (std::size_t ca = 0; ca < rho.class_count(); ++ca) {
    for (std::size_t g = 0; g < car.sort_count(); ++g) {
      for (std::size_t cb = 0; cb < rho.class_count(); ++cb) {
        bool first = true;
        std::vector<std::size_t> classes;
        std::pair<std::size_t, std::size_t> chosen{0, 0};
        for (std::size_t a : rho.block(ca).indices()) {
          for (std::size_t b : rho.block(cb).indices()) {
            std::vector<std::size_t> got = rho.classes_meeting(compose_elem(h, a, g, b));
            if (first) {
              classes = std::move(got);
              chosen = {a, b};
              first = false;
              continue;
            }
            if (got == classes) continue;
            Witness w;
            w.bindings = {{"class_a", rho.class_label(ca)},
                          {"gamma", car.sort_label(g)},
                          {"class_b", rho.class_label(cb)},
                          {"a", car.element_label(chosen.first)},
                          {"b", car.element_label(chosen.second)},
                          {"a'", car.element_label(a)},
                          {"b'", car.element_label(b)}};
            w.lhs = render_class_set(rho, classes);
            w.rhs = render_class_set(rho, got);
            throw QuotientError(std::move(w));
          }
        }
        CrispSubset cell(qcar, classes);
        cells.push_back(std::move(cell));
      }
    }
  }
  return CrispGammaHyperop(qcar, std::move(cells));
}

FuzzyQuotient quotient_fuzzy(const FuzzyGammaHyperop& h, const EquivRelation& rho) {
  require_same_carrier(h.carrier(), rho.carrier(), "quotient_fuzzy");
  const Carrier& car = *h.carrier();
  CarrierPtr qcar = rho.quotient_carrier();
  std::vector<FuzzySubset> cells;
  cells.reserve(rho.class_count() * car.sort_count() * rho.class_count());
  for (std::size_t ca = 0; ca < rho.class_count(); ++ca) {
    for (std::size_t g = 0; g < car.sort_count(); ++g) {
      for (std::size_t cb = 0; cb < rho.class_count(); ++cb) {
        FuzzySubset cell(qcar);
        for (std::size_t cc = 0; cc < rho.class_count(); ++cc) {
          Grade best = Grade::zero();
          for (std::size_t a : rho.block(ca).indices()) {
            for (std::size_t b : rho.block(cb).indices()) {
              const FuzzySubset& prod = compose_elem(h, a, g, b);
              for (std::size_t c : rho.block(cc).indices()) {
                best = join(best, prod.at(c));
              }
            }
          }
          cell.set(cc, best);
        }
        cells.push_back(std::move(cell));
      }
    }
  }
  bool strong = is_fuzzy_strongly_regular(h, rho).verdict;
  return FuzzyQuotient{FuzzyGammaHyperop(qcar, std::move(cells), false), strong};
}

CheckReport verify_regular_transfer(const FuzzyGammaHyperop& h, const EquivRelation& rho) {
  CrispGammaHyperop support = psi(h);
  bool fuzzy_reg = is_fuzzy_regular(h, rho).verdict;
  bool crisp_reg = is_crisp_regular(support, rho).verdict;
  if (fuzzy_reg != crisp_reg) {
    Witness w;
    w.bindings = {{"predicate", "regular"}};
    w.lhs = fuzzy_reg ? "fuzzy: true" : "fuzzy: false";
    w.rhs = crisp_reg ? "crisp: true" : "crisp: false";
    return CheckReport::fail(std::move(w));
  }
  bool fuzzy_strong = is_fuzzy_strongly_regular(h, rho).verdict;
  bool crisp_strong = is_crisp_strongly_regular(support, rho).verdict;
  if (fuzzy_strong != crisp_strong) {
    Witness w;
    w.bindings = {{"predicate", "strongly regular"}};
    w.lhs = fuzzy_strong ? "fuzzy: true" : "fuzzy: false";
    w.rhs = crisp_strong ? "crisp: true" : "crisp: false";
    return CheckReport::fail(std::move(w));
  }
  return CheckReport::pass();
}

CheckReport verify_strong_quotient_is_semigroup(const FuzzyGammaHyperop& h,
                                                const EquivRelation& rho) {
  bool strong = is_fuzzy_strongly_regular(h, rho).verdict;
  CrispGammaHyperop q = quotient_crisp(h, rho);
  bool semigroup = q.all_singletons() && crisp_is_associative(q).verdict;
  if (strong == semigroup) return CheckReport::pass();
  Witness w;
  w.bindings = {{"strongly_regular", strong ? "true" : "false"},
                {"quotient_is_semigroup", semigroup ? "true" : "false"}};
  w.lhs = strong ? "true" : "false";
  w.rhs = semigroup ? "true" : "false";
  return CheckReport::fail(std::move(w));
}

}  // namespace hyperlab
