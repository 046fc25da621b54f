#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "hyperlab/families.hpp"
#include "hyperlab/relations.hpp"
#include "hyperlab/search.hpp"

using namespace hyperlab;

TEST_CASE("partitions renumber classes by first occurrence") {
  CarrierPtr c = make_numbered_carrier(4);
  EquivRelation rho(c, {7, 2, 7, 5});
  CHECK(rho.class_count() == 3);
  CHECK(rho.class_of(0) == 0);
  CHECK(rho.class_of(1) == 1);
  CHECK(rho.class_of(2) == 0);
  CHECK(rho.class_of(3) == 2);
  CHECK(rho.related(0, 2));
  CHECK_FALSE(rho.related(0, 1));
  CHECK(rho.block(0) == CrispSubset(c, {0, 2}));
  CHECK(rho.class_label(0) == "{0,2}");
  CHECK(rho == EquivRelation::from_blocks(c, {{0, 2}, {1}, {3}}));

  CHECK(EquivRelation::discrete(c).class_count() == 4);
  CHECK(EquivRelation::universal(c).class_count() == 1);

  CHECK_THROWS_AS(EquivRelation::from_blocks(c, {{0, 1}, {1, 2}, {3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(EquivRelation::from_blocks(c, {{0, 1}, {3}}), std::invalid_argument);
}

TEST_CASE("quotient carriers are labeled by class") {
  CarrierPtr c = make_numbered_carrier(3, 2);
  EquivRelation rho = EquivRelation::from_blocks(c, {{0, 1}, {2}});
  CarrierPtr q = rho.quotient_carrier();
  CHECK(q->size() == 2);
  CHECK(q->element_label(0) == "{0,1}");
  CHECK(q->element_label(1) == "{2}");
  CHECK(q->sorts() == c->sorts());
}

TEST_CASE("support extension compares the classes met") {
  CarrierPtr c = make_numbered_carrier(4);
  EquivRelation rho = EquivRelation::from_blocks(c, {{0, 1}, {2, 3}});
  FuzzySubset a(c, {Grade(1, 2), Grade::zero(), Grade::zero(), Grade::zero()});
  FuzzySubset b(c, {Grade::zero(), Grade(1, 3), Grade::zero(), Grade::zero()});
  FuzzySubset d(c, {Grade::one(), Grade::zero(), Grade(1, 2), Grade::zero()});
  CHECK(rel_extends(rho, a, b));
  CHECK(rel_extends(rho, b, a));
  CHECK_FALSE(rel_extends(rho, a, d));
  CHECK_FALSE(rel_extends(rho, d, a));

  FuzzySubset zero = FuzzySubset::zero(c);
  CHECK(rel_extends(rho, zero, zero));
  CHECK_FALSE(rel_extends(rho, zero, a));
  CHECK_FALSE(rel_extends(rho, a, zero));

  CHECK(rho.classes_meeting(d) == std::vector<std::size_t>{0, 1});
  CHECK(rho.classes_meeting(CrispSubset(c, {1})) == std::vector<std::size_t>{0});
}

TEST_CASE("regularity on the max chain") {
  FuzzyGammaHyperop h = max_chain_structure(3);
  const CarrierPtr& c = h.carrier();
  EquivRelation good = EquivRelation::from_blocks(c, {{0, 1}, {2}});
  CHECK(is_fuzzy_regular(h, good));
  CHECK(is_fuzzy_strongly_regular(h, good));

  EquivRelation bad = EquivRelation::from_blocks(c, {{0, 2}, {1}});
  CheckReport rep = is_fuzzy_regular(h, bad);
  REQUIRE_FALSE(rep.verdict);
  CHECK(rep.witness.has_value());
  CHECK_FALSE(is_fuzzy_strongly_regular(h, bad).verdict);

  CHECK(is_fuzzy_regular(h, EquivRelation::discrete(c)));
  CHECK(is_fuzzy_regular(h, EquivRelation::universal(c)));
  CHECK(is_fuzzy_strongly_regular(h, EquivRelation::universal(c)));
  // Cells are singletons, so even the discrete relation is strongly regular.
  CHECK(is_fuzzy_strongly_regular(h, EquivRelation::discrete(c)));
  // The total table spreads support across both classes and loses strength.
  FuzzyGammaHyperop total = total_structure(3);
  EquivRelation split = EquivRelation::from_blocks(total.carrier(), {{0, 1}, {2}});
  CHECK(is_fuzzy_regular(total, split));
  CHECK_FALSE(is_fuzzy_strongly_regular(total, split).verdict);
}

TEST_CASE("one-sided and pairwise regularity agree") {
  std::mt19937 rng(20240903);
  for (int trial = 0; trial < 40; ++trial) {
    FuzzyGammaHyperop h = trial % 2 == 0 ? random_associative_structure(rng, 4, 2)
                                         : random_structure(rng, 4, 2, 3);
    for (const EquivRelation& rho :
         enumerate_equiv_relations(h.carrier(), 1u << 20)) {
      CHECK(is_fuzzy_regular(h, rho).verdict ==
            is_fuzzy_regular_pairwise(h, rho).verdict);
      // Strength implies regularity only when every cell is nonzero: a zero
      // cell satisfies the strong clause vacuously but never extends a
      // nonzero cell.
      if (h.is_proper() && is_fuzzy_strongly_regular(h, rho).verdict) {
        CHECK(is_fuzzy_regular(h, rho));
      }
    }
  }
}

TEST_CASE("fuzzy and crisp regularity agree through the support structure") {
  std::mt19937 rng(20240904);
  for (int trial = 0; trial < 30; ++trial) {
    FuzzyGammaHyperop h = trial % 2 == 0 ? random_associative_structure(rng, 4, 2)
                                         : random_structure(rng, 3, 2, 3);
    if (!h.is_proper()) continue;
    CrispGammaHyperop k = psi(h);
    for (const EquivRelation& rho :
         enumerate_equiv_relations(h.carrier(), 1u << 20)) {
      CHECK(verify_regular_transfer(h, rho));
      CHECK(is_fuzzy_regular(h, rho).verdict == is_crisp_regular(k, rho).verdict);
      CHECK(is_fuzzy_strongly_regular(h, rho).verdict ==
            is_crisp_strongly_regular(k, rho).verdict);
    }
  }
}

TEST_CASE("crisp quotient of the max chain collapses to the two point chain") {
  FuzzyGammaHyperop h = max_chain_structure(3);
  EquivRelation rho = EquivRelation::from_blocks(h.carrier(), {{0, 1}, {2}});
  CrispGammaHyperop q = quotient_crisp(h, rho);
  CHECK(q.all_singletons());
  CHECK(crisp_is_associative(q));
  CHECK(q.carrier()->element_label(0) == "{0,1}");
  // The class table is exactly max on the two-element chain.
  CHECK(q.cell(0, 0, 0) == CrispSubset(q.carrier(), {0}));
  CHECK(q.cell(0, 0, 1) == CrispSubset(q.carrier(), {1}));
  CHECK(q.cell(1, 0, 0) == CrispSubset(q.carrier(), {1}));
  CHECK(q.cell(1, 0, 1) == CrispSubset(q.carrier(), {1}));
}

TEST_CASE("non-regular relations make the quotient representative-dependent") {
  FuzzyGammaHyperop h = max_chain_structure(3);
  EquivRelation bad = EquivRelation::from_blocks(h.carrier(), {{0, 2}, {1}});
  CHECK_THROWS_AS(quotient_crisp(h, bad), QuotientError);
  try {
    quotient_crisp(h, bad);
  } catch (const QuotientError& e) {
    CHECK_FALSE(e.witness().bindings.empty());
    CHECK(std::string(e.what()).find("not well-defined") != std::string::npos);
  }
}

TEST_CASE("fuzzy quotient takes suprema over representatives") {
  GammaSemigroup op = cyclic_gamma_group(4);
  FuzzySubset mu(op.carrier(), {Grade::one(), Grade(1, 3), Grade(1, 2), Grade(1, 3)});
  FuzzyGammaHyperop h = from_gamma_semigroup_and_fuzzy_sub(op, mu);
  // Classes {0,2} and {1,3} form the quotient group Z_2.
  EquivRelation rho = EquivRelation::from_blocks(h.carrier(), {{0, 2}, {1, 3}});
  REQUIRE(is_fuzzy_strongly_regular(h, rho));

  FuzzyQuotient q = quotient_fuzzy(h, rho);
  CHECK(q.strongly_regular);
  CHECK(is_associative(q.structure));
  const CarrierPtr& qc = q.structure.carrier();
  // Grade of {0,2} in {0,2} * {0,2}: the best representatives are 0 and 0.
  CHECK(q.structure.cell(0, 0, 0) ==
        FuzzySubset(qc, {Grade::one(), Grade::zero()}));
  // Grade of {1,3} in {0,2} * {1,3}: mu(0) meet mu(1) is the best pick.
  CHECK(q.structure.cell(0, 0, 1) ==
        FuzzySubset(qc, {Grade::zero(), Grade(1, 3)}));
  CHECK(q.structure.cell(1, 0, 1) ==
        FuzzySubset(qc, {Grade(1, 3), Grade::zero()}));

  // Under the discrete relation the quotient reproduces the table cell for
  // cell (the carrier labels become "{0}", "{1}", ...).
  EquivRelation weak = EquivRelation::discrete(h.carrier());
  FuzzyQuotient qq = quotient_fuzzy(h, weak);
  CHECK(qq.strongly_regular);
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b = 0; b < h.size(); ++b) {
      CHECK(qq.structure.cell(a, 0, b).grades() == h.cell(a, 0, b).grades());
    }
  }
}

TEST_CASE("strong regularity matches single-valued associative quotients") {
  std::mt19937 rng(20240905);
  for (int trial = 0; trial < 30; ++trial) {
    FuzzyGammaHyperop h = trial % 2 == 0 ? random_associative_structure(rng, 4, 2)
                                         : random_structure(rng, 3, 2, 3);
    if (!h.is_proper()) continue;
    for (const EquivRelation& rho :
         enumerate_equiv_relations(h.carrier(), 1u << 20)) {
      if (is_fuzzy_regular(h, rho).verdict) {
        CHECK(verify_strong_quotient_is_semigroup(h, rho));
      } else {
        CHECK_FALSE(is_fuzzy_strongly_regular(h, rho).verdict);
        CHECK_THROWS_AS(quotient_crisp(h, rho), QuotientError);
      }
    }
  }
}

TEST_CASE("strongly regular quotients of associative tables are associative") {
  std::mt19937 rng(20240906);
  int hits = 0;
  for (int trial = 0; trial < 60; ++trial) {
    FuzzyGammaHyperop h = random_associative_structure(rng, 4, 2);
    for (const EquivRelation& rho :
         enumerate_equiv_relations(h.carrier(), 1u << 20)) {
      if (!is_fuzzy_strongly_regular(h, rho).verdict) continue;
      ++hits;
      FuzzyQuotient q = quotient_fuzzy(h, rho);
      CHECK(q.strongly_regular);
      CHECK(is_associative(q.structure));
      CrispGammaHyperop qk = quotient_crisp(h, rho);
      CHECK(qk.all_singletons());
      CHECK(crisp_is_associative(qk));
    }
  }
  CHECK(hits > 0);
}
