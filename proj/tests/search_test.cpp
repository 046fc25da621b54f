#include <doctest.h>

#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "hyperlab/cuts.hpp"
#include "hyperlab/families.hpp"
#include "hyperlab/ideals.hpp"
#include "hyperlab/search.hpp"

using namespace hyperlab;

namespace {

EnumSpec spec_of(std::size_t m, std::size_t g, std::int64_t d, StructureFilter f) {
  EnumSpec spec;
  spec.m_size = m;
  spec.gamma_size = g;
  spec.grid = GradeGrid{d};
  spec.filter = f;
  return spec;
}

}  // namespace

TEST_CASE("grade grids expose their levels and membership") {
  GradeGrid grid{3};
  CHECK(grid.level_count() == 4);
  CHECK(grid.level(0) == Grade::zero());
  CHECK(grid.level(2) == Grade(2, 3));
  CHECK(grid.level(3) == Grade::one());
  CHECK(grid.contains(Grade(1, 3)));
  CHECK(grid.contains(Grade::one()));
  CHECK_FALSE(grid.contains(Grade(1, 2)));

  CHECK(parse_filter("associative") == StructureFilter::kAssociative);
  CHECK(filter_name(StructureFilter::kProper) == "proper");
  CHECK_THROWS_AS(parse_filter("bogus"), std::invalid_argument);
}

TEST_CASE("raw space sizes follow the digit count") {
  CHECK(StructureEnumerator(spec_of(1, 1, 1, StructureFilter::kAll), 100).raw_count() ==
        2);
  CHECK(StructureEnumerator(spec_of(2, 1, 1, StructureFilter::kAll), 1000).raw_count() ==
        256);
  CHECK(StructureEnumerator(spec_of(1, 2, 2, StructureFilter::kAll), 100).raw_count() ==
        9);
  CHECK_THROWS_AS(StructureEnumerator(spec_of(2, 1, 1, StructureFilter::kAll), 255),
                  BudgetExceeded);
  // 4^64 digits overflow 64-bit arithmetic long before any budget applies.
  CHECK_THROWS_AS(StructureEnumerator(spec_of(4, 1, 3, StructureFilter::kAll),
                                      std::numeric_limits<std::uint64_t>::max()),
                  BudgetExceeded);
}

TEST_CASE("decode walks the lexicographic order") {
  StructureEnumerator en(spec_of(2, 1, 1, StructureFilter::kAll), 1000);
  FuzzyGammaHyperop first = en.decode(0);
  CHECK_FALSE(first.is_proper());
  for (const FuzzySubset& cell : first.cells()) CHECK(cell.is_zero());

  FuzzyGammaHyperop last = en.decode(255);
  for (const FuzzySubset& cell : last.cells()) CHECK(cell.is_full());

  // The raw index is the base-(d+1) digit string read most significant first:
  // index 1 sets only the least significant slot, the last grade of the last
  // cell.
  FuzzyGammaHyperop second = en.decode(1);
  CHECK(second.cell(1, 0, 1) == FuzzySubset::point(second.carrier(), 1));
  CHECK(second.cell(0, 0, 0).is_zero());

  std::set<std::vector<Grade>> seen;
  for (std::uint64_t i = 0; i < 256; ++i) {
    std::vector<Grade> flat;
    FuzzyGammaHyperop h = en.decode(i);
    for (const FuzzySubset& cell : h.cells()) {
      for (const Grade& g : cell.grades()) flat.push_back(g);
    }
    seen.insert(flat);
  }
  CHECK(seen.size() == 256);
  CHECK_THROWS_AS(en.decode(256), std::out_of_range);
}

TEST_CASE("filters form a hierarchy") {
  StructureEnumerator all(spec_of(2, 1, 1, StructureFilter::kAll), 1000);
  StructureEnumerator proper(spec_of(2, 1, 1, StructureFilter::kProper), 1000);
  StructureEnumerator assoc(spec_of(2, 1, 1, StructureFilter::kAssociative), 1000);
  StructureEnumerator group(spec_of(2, 1, 1, StructureFilter::kHypergroup), 1000);
  std::uint64_t n_all = all.count_matching();
  std::uint64_t n_proper = proper.count_matching();
  std::uint64_t n_assoc = assoc.count_matching();
  std::uint64_t n_group = group.count_matching();
  CHECK(n_all == 256);
  CHECK(n_proper == 81);
  CHECK(n_assoc <= n_proper);
  CHECK(n_group <= n_assoc);
  CHECK(n_group >= 1);

  // Every proper table over the unit grid is the embedding of a crisp table,
  // so the associative census must match the independent crisp one.
  CHECK(n_assoc == count_crisp_hypersemigroups(2, 1, 1u << 20));

  while (auto h = assoc.next()) {
    CHECK(h->is_proper());
    CHECK(is_associative(*h));
  }
}

TEST_CASE("cursor seeks split a census without changing its total") {
  StructureEnumerator en(spec_of(2, 1, 1, StructureFilter::kAssociative), 1000);
  std::uint64_t total = en.count_matching();

  std::uint64_t by_next = 0;
  en.seek(0);
  while (en.next()) ++by_next;
  CHECK(by_next == total);
  CHECK(en.cursor() == en.raw_count());

  for (std::uint64_t split : {std::uint64_t{1}, std::uint64_t{100},
                              std::uint64_t{255}, std::uint64_t{256}}) {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    en.seek(0);
    while (en.next()) {
      (en.cursor() - 1 < split ? low : high) += 1;
    }
    en.seek(split);
    CHECK(en.count_matching() == high);
    CHECK(low + high == total);
  }

  CHECK_THROWS_AS(en.seek(257), std::out_of_range);
}

TEST_CASE("counts are stable under the thread knob") {
  StructureEnumerator en(spec_of(2, 1, 2, StructureFilter::kAssociative), 1u << 20);
  setenv("GAMMA_HYPERLAB_THREADS", "1", 1);
  std::uint64_t serial = en.count_matching();
  setenv("GAMMA_HYPERLAB_THREADS", "3", 1);
  CHECK(worker_thread_count() == 3);
  std::uint64_t threaded = en.count_matching();
  setenv("GAMMA_HYPERLAB_THREADS", "0", 1);
  std::uint64_t automatic = en.count_matching();
  unsetenv("GAMMA_HYPERLAB_THREADS");
  CHECK(serial == threaded);
  CHECK(serial == automatic);
  CHECK(worker_thread_count() >= 1);
}

TEST_CASE("fuzzy subset enumeration is complete and ordered") {
  CarrierPtr c = make_numbered_carrier(3);
  std::vector<FuzzySubset> all = enumerate_fuzzy_subsets(c, GradeGrid{2}, 1u << 20);
  CHECK(all.size() == 27);
  CHECK(all.front().is_zero());
  CHECK(all.back().is_full());
  std::set<std::string> seen;
  for (const FuzzySubset& mu : all) seen.insert(mu.to_string());
  CHECK(seen.size() == 27);
  CHECK_THROWS_AS(enumerate_fuzzy_subsets(c, GradeGrid{100}, 100), BudgetExceeded);
}

TEST_CASE("partition enumeration matches the Bell numbers") {
  for (std::size_t m = 1; m <= 4; ++m) {
    CarrierPtr c = make_numbered_carrier(m);
    std::vector<EquivRelation> parts = enumerate_equiv_relations(c, 1u << 20);
    const std::size_t bell[] = {0, 1, 2, 5, 15};
    CHECK(parts.size() == bell[m]);
    CHECK(parts.front() == EquivRelation::discrete(c));
    CHECK(parts.back() == EquivRelation::universal(c));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        CHECK(parts[i] != parts[j]);
      }
    }
  }
  CHECK_THROWS_AS(enumerate_equiv_relations(make_numbered_carrier(12), 100),
                  BudgetExceeded);
}

TEST_CASE("the brute-force minimum is a least upper ideal") {
  FuzzyGammaHyperop h = max_chain_structure(3);
  FuzzySubset mu = FuzzySubset::point(h.carrier(), 1);
  FuzzySubset best = oracle_min_left_ideal(h, mu, GradeGrid{1}, 1u << 20);
  CHECK(best == FuzzySubset::characteristic(CrispSubset(h.carrier(), {1, 2})));
  CHECK(is_left_ideal(h, best));

  CHECK_THROWS_AS(oracle_min_left_ideal(h, mu, GradeGrid{1}, 2), BudgetExceeded);
  FuzzySubset off_grid(h.carrier(),
                       {Grade(1, 3), Grade::zero(), Grade::zero()});
  CHECK_THROWS_AS(oracle_min_left_ideal(h, off_grid, GradeGrid{2}, 1u << 20),
                  std::invalid_argument);
}

TEST_CASE("relabeling permutes cells and preserves structure") {
  std::mt19937 rng(20240907);
  for (int trial = 0; trial < 30; ++trial) {
    FuzzyGammaHyperop h = random_structure(rng, 3, 2, 3);
    std::vector<std::size_t> id = {0, 1, 2};
    CHECK(permute_elements(h, id) == h);

    std::vector<std::size_t> perm = {1, 2, 0};
    FuzzyGammaHyperop moved = permute_elements(h, perm);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t g = 0; g < 2; ++g) {
        for (std::size_t b = 0; b < 3; ++b) {
          for (std::size_t r = 0; r < 3; ++r) {
            CHECK(moved.cell(perm[a], g, perm[b]).at(perm[r]) ==
                  h.cell(a, g, b).at(r));
          }
        }
      }
    }
    CHECK(is_associative(moved).verdict == is_associative(h).verdict);

    std::vector<std::size_t> back = {2, 0, 1};
    CHECK(permute_elements(moved, back) == h);
  }
  FuzzyGammaHyperop h = max_chain_structure(3);
  CHECK_THROWS_AS(permute_elements(h, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(permute_elements(h, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("table comparison orders slots lexicographically") {
  StructureEnumerator en(spec_of(2, 1, 1, StructureFilter::kAll), 1000);
  CHECK(compare_tables(en.decode(3), en.decode(3)) == 0);
  CHECK(compare_tables(en.decode(3), en.decode(7)) < 0);
  CHECK(compare_tables(en.decode(7), en.decode(3)) > 0);
  CHECK_THROWS_AS(compare_tables(en.decode(0), max_chain_structure(3)),
                  std::invalid_argument);
}

TEST_CASE("minimal representatives tile the space under relabeling") {
  StructureEnumerator en(spec_of(2, 1, 1, StructureFilter::kAll), 1000);
  std::uint64_t minimal = 0;
  std::uint64_t swapped_distinct = 0;
  while (auto h = en.next()) {
    if (!is_minimal_under_relabeling(*h)) continue;
    ++minimal;
    if (!(permute_elements(*h, {1, 0}) == *h)) ++swapped_distinct;
  }
  // Orbits have size 1 (fixed by the swap) or 2, and orbit counts add up to
  // the whole space.
  CHECK(minimal + swapped_distinct == 256);
}

TEST_CASE("crisp census rejects non-associative tables") {
  CHECK(count_crisp_hypersemigroups(1, 1, 100) == 1);
  CHECK(count_crisp_hypersemigroups(1, 2, 100) == 1);
  CHECK_THROWS_AS(count_crisp_hypersemigroups(3, 1, 100), BudgetExceeded);
}
