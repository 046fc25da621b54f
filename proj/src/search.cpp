#include "hyperlab/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <thread>
#include <utility>

#include "hyperlab/ideals.hpp"

namespace hyperlab {

namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::nullopt;
    }
    out *= base;
  }
  return out;
}

std::uint64_t require_within_budget(std::optional<std::uint64_t> required,
                                    std::uint64_t budget) {
  if (!required) {
    throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max(), budget);
  }
  if (*required > budget) throw BudgetExceeded(*required, budget);
  return *required;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t required, std::uint64_t allowed)
    : std::runtime_error("enumeration needs " + std::to_string(required) +
                         " steps but the budget is " + std::to_string(allowed)) {}

Grade GradeGrid::level(std::size_t k) const {
  return Grade(static_cast<std::int64_t>(k), denominator);
}

bool GradeGrid::contains(const Grade& g) const {
  return denominator % g.denominator() == 0;
}

StructureFilter parse_filter(const std::string& name) {
  if (name == "all") return StructureFilter::kAll;
  if (name == "proper") return StructureFilter::kProper;
  if (name == "associative") return StructureFilter::kAssociative;
  if (name == "hypergroup") return StructureFilter::kHypergroup;
  throw std::invalid_argument("unknown filter: " + name);
}

std::string filter_name(StructureFilter f) {
  switch (f) {
    case StructureFilter::kAll: return "all";
    case StructureFilter::kProper: return "proper";
    case StructureFilter::kAssociative: return "associative";
    case StructureFilter::kHypergroup: return "hypergroup";
  }
  return "all";
}

StructureEnumerator::StructureEnumerator(EnumSpec spec, std::uint64_t budget)
    : spec_(spec),
      carrier_(make_numbered_carrier(spec.m_size, spec.gamma_size)),
      slot_count_(spec.m_size * spec.gamma_size * spec.m_size * spec.m_size) {
  if (spec_.grid.denominator <= 0) {
    throw std::invalid_argument("StructureEnumerator: denominator must be positive");
  }
  raw_count_ =
      require_within_budget(checked_pow(spec_.grid.level_count(), slot_count_), budget);
}

void StructureEnumerator::seek(std::uint64_t cursor) {
  if (cursor > raw_count_) {
    throw std::out_of_range("StructureEnumerator: cursor past the end");
  }
  cursor_ = cursor;
}

FuzzyGammaHyperop StructureEnumerator::decode(std::uint64_t raw_index) const {
  if (raw_index >= raw_count_) {
    throw std::out_of_range("StructureEnumerator: raw index past the end");
  }
  const std::uint64_t base = spec_.grid.level_count();
  std::vector<std::size_t> digit(slot_count_, 0);
  for (std::size_t k = slot_count_; k-- > 0;) {
    digit[k] = static_cast<std::size_t>(raw_index % base);
    raw_index /= base;
  }
  const std::size_t m = spec_.m_size;
  std::vector<FuzzySubset> cells;
  cells.reserve(m * spec_.gamma_size * m);
  std::size_t slot = 0;
  for (std::size_t cell = 0; cell < m * spec_.gamma_size * m; ++cell) {
    std::vector<Grade> grades;
    grades.reserve(m);
    for (std::size_t r = 0; r < m; ++r) grades.push_back(spec_.grid.level(digit[slot++]));
    cells.emplace_back(carrier_, std::move(grades));
  }
  return FuzzyGammaHyperop(carrier_, std::move(cells), false);
}

bool StructureEnumerator::matches(const FuzzyGammaHyperop& h) const {
  switch (spec_.filter) {
    case StructureFilter::kAll:
      return true;
    case StructureFilter::kProper:
      return h.is_proper();
    case StructureFilter::kAssociative:
      return h.is_proper() && is_associative(h).verdict;
    case StructureFilter::kHypergroup:
      return h.is_proper() && is_hypergroup(h).verdict;
  }
  return false;
}

std::optional<FuzzyGammaHyperop> StructureEnumerator::next() {
  while (cursor_ < raw_count_) {
    FuzzyGammaHyperop h = decode(cursor_++);
    if (matches(h)) return h;
  }
  return std::nullopt;
}

std::uint64_t StructureEnumerator::count_matching() const {
  const std::uint64_t begin = cursor_;
  const std::uint64_t end = raw_count_;
  if (begin >= end) return 0;
  const std::uint64_t range = end - begin;
  unsigned workers = worker_thread_count();
  if (static_cast<std::uint64_t>(workers) > range) {
    workers = static_cast<unsigned>(range);
  }
  auto count_range = [this](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t n = 0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      if (matches(decode(i))) ++n;
    }
    return n;
  };
  if (workers <= 1) return count_range(begin, end);
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = range / workers;
  const std::uint64_t extra = range % workers;
  std::uint64_t lo = begin;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t hi = lo + chunk + (w < extra ? 1 : 0);
    pool.emplace_back(
        [&partial, w, lo, hi, &count_range] { partial[w] = count_range(lo, hi); });
    lo = hi;
  }
  for (auto& t : pool) t.join();
  std::uint64_t total = 0;
  for (std::uint64_t n : partial) total += n;
  return total;
}

std::vector<FuzzySubset> enumerate_fuzzy_subsets(const CarrierPtr& carrier,
                                                 const GradeGrid& grid,
                                                 std::uint64_t budget) {
  if (grid.denominator <= 0) {
    throw std::invalid_argument("enumerate_fuzzy_subsets: denominator must be positive");
  }
  const std::size_t m = carrier->size();
  std::uint64_t total =
      require_within_budget(checked_pow(grid.level_count(), m), budget);
  std::vector<FuzzySubset> out;
  out.reserve(static_cast<std::size_t>(total));
  const std::uint64_t base = grid.level_count();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Grade> grades(m, Grade::zero());
    std::uint64_t rest = idx;
    for (std::size_t k = m; k-- > 0;) {
      grades[k] = grid.level(static_cast<std::size_t>(rest % base));
      rest /= base;
    }
    out.emplace_back(carrier, std::move(grades));
  }
  return out;
}

namespace {

void grow_partitions(std::vector<std::size_t>& prefix, std::size_t used,
                     std::size_t m, std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() == m) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t v = 0; v <= used; ++v) {
    prefix.push_back(v);
    grow_partitions(prefix, v == used ? used + 1 : used, m, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<EquivRelation> enumerate_equiv_relations(const CarrierPtr& carrier,
                                                     std::uint64_t budget) {
  const std::size_t m = carrier->size();
  // Bell numbers via the Bell triangle, for the budget precheck.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i < m; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  if (row.back() > budget) throw BudgetExceeded(row.back(), budget);

  std::vector<std::vector<std::size_t>> strings;
  std::vector<std::size_t> prefix{0};
  grow_partitions(prefix, 1, m, strings);
  // Ascending restricted-growth order puts the universal relation first;
  // reverse so the discrete relation leads and the universal one closes.
  std::reverse(strings.begin(), strings.end());
  std::vector<EquivRelation> out;
  out.reserve(strings.size());
  for (const auto& s : strings) out.emplace_back(carrier, s);
  return out;
}

FuzzySubset oracle_min_left_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu,
                                  const GradeGrid& grid, std::uint64_t budget) {
  if (!same_carrier(h.carrier(), mu.carrier())) {
    throw std::invalid_argument("oracle_min_left_ideal: carrier mismatch");
  }
  for (const FuzzySubset& cell : h.cells()) {
    for (const Grade& g : cell.grades()) {
      if (!grid.contains(g)) {
        throw std::invalid_argument("oracle_min_left_ideal: structure grade off the grid");
      }
    }
  }
  for (const Grade& g : mu.grades()) {
    if (!grid.contains(g)) {
      throw std::invalid_argument("oracle_min_left_ideal: subset grade off the grid");
    }
  }
  FuzzySubset acc = FuzzySubset::full(h.carrier());
  for (const FuzzySubset& nu : enumerate_fuzzy_subsets(h.carrier(), grid, budget)) {
    if (!leq(mu, nu)) continue;
    if (!is_left_ideal(h, nu)) continue;
    acc = meet(acc, nu);
  }
  if (!leq(mu, acc) || !is_left_ideal(h, acc)) {
    throw std::logic_error(
        "oracle_min_left_ideal: meet of ideals failed the ideal check");
  }
  return acc;
}

std::uint64_t count_crisp_hypersemigroups(std::size_t m_size, std::size_t gamma_size,
                                          std::uint64_t budget) {
  CarrierPtr carrier = make_numbered_carrier(m_size, gamma_size);
  const std::size_t cell_count = m_size * gamma_size * m_size;
  const std::uint64_t choices = (std::uint64_t{1} << m_size) - 1;
  std::uint64_t total = require_within_budget(checked_pow(choices, cell_count), budget);
  std::uint64_t matched = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<CrispSubset> cells;
    cells.reserve(cell_count);
    std::uint64_t rest = idx;
    std::vector<std::uint64_t> digit(cell_count, 0);
    for (std::size_t k = cell_count; k-- > 0;) {
      digit[k] = rest % choices;
      rest /= choices;
    }
    for (std::size_t k = 0; k < cell_count; ++k) {
      std::uint64_t mask = digit[k] + 1;
      CrispSubset cell(carrier);
      for (std::size_t i = 0; i < m_size; ++i) {
        if (mask & (std::uint64_t{1} << i)) cell.insert(i);
      }
      cells.push_back(std::move(cell));
    }
    CrispGammaHyperop k(carrier, std::move(cells));
    if (crisp_is_associative(k)) ++matched;
  }
  return matched;
}

unsigned worker_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const char* env = std::getenv("GAMMA_HYPERLAB_THREADS");
  if (env == nullptr || *env == '\0') return hw;
  char* end = nullptr;
  unsigned long parsed = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || parsed == 0) return hw;
  return static_cast<unsigned>(parsed);
}

FuzzyGammaHyperop permute_elements(const FuzzyGammaHyperop& h,
                                   const std::vector<std::size_t>& perm) {
  const std::size_t m = h.size();
  if (perm.size() != m) {
    throw std::invalid_argument("permute_elements: permutation has the wrong size");
  }
  std::vector<bool> seen(m, false);
  for (std::size_t v : perm) {
    if (v >= m || seen[v]) {
      throw std::invalid_argument("permute_elements: not a permutation");
    }
    seen[v] = true;
  }
  std::vector<FuzzySubset> cells(m * h.sort_count() * m, FuzzySubset(h.carrier()));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t g = 0; g < h.sort_count(); ++g) {
      for (std::size_t b = 0; b < m; ++b) {
        FuzzySubset image(h.carrier());
        const FuzzySubset& old = h.cell(a, g, b);
        for (std::size_t r = 0; r < m; ++r) image.set(perm[r], old.at(r));
        cells[(perm[a] * h.sort_count() + g) * m + perm[b]] = std::move(image);
      }
    }
  }
  return FuzzyGammaHyperop(h.carrier(), std::move(cells), false);
}

int compare_tables(const FuzzyGammaHyperop& x, const FuzzyGammaHyperop& y) {
  if (x.size() != y.size() || x.sort_count() != y.sort_count()) {
    throw std::invalid_argument("compare_tables: shape mismatch");
  }
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t g = 0; g < x.sort_count(); ++g) {
      for (std::size_t b = 0; b < x.size(); ++b) {
        const FuzzySubset& xc = x.cell(a, g, b);
        const FuzzySubset& yc = y.cell(a, g, b);
        for (std::size_t r = 0; r < x.size(); ++r) {
          if (xc.at(r) < yc.at(r)) return -1;
          if (yc.at(r) < xc.at(r)) return 1;
        }
      }
    }
  }
  return 0;
}

bool is_minimal_under_relabeling(const FuzzyGammaHyperop& h) {
  std::vector<std::size_t> perm(h.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (compare_tables(permute_elements(h, perm), h) < 0) return false;
  }
  return true;
}

}  // namespace hyperlab
