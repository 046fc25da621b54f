#ifndef HYPERLAB_SEARCH_HPP
#define HYPERLAB_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlab/hyperop.hpp"
#include "hyperlab/relations.hpp"

namespace hyperlab {

/// Raised when an enumeration request would exceed its count budget.
class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t required, std::uint64_t allowed);
};

/// The finite grade alphabet {0, 1/d, ..., 1} used by enumerations. Closed
/// under meet and join, so every operation output on grid inputs stays on
/// the grid.
struct GradeGrid {
  std::int64_t denominator = 1;

  std::size_t level_count() const { return static_cast<std::size_t>(denominator) + 1; }
  Grade level(std::size_t k) const;
  bool contains(const Grade& g) const;
};

enum class StructureFilter { kAll, kProper, kAssociative, kHypergroup };

/// Accepts "all", "proper", "associative", "hypergroup".
StructureFilter parse_filter(const std::string& name);
std::string filter_name(StructureFilter f);

struct EnumSpec {
  std::size_t m_size = 1;
  std::size_t gamma_size = 1;
  GradeGrid grid;
  StructureFilter filter = StructureFilter::kAll;
};

/// Streams every grade table over a numbered carrier in lexicographic order
/// of the base-(d+1) digit string (slot order: a, gamma, b, then the grade
/// position r). The cursor is the raw index of the next table to inspect;
/// filters never change indexing, so runs are resumable.
class StructureEnumerator {
public:
  /// Throws BudgetExceeded when (d+1)^(m*g*m*m) > budget.
  StructureEnumerator(EnumSpec spec, std::uint64_t budget);

  const EnumSpec& spec() const { return spec_; }
  const CarrierPtr& carrier() const { return carrier_; }
  std::uint64_t raw_count() const { return raw_count_; }

  std::uint64_t cursor() const { return cursor_; }
  void seek(std::uint64_t cursor);

  /// The table at a raw index, unfiltered; improper tables are representable.
  FuzzyGammaHyperop decode(std::uint64_t raw_index) const;

  bool matches(const FuzzyGammaHyperop& h) const;

  /// Next matching table at raw index >= cursor, advancing the cursor past
  /// it; nullopt when the space is exhausted.
  std::optional<FuzzyGammaHyperop> next();

  /// Matching tables in [cursor, raw_count), split across worker threads.
  /// GAMMA_HYPERLAB_THREADS caps the pool (0 or unset = hardware).
  std::uint64_t count_matching() const;

private:
  EnumSpec spec_;
  CarrierPtr carrier_;
  std::size_t slot_count_;
  std::uint64_t raw_count_;
  std::uint64_t cursor_ = 0;
};

/// All grade vectors over the carrier in lexicographic order (element 0 most
/// significant): first is zero, last is chi_M.
std::vector<FuzzySubset> enumerate_fuzzy_subsets(const CarrierPtr& carrier,
                                                 const GradeGrid& grid,
                                                 std::uint64_t budget);

/// All set partitions of M. Canonical order: restricted-growth strings in
/// decreasing lexicographic order, so the discrete relation comes first and
/// the universal relation last.
std::vector<EquivRelation> enumerate_equiv_relations(const CarrierPtr& carrier,
                                                     std::uint64_t budget);

/// Ground truth for generated ideals: the pointwise meet of every grid
/// subset that contains mu and passes is_left_ideal. The meet is itself a
/// left ideal (intersection closure); violation raises std::logic_error.
FuzzySubset oracle_min_left_ideal(const FuzzyGammaHyperop& h, const FuzzySubset& mu,
                                  const GradeGrid& grid, std::uint64_t budget);

/// Independent census of crisp tables: cells range over nonempty subsets of
/// M and the table must pass crisp_is_associative.
std::uint64_t count_crisp_hypersemigroups(std::size_t m_size, std::size_t gamma_size,
                                          std::uint64_t budget);

/// Worker pool size: GAMMA_HYPERLAB_THREADS, with 0 or unset meaning the
/// hardware concurrency.
unsigned worker_thread_count();

/// The table relabeled along a permutation of element indices: the image
/// structure has cell (p(a), gamma, p(b)) carrying grade of old r at p(r).
FuzzyGammaHyperop permute_elements(const FuzzyGammaHyperop& h,
                                   const std::vector<std::size_t>& perm);

/// Lexicographic comparison of two same-shape tables in slot order.
int compare_tables(const FuzzyGammaHyperop& x, const FuzzyGammaHyperop& y);

/// True when no relabeling of elements produces a lexicographically smaller
/// table; picks one representative per isomorphism class (sorts fixed).
bool is_minimal_under_relabeling(const FuzzyGammaHyperop& h);

}  // namespace hyperlab

#endif  // HYPERLAB_SEARCH_HPP
