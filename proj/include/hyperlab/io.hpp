#ifndef HYPERLAB_IO_HPP
#define HYPERLAB_IO_HPP

#include <string>

#include "hyperlab/bridge.hpp"
#include "hyperlab/crisp.hpp"
#include "hyperlab/hyperop.hpp"
#include "hyperlab/relations.hpp"

namespace hyperlab {

/// Malformed or inconsistent input document; the message names the offending
/// key, cell or field.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structure documents are JSON objects with keys:
///   carrier      array of element labels
///   gamma        array of sort labels
///   denominator  positive integer, the common denominator
///   table        object keyed "a|gamma|b" mapping element label to integer
///                numerator; labels absent from a cell mean grade 0
/// Every (a, gamma, b) key must be present. parse(emit(h)) == h always, and
/// emit(parse(doc)) == doc when doc is canonical (minimal denominator,
/// table keys in carrier order, zero grades omitted).
FuzzyGammaHyperop parse_structure(const std::string& text);
std::string emit_structure(const FuzzyGammaHyperop& h);

/// Crisp documents replace "denominator" and numerators with cell arrays:
///   table        object keyed "a|gamma|b" mapping to an array of labels
CrispGammaHyperop parse_crisp_structure(const std::string& text);
std::string emit_crisp_structure(const CrispGammaHyperop& k);

/// Subset documents: {"denominator": d, "grades": {label: numerator}};
/// absent labels mean 0. The carrier comes from the ambient structure.
FuzzySubset parse_subset(const std::string& text, const CarrierPtr& carrier);
std::string emit_subset(const FuzzySubset& mu);

/// Crisp subsets on the command line: JSON array of element labels.
CrispSubset parse_crisp_subset(const std::string& text, const CarrierPtr& carrier);
std::string emit_crisp_subset(const CrispSubset& s);

/// Relation block syntax over element labels: "a,b|c" with optional braces,
/// "{a,b}|{c}". Blocks must partition the carrier.
EquivRelation parse_relation(const std::string& text, const CarrierPtr& carrier);
std::string emit_relation(const EquivRelation& rho);

/// Map files: JSON object from source labels to target labels, total.
CarrierMap parse_map(const std::string& text, const CarrierPtr& source,
                     const CarrierPtr& target);

}  // namespace hyperlab

#endif  // HYPERLAB_IO_HPP
