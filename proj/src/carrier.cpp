#include "hyperlab/carrier.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hyperlab {

namespace {

void check_labels(const std::vector<std::string>& labels, const char* what) {
  if (labels.empty()) {
    throw std::invalid_argument(std::string(what) + " set must be non-empty");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument(std::string("duplicate ") + what + " label '" +
                                  label + "'");
    }
  }
}

}  // namespace

Carrier::Carrier(std::vector<std::string> elements, std::vector<std::string> sorts)
    : elements_(std::move(elements)), sorts_(std::move(sorts)) {
  check_labels(elements_, "element");
  check_labels(sorts_, "sort");
}

std::optional<std::size_t> Carrier::element_index(const std::string& label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> Carrier::sort_index(const std::string& label) const {
  auto it = std::find(sorts_.begin(), sorts_.end(), label);
  if (it == sorts_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - sorts_.begin());
}

CarrierPtr make_carrier(std::vector<std::string> elements,
                        std::vector<std::string> sorts) {
  return std::make_shared<const Carrier>(std::move(elements), std::move(sorts));
}

CarrierPtr make_numbered_carrier(std::size_t m_size, std::size_t gamma_size) {
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < m_size; ++i) {
    elements.push_back(std::to_string(i));
  }
  std::vector<std::string> sorts;
  if (gamma_size == 1) {
    sorts.push_back("g");
  } else {
    for (std::size_t j = 0; j < gamma_size; ++j) {
      sorts.push_back("g" + std::to_string(j));
    }
  }
  return make_carrier(std::move(elements), std::move(sorts));
}

bool same_carrier(const CarrierPtr& a, const CarrierPtr& b) {
  if (a == b) {
    return true;
  }
  if (!a || !b) {
    return false;
  }
  return *a == *b;
}

CrispSubset::CrispSubset(CarrierPtr carrier)
    : carrier_(std::move(carrier)), member_(carrier_->size(), false) {}

CrispSubset::CrispSubset(CarrierPtr carrier, const std::vector<std::size_t>& members)
    : CrispSubset(std::move(carrier)) {
  for (std::size_t i : members) {
    if (i >= member_.size()) {
      throw std::out_of_range("subset member index " + std::to_string(i) +
                              " exceeds carrier size " +
                              std::to_string(member_.size()));
    }
    member_[i] = true;
  }
}

CrispSubset CrispSubset::full(CarrierPtr carrier) {
  CrispSubset s(std::move(carrier));
  std::fill(s.member_.begin(), s.member_.end(), true);
  return s;
}

bool CrispSubset::empty() const {
  return std::none_of(member_.begin(), member_.end(), [](bool b) { return b; });
}

std::size_t CrispSubset::count() const {
  return static_cast<std::size_t>(std::count(member_.begin(), member_.end(), true));
}

bool CrispSubset::is_full() const {
  return std::all_of(member_.begin(), member_.end(), [](bool b) { return b; });
}

std::vector<std::size_t> CrispSubset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) {
      out.push_back(i);
    }
  }
  return out;
}

bool CrispSubset::subset_of(const CrispSubset& other) const {
  if (!same_carrier(carrier_, other.carrier_)) {
    throw std::invalid_argument("subset_of: carrier mismatch");
  }
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i] && !other.member_[i]) {
      return false;
    }
  }
  return true;
}

CrispSubset set_union(const CrispSubset& a, const CrispSubset& b) {
  if (!same_carrier(a.carrier_, b.carrier_)) {
    throw std::invalid_argument("set_union: carrier mismatch");
  }
  CrispSubset out = a;
  for (std::size_t i = 0; i < out.member_.size(); ++i) {
    if (b.member_[i]) {
      out.member_[i] = true;
    }
  }
  return out;
}

CrispSubset set_intersection(const CrispSubset& a, const CrispSubset& b) {
  if (!same_carrier(a.carrier_, b.carrier_)) {
    throw std::invalid_argument("set_intersection: carrier mismatch");
  }
  CrispSubset out = a;
  for (std::size_t i = 0; i < out.member_.size(); ++i) {
    if (!b.member_[i]) {
      out.member_[i] = false;
    }
  }
  return out;
}

bool operator==(const CrispSubset& a, const CrispSubset& b) {
  return same_carrier(a.carrier_, b.carrier_) && a.member_ == b.member_;
}

std::string CrispSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < member_.size(); ++i) {
    if (member_[i]) {
      if (!first) {
        out += ",";
      }
      out += carrier_->element_label(i);
      first = false;
    }
  }
  out += "}";
  return out;
}

FuzzySubset::FuzzySubset(CarrierPtr carrier)
    : carrier_(std::move(carrier)), grades_(carrier_->size()) {}

FuzzySubset::FuzzySubset(CarrierPtr carrier, std::vector<Grade> grades)
    : carrier_(std::move(carrier)), grades_(std::move(grades)) {
  if (grades_.size() != carrier_->size()) {
    throw std::invalid_argument("fuzzy subset has " + std::to_string(grades_.size()) +
                                " grades for a carrier of size " +
                                std::to_string(carrier_->size()));
  }
}

FuzzySubset FuzzySubset::characteristic(const CrispSubset& set) {
  FuzzySubset out(set.carrier());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (set.contains(i)) {
      out.grades_[i] = Grade::one();
    }
  }
  return out;
}

FuzzySubset FuzzySubset::point(CarrierPtr carrier, std::size_t i) {
  FuzzySubset out(std::move(carrier));
  out.grades_.at(i) = Grade::one();
  return out;
}

FuzzySubset FuzzySubset::full(CarrierPtr carrier) {
  return characteristic(CrispSubset::full(std::move(carrier)));
}

bool FuzzySubset::is_zero() const {
  return std::all_of(grades_.begin(), grades_.end(),
                     [](const Grade& g) { return g.is_zero(); });
}

bool FuzzySubset::is_full() const {
  return std::all_of(grades_.begin(), grades_.end(),
                     [](const Grade& g) { return g.is_one(); });
}

CrispSubset FuzzySubset::support() const {
  CrispSubset out(carrier_);
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (!grades_[i].is_zero()) {
      out.insert(i);
    }
  }
  return out;
}

bool operator==(const FuzzySubset& a, const FuzzySubset& b) {
  return same_carrier(a.carrier_, b.carrier_) && a.grades_ == b.grades_;
}

std::string FuzzySubset::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += grades_[i].to_string();
  }
  out += ")";
  return out;
}

namespace {

void require_same_carrier(const FuzzySubset& mu, const FuzzySubset& nu,
                          const char* op) {
  if (!same_carrier(mu.carrier(), nu.carrier())) {
    throw std::invalid_argument(std::string(op) + ": carrier mismatch");
  }
}

}  // namespace

bool leq(const FuzzySubset& mu, const FuzzySubset& nu) {
  require_same_carrier(mu, nu, "leq");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (!(mu.at(i) <= nu.at(i))) {
      return false;
    }
  }
  return true;
}

FuzzySubset join(const FuzzySubset& mu, const FuzzySubset& nu) {
  require_same_carrier(mu, nu, "join");
  FuzzySubset out(mu.carrier());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    out.set(i, join(mu.at(i), nu.at(i)));
  }
  return out;
}

FuzzySubset meet(const FuzzySubset& mu, const FuzzySubset& nu) {
  require_same_carrier(mu, nu, "meet");
  FuzzySubset out(mu.carrier());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    out.set(i, meet(mu.at(i), nu.at(i)));
  }
  return out;
}

}  // namespace hyperlab
