#include "hyperlab/io.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

#include <json.hpp>

namespace hyperlab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<std::string> label_array(const ordered_json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const ordered_json& arr = doc.at(key);
  if (!arr.is_array() || arr.empty()) {
    throw ParseError(std::string("\"") + key + "\" must be a non-empty array");
  }
  std::vector<std::string> out;
  out.reserve(arr.size());
  for (const ordered_json& v : arr) {
    if (!v.is_string()) {
      throw ParseError(std::string("\"") + key + "\" entries must be strings");
    }
    std::string label = v.get<std::string>();
    if (label.empty() || label.find('|') != std::string::npos) {
      throw ParseError(std::string("bad label \"") + label + "\" in \"" + key +
                       "\": labels are non-empty and free of '|'");
    }
    out.push_back(std::move(label));
  }
  return out;
}

CarrierPtr carrier_from(const ordered_json& doc) {
  try {
    return make_carrier(label_array(doc, "carrier"), label_array(doc, "gamma"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::int64_t denominator_from(const ordered_json& doc) {
  if (!doc.contains("denominator")) throw ParseError("missing key \"denominator\"");
  const ordered_json& d = doc.at("denominator");
  if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) {
    throw ParseError("\"denominator\" must be a positive integer");
  }
  return d.get<std::int64_t>();
}

std::string cell_key(const Carrier& c, std::size_t a, std::size_t g, std::size_t b) {
  return c.element_label(a) + "|" + c.sort_label(g) + "|" + c.element_label(b);
}

const ordered_json& table_from(const ordered_json& doc, const Carrier& c) {
  if (!doc.contains("table")) throw ParseError("missing key \"table\"");
  const ordered_json& table = doc.at("table");
  if (!table.is_object()) throw ParseError("\"table\" must be an object");
  std::size_t expected = c.size() * c.sort_count() * c.size();
  if (table.size() != expected) {
    for (const auto& item : table.items()) {
      const std::string& key = item.key();
      std::size_t p = key.find('|');
      std::size_t q = key.rfind('|');
      if (p == std::string::npos || q == p ||
          !c.element_index(key.substr(0, p)) ||
          !c.sort_index(key.substr(p + 1, q - p - 1)) ||
          !c.element_index(key.substr(q + 1))) {
        throw ParseError("unexpected table key \"" + key + "\"");
      }
    }
    throw ParseError("table has " + std::to_string(table.size()) + " cells, expected " +
                     std::to_string(expected));
  }
  return table;
}

FuzzySubset grades_from(const ordered_json& cell, const CarrierPtr& carrier,
                        std::int64_t den, const std::string& where) {
  if (!cell.is_object()) {
    throw ParseError(where + ": cell must be an object of label to numerator");
  }
  FuzzySubset out(carrier);
  for (const auto& item : cell.items()) {
    auto idx = carrier->element_index(item.key());
    if (!idx) {
      throw ParseError(where + ": unknown element label \"" + item.key() + "\"");
    }
    if (!item.value().is_number_integer()) {
      throw ParseError(where + ": numerator for \"" + item.key() +
                       "\" must be an integer");
    }
    std::int64_t num = item.value().get<std::int64_t>();
    if (num < 0 || num > den) {
      throw ParseError(where + ": numerator " + std::to_string(num) + " for \"" +
                       item.key() + "\" is outside [0, " + std::to_string(den) + "]");
    }
    out.set(*idx, Grade(num, den));
  }
  return out;
}

std::int64_t common_denominator(const std::vector<const FuzzySubset*>& parts) {
  std::int64_t den = 1;
  for (const FuzzySubset* mu : parts) {
    for (const Grade& g : mu->grades()) {
      std::int64_t d = g.denominator();
      std::int64_t gc = std::gcd(den, d);
      if (den / gc > std::numeric_limits<std::int64_t>::max() / d) {
        throw std::invalid_argument("common denominator overflows");
      }
      den = den / gc * d;
    }
  }
  return den;
}

ordered_json grades_json(const FuzzySubset& mu, std::int64_t den) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Grade& g = mu.at(i);
    if (g.is_zero()) continue;
    out[mu.carrier()->element_label(i)] = g.numerator() * (den / g.denominator());
  }
  return out;
}

}  // namespace

FuzzyGammaHyperop parse_structure(const std::string& text) {
  ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "carrier" && key != "gamma" && key != "denominator" && key != "table") {
      throw ParseError("unexpected key \"" + key + "\"");
    }
  }
  CarrierPtr carrier = carrier_from(doc);
  std::int64_t den = denominator_from(doc);
  const ordered_json& table = table_from(doc, *carrier);
  std::vector<FuzzySubset> cells;
  cells.reserve(carrier->size() * carrier->sort_count() * carrier->size());
  for (std::size_t a = 0; a < carrier->size(); ++a) {
    for (std::size_t g = 0; g < carrier->sort_count(); ++g) {
      for (std::size_t b = 0; b < carrier->size(); ++b) {
        std::string key = cell_key(*carrier, a, g, b);
        if (!table.contains(key)) {
          throw ParseError("missing table cell \"" + key + "\"");
        }
        cells.push_back(grades_from(table.at(key), carrier, den, "cell \"" + key + "\""));
      }
    }
  }
  return FuzzyGammaHyperop(carrier, std::move(cells), false);
}

std::string emit_structure(const FuzzyGammaHyperop& h) {
  const Carrier& c = *h.carrier();
  std::vector<const FuzzySubset*> parts;
  parts.reserve(h.cells().size());
  for (const FuzzySubset& cell : h.cells()) parts.push_back(&cell);
  std::int64_t den = common_denominator(parts);
  ordered_json doc;
  doc["carrier"] = c.elements();
  doc["gamma"] = c.sorts();
  doc["denominator"] = den;
  ordered_json table = ordered_json::object();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t g = 0; g < c.sort_count(); ++g) {
      for (std::size_t b = 0; b < c.size(); ++b) {
        table[cell_key(c, a, g, b)] = grades_json(h.cell(a, g, b), den);
      }
    }
  }
  doc["table"] = std::move(table);
  return doc.dump(2) + "\n";
}

CrispGammaHyperop parse_crisp_structure(const std::string& text) {
  ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document must be a JSON object");
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "carrier" && key != "gamma" && key != "table") {
      throw ParseError("unexpected key \"" + key + "\"");
    }
  }
  CarrierPtr carrier = carrier_from(doc);
  const ordered_json& table = table_from(doc, *carrier);
  std::vector<CrispSubset> cells;
  cells.reserve(carrier->size() * carrier->sort_count() * carrier->size());
  for (std::size_t a = 0; a < carrier->size(); ++a) {
    for (std::size_t g = 0; g < carrier->sort_count(); ++g) {
      for (std::size_t b = 0; b < carrier->size(); ++b) {
        std::string key = cell_key(*carrier, a, g, b);
        if (!table.contains(key)) {
          throw ParseError("missing table cell \"" + key + "\"");
        }
        const ordered_json& arr = table.at(key);
        if (!arr.is_array()) {
          throw ParseError("cell \"" + key + "\" must be an array of labels");
        }
        CrispSubset cell(carrier);
        for (const ordered_json& v : arr) {
          if (!v.is_string()) {
            throw ParseError("cell \"" + key + "\" entries must be strings");
          }
          auto idx = carrier->element_index(v.get<std::string>());
          if (!idx) {
            throw ParseError("cell \"" + key + "\": unknown element label \"" +
                             v.get<std::string>() + "\"");
          }
          cell.insert(*idx);
        }
        cells.push_back(std::move(cell));
      }
    }
  }
  return CrispGammaHyperop(carrier, std::move(cells));
}

std::string emit_crisp_structure(const CrispGammaHyperop& k) {
  const Carrier& c = *k.carrier();
  ordered_json doc;
  doc["carrier"] = c.elements();
  doc["gamma"] = c.sorts();
  ordered_json table = ordered_json::object();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t g = 0; g < c.sort_count(); ++g) {
      for (std::size_t b = 0; b < c.size(); ++b) {
        ordered_json arr = ordered_json::array();
        for (std::size_t i : k.cell(a, g, b).indices()) {
          arr.push_back(c.element_label(i));
        }
        table[cell_key(c, a, g, b)] = std::move(arr);
      }
    }
  }
  doc["table"] = std::move(table);
  return doc.dump(2) + "\n";
}

FuzzySubset parse_subset(const std::string& text, const CarrierPtr& carrier) {
  ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("subset document must be a JSON object");
  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    if (key != "denominator" && key != "grades") {
      throw ParseError("unexpected key \"" + key + "\"");
    }
  }
  std::int64_t den = denominator_from(doc);
  if (!doc.contains("grades")) throw ParseError("missing key \"grades\"");
  return grades_from(doc.at("grades"), carrier, den, "\"grades\"");
}

std::string emit_subset(const FuzzySubset& mu) {
  std::int64_t den = common_denominator({&mu});
  ordered_json doc;
  doc["denominator"] = den;
  doc["grades"] = grades_json(mu, den);
  return doc.dump(2) + "\n";
}

CrispSubset parse_crisp_subset(const std::string& text, const CarrierPtr& carrier) {
  ordered_json doc = parse_json(text);
  if (!doc.is_array()) throw ParseError("crisp subset must be a JSON array of labels");
  CrispSubset out(carrier);
  for (const ordered_json& v : doc) {
    if (!v.is_string()) throw ParseError("crisp subset entries must be strings");
    auto idx = carrier->element_index(v.get<std::string>());
    if (!idx) {
      throw ParseError("unknown element label \"" + v.get<std::string>() + "\"");
    }
    if (out.contains(*idx)) {
      throw ParseError("duplicate element label \"" + v.get<std::string>() + "\"");
    }
    out.insert(*idx);
  }
  return out;
}

std::string emit_crisp_subset(const CrispSubset& s) {
  ordered_json doc = ordered_json::array();
  for (std::size_t i : s.indices()) {
    doc.push_back(s.carrier()->element_label(i));
  }
  return doc.dump() + "\n";
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

EquivRelation parse_relation(const std::string& text, const CarrierPtr& carrier) {
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t start = 0;
  for (;;) {
    std::size_t bar = text.find('|', start);
    std::string part = trim(text.substr(start, bar - start));
    if (!part.empty() && part.front() == '{' && part.back() == '}') {
      part = trim(part.substr(1, part.size() - 2));
    }
    if (part.empty()) throw ParseError("relation has an empty block");
    std::vector<std::size_t> block;
    std::size_t at = 0;
    for (;;) {
      std::size_t comma = part.find(',', at);
      std::string label = trim(part.substr(at, comma - at));
      auto idx = carrier->element_index(label);
      if (!idx) throw ParseError("relation names unknown element \"" + label + "\"");
      block.push_back(*idx);
      if (comma == std::string::npos) break;
      at = comma + 1;
    }
    blocks.push_back(std::move(block));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  try {
    return EquivRelation::from_blocks(carrier, blocks);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string emit_relation(const EquivRelation& rho) {
  std::string out;
  for (std::size_t c = 0; c < rho.class_count(); ++c) {
    if (c > 0) out += "|";
    out += rho.class_label(c);
  }
  return out;
}

CarrierMap parse_map(const std::string& text, const CarrierPtr& source,
                     const CarrierPtr& target) {
  ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("map must be a JSON object of label to label");
  std::vector<std::size_t> assignment(source->size(), target->size());
  for (const auto& item : doc.items()) {
    auto from = source->element_index(item.key());
    if (!from) throw ParseError("map names unknown source element \"" + item.key() + "\"");
    if (!item.value().is_string()) {
      throw ParseError("map value for \"" + item.key() + "\" must be a string");
    }
    auto to = target->element_index(item.value().get<std::string>());
    if (!to) {
      throw ParseError("map names unknown target element \"" +
                       item.value().get<std::string>() + "\"");
    }
    assignment[*from] = *to;
  }
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] == target->size()) {
      throw ParseError("map is missing source element \"" + source->element_label(i) +
                       "\"");
    }
  }
  try {
    return CarrierMap(source, target, std::move(assignment));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace hyperlab
