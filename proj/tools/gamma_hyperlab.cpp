// Command-line front end: scriptable checks and transforms over fuzzy
// Gamma-hyperstructure documents. Exit codes: 0 = pass or output produced,
// 1 = check failed (witness in the report), 2 = usage or format error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperlab/bridge.hpp"
#include "hyperlab/cuts.hpp"
#include "hyperlab/families.hpp"
#include "hyperlab/hyperop.hpp"
#include "hyperlab/ideals.hpp"
#include "hyperlab/io.hpp"
#include "hyperlab/relations.hpp"
#include "hyperlab/search.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hyperlab::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string verdict_line(const std::string& name, const hyperlab::CheckReport& rep) {
  if (rep.verdict) return name + ": yes\n";
  return name + ": no (witness: " + rep.witness->to_string() + ")\n";
}

ordered_json verdict_json(const hyperlab::CheckReport& rep) {
  ordered_json out;
  out["verdict"] = rep.verdict;
  if (rep.witness) out["witness"] = rep.witness->to_string();
  return out;
}

struct CommonOptions {
  bool json = false;
};

int run_check(const std::string& file, bool axioms, const CommonOptions& common) {
  (void)axioms;
  hyperlab::FuzzyGammaHyperop h = hyperlab::parse_structure(read_file(file));
  hyperlab::CheckReport assoc = hyperlab::is_associative(h);
  hyperlab::CheckReport group = hyperlab::is_hypergroup(h);
  if (common.json) {
    ordered_json out;
    out["associative"] = verdict_json(assoc);
    out["hypergroup"] = verdict_json(group);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << verdict_line("associative", assoc);
    std::cout << verdict_line("hypergroup", group);
  }
  return assoc.verdict ? 0 : 1;
}

int run_compose(const std::string& file, const std::string& gamma,
                const std::string& a, const std::string& b, const std::string& mu_file,
                const std::string& nu_file) {
  hyperlab::FuzzyGammaHyperop h = hyperlab::parse_structure(read_file(file));
  const hyperlab::CarrierPtr& carrier = h.carrier();
  auto g = carrier->sort_index(gamma);
  if (!g) throw hyperlab::ParseError("unknown sort label \"" + gamma + "\"");
  auto elem = [&](const std::string& label) {
    auto idx = carrier->element_index(label);
    if (!idx) throw hyperlab::ParseError("unknown element label \"" + label + "\"");
    return *idx;
  };
  bool left_elem = !a.empty();
  bool right_elem = !b.empty();
  if (left_elem == !mu_file.empty() || right_elem == !nu_file.empty()) {
    throw CLI::ValidationError(
        "compose", "give exactly one of --a/--mu and exactly one of --b/--nu");
  }
  hyperlab::FuzzySubset out = [&] {
    if (left_elem && right_elem) return hyperlab::compose_elem(h, elem(a), *g, elem(b));
    if (left_elem) {
      return hyperlab::compose_left(
          h, elem(a), *g, hyperlab::parse_subset(read_file(nu_file), carrier));
    }
    if (right_elem) {
      return hyperlab::compose_right(
          h, hyperlab::parse_subset(read_file(mu_file), carrier), *g, elem(b));
    }
    return hyperlab::compose_fuzzy(
        h, hyperlab::parse_subset(read_file(mu_file), carrier), *g,
        hyperlab::parse_subset(read_file(nu_file), carrier));
  }();
  std::cout << hyperlab::emit_subset(out);
  return 0;
}

int run_cut(const std::string& file, const std::string& p_text) {
  hyperlab::FuzzyGammaHyperop h = hyperlab::parse_structure(read_file(file));
  hyperlab::Grade p = hyperlab::Grade::parse(p_text);
  std::cout << hyperlab::emit_crisp_structure(hyperlab::cut_structure(h, p));
  return 0;
}

int run_ideal(const std::string& file, const std::string& subset_file,
              const std::string& kind, const CommonOptions& common) {
  hyperlab::FuzzyGammaHyperop h = hyperlab::parse_structure(read_file(file));
  hyperlab::FuzzySubset mu = hyperlab::parse_subset(read_file(subset_file), h.carrier());
  hyperlab::CheckReport rep;
  std::string name;
  if (kind == "sub") {
    rep = hyperlab::is_sub_hypersemigroup(h, mu);
    name = "sub-hypersemigroup";
  } else if (kind == "left") {
    rep = hyperlab::is_left_ideal(h, mu);
    name = "left ideal";
  } else if (kind == "right") {
    rep = hyperlab::is_right_ideal(h, mu);
    name = "right ideal";
  } else if (kind == "bi") {
    rep = hyperlab::is_bi_ideal(h, mu);
    name = "bi-ideal";
  } else {
    rep = hyperlab::is_interior_ideal(h, mu);
    name = "interior ideal";
  }
  if (common.json) {
    ordered_json out = verdict_json(rep);
    out["kind"] = name;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << verdict_line(name, rep);
  }
  return rep.verdict ? 0 : 1;
}

int run_generate(const std::string& file, const std::string& subset_file, bool right,
                 bool oracle, std::uint64_t budget) {
  hyperlab::FuzzyGammaHyperop h = hyperlab::parse_structure(read_file(file));
  hyperlab::FuzzySubset mu = hyperlab::parse_subset(read_file(subset_file), h.carrier());
  hyperlab::FuzzySubset out = right ? hyperlab::generate_right_ideal(h, mu)
                                    : hyperlab::generate_left_ideal(h, mu);
  std::cout << hyperlab::emit_subset(out);
  if (oracle && !right) {
    std::int64_t den = 1;
    for (const hyperlab::FuzzySubset& cell : h.cells()) {
      for (const hyperlab::Grade& g : cell.grades()) den = std::lcm(den, g.denominator());
    }
    for (const hyperlab::Grade& g : mu.grades()) den = std::lcm(den, g.denominator());
    hyperlab::FuzzySubset truth =
        hyperlab::oracle_min_left_ideal(h, mu, hyperlab::GradeGrid{den}, budget);
    if (!(truth == out)) {
      std::cout << "oracle: disagree (oracle value " << hyperlab::emit_subset(truth)
                << ")\n";
      return 1;
    }
  }
  return 0;
}

int run_convert(const std::string& file, const std::string& to) {
  if (to == "crisp") {
    hyperlab::FuzzyGammaHyperop h = hyperlab::parse_structure(read_file(file));
    std::cout << hyperlab::emit_crisp_structure(hyperlab::psi(h));
    return 0;
  }
  hyperlab::CrispGammaHyperop k = hyperlab::parse_crisp_structure(read_file(file));
  std::cout << hyperlab::emit_structure(hyperlab::phi(k));
  return 0;
}

int run_hom(const std::string& source_file, const std::string& target_file,
            const std::string& map_file, bool crisp, const CommonOptions& common) {
  hyperlab::CheckReport rep;
  std::string name;
  if (crisp) {
    hyperlab::CrispGammaHyperop k1 = hyperlab::parse_crisp_structure(read_file(source_file));
    hyperlab::CrispGammaHyperop k2 = hyperlab::parse_crisp_structure(read_file(target_file));
    hyperlab::CarrierMap f =
        hyperlab::parse_map(read_file(map_file), k1.carrier(), k2.carrier());
    rep = hyperlab::is_crisp_homomorphism(f, k1, k2);
    name = "crisp homomorphism";
  } else {
    hyperlab::FuzzyGammaHyperop h1 = hyperlab::parse_structure(read_file(source_file));
    hyperlab::FuzzyGammaHyperop h2 = hyperlab::parse_structure(read_file(target_file));
    hyperlab::CarrierMap f =
        hyperlab::parse_map(read_file(map_file), h1.carrier(), h2.carrier());
    rep = hyperlab::is_fuzzy_homomorphism(f, h1, h2);
    name = "fuzzy homomorphism";
  }
  if (common.json) {
    ordered_json out = verdict_json(rep);
    out["kind"] = name;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << verdict_line(name, rep);
  }
  return rep.verdict ? 0 : 1;
}

int run_relation(const std::string& file, const std::string& relation, bool strong,
                 const CommonOptions& common) {
  hyperlab::FuzzyGammaHyperop h = hyperlab::parse_structure(read_file(file));
  hyperlab::EquivRelation rho = hyperlab::parse_relation(relation, h.carrier());
  hyperlab::CheckReport rep = strong ? hyperlab::is_fuzzy_strongly_regular(h, rho)
                                     : hyperlab::is_fuzzy_regular(h, rho);
  std::string name = strong ? "strongly regular" : "regular";
  if (common.json) {
    ordered_json out = verdict_json(rep);
    out["kind"] = name;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << verdict_line(name, rep);
  }
  return rep.verdict ? 0 : 1;
}

int run_quotient(const std::string& file, const std::string& relation, bool strong,
                 bool fuzzy) {
  hyperlab::FuzzyGammaHyperop h = hyperlab::parse_structure(read_file(file));
  hyperlab::EquivRelation rho = hyperlab::parse_relation(relation, h.carrier());
  if (strong) {
    hyperlab::CheckReport rep = hyperlab::is_fuzzy_strongly_regular(h, rho);
    if (!rep.verdict) {
      std::cout << verdict_line("strongly regular", rep);
      return 1;
    }
  }
  if (fuzzy) {
    hyperlab::FuzzyQuotient q = hyperlab::quotient_fuzzy(h, rho);
    if (!q.strongly_regular) {
      std::cerr << "warning: relation is not strongly regular; the table below"
                   " need not be associative\n";
    }
    std::cout << hyperlab::emit_structure(q.structure);
    return 0;
  }
  try {
    std::cout << hyperlab::emit_crisp_structure(hyperlab::quotient_crisp(h, rho));
  } catch (const hyperlab::QuotientError& e) {
    std::cout << "quotient: undefined (witness: " << e.witness().to_string() << ")\n";
    return 1;
  }
  return 0;
}

int run_enumerate(std::size_t m, std::size_t gammas, std::int64_t den,
                  const std::string& filter, std::uint64_t cursor, std::uint64_t limit,
                  std::uint64_t budget, bool distinct) {
  hyperlab::EnumSpec spec;
  spec.m_size = m;
  spec.gamma_size = gammas;
  spec.grid = hyperlab::GradeGrid{den};
  spec.filter = hyperlab::parse_filter(filter);
  hyperlab::StructureEnumerator en(spec, budget);
  en.seek(cursor);
  if (limit == 0) {
    std::uint64_t matched;
    if (distinct) {
      matched = 0;
      while (auto h = en.next()) {
        if (hyperlab::is_minimal_under_relabeling(*h)) ++matched;
      }
    } else {
      matched = en.count_matching();
      en.seek(en.raw_count());
    }
    std::cout << "space: " << en.raw_count() << "\n";
    std::cout << "matched: " << matched << "\n";
    std::cout << "cursor: " << en.cursor() << "\n";
    return 0;
  }
  std::uint64_t emitted = 0;
  while (emitted < limit) {
    auto h = en.next();
    if (!h) break;
    std::uint64_t at = en.cursor() - 1;
    if (distinct && !hyperlab::is_minimal_under_relabeling(*h)) continue;
    std::cout << "index: " << at << "\n";
    std::cout << hyperlab::emit_structure(*h);
    ++emitted;
  }
  std::cout << "cursor: " << en.cursor() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for finite fuzzy Gamma-hyperstructures"};
  app.require_subcommand(1);
  CommonOptions common;
  app.add_flag("--json", common.json, "emit machine-readable reports");

  std::string file, subset_file, map_file, target_file;
  std::string gamma, a, b, mu_file, nu_file, p_text, to, relation, filter = "all";
  bool axioms = false, right = false, oracle = false, strong = false, fuzzy = false;
  bool crisp = false, distinct = false;
  std::size_t m = 1, gammas = 1;
  std::int64_t den = 1;
  std::uint64_t cursor = 0, limit = 0, budget = 10000000;

  CLI::App* check = app.add_subcommand("check", "structure axioms");
  check->add_option("file", file)->required();
  check->add_flag("--axioms", axioms, "report associativity and reproduction");

  CLI::App* compose = app.add_subcommand("compose", "evaluate a composition");
  compose->add_option("file", file)->required();
  compose->add_option("--gamma", gamma)->required();
  compose->add_option("--a", a, "left element label");
  compose->add_option("--b", b, "right element label");
  compose->add_option("--mu", mu_file, "left fuzzy subset file");
  compose->add_option("--nu", nu_file, "right fuzzy subset file");

  CLI::App* cut = app.add_subcommand("cut", "crisp structure at a threshold");
  cut->add_option("file", file)->required();
  cut->add_option("--p", p_text)->required();

  CLI::App* ideal = app.add_subcommand("ideal", "ideal predicates");
  ideal->add_option("file", file)->required();
  ideal->add_option("--subset", subset_file)->required();
  bool k_sub = false, k_left = false, k_right = false, k_bi = false, k_interior = false;
  ideal->add_flag("--sub", k_sub, "sub-hypersemigroup");
  ideal->add_flag("--left", k_left, "left ideal");
  ideal->add_flag("--right", k_right, "right ideal");
  ideal->add_flag("--bi", k_bi, "bi-ideal");
  ideal->add_flag("--interior", k_interior, "interior ideal");

  CLI::App* generate = app.add_subcommand("generate", "generated ideal closure");
  generate->add_option("file", file)->required();
  generate->add_option("--subset", subset_file)->required();
  generate->add_flag("--right", right, "right ideal instead of left");
  generate->add_flag("--oracle", oracle, "cross-check against the brute-force minimum");
  generate->add_option("--budget", budget, "enumeration budget for --oracle");

  CLI::App* convert = app.add_subcommand("convert", "support/characteristic bridge");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"crisp", "fuzzy"}));

  CLI::App* hom = app.add_subcommand("hom", "homomorphism check along a map");
  hom->add_option("source", file)->required();
  hom->add_option("target", target_file)->required();
  hom->add_option("--map", map_file)->required();
  hom->add_flag("--crisp", crisp, "crisp structures and elementwise images");

  CLI::App* rel = app.add_subcommand("relation", "regularity of an equivalence");
  rel->add_option("file", file)->required();
  rel->add_option("--relation", relation)->required();
  rel->add_flag("--strong", strong, "strong regularity");

  CLI::App* quot = app.add_subcommand("quotient", "quotient structure");
  quot->add_option("file", file)->required();
  quot->add_option("--relation", relation)->required();
  quot->add_flag("--strong", strong, "require strong regularity first");
  quot->add_flag("--fuzzy", fuzzy, "sup-over-representatives fuzzy table");

  CLI::App* enumerate = app.add_subcommand("enumerate", "census of grade tables");
  enumerate->add_option("--m", m, "carrier size")->required();
  enumerate->add_option("--gamma", gammas, "sort count");
  enumerate->add_option("--den", den, "grade grid denominator")->required();
  enumerate->add_option("--filter", filter)
      ->check(CLI::IsMember({"all", "proper", "associative", "hypergroup"}));
  enumerate->add_option("--cursor", cursor, "resume from this raw index");
  enumerate->add_option("--limit", limit, "emit up to this many tables");
  enumerate->add_option("--budget", budget, "largest admissible raw space");
  enumerate->add_flag("--distinct", distinct, "one table per relabeling class");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(file, axioms, common);
    if (compose->parsed()) return run_compose(file, gamma, a, b, mu_file, nu_file);
    if (cut->parsed()) return run_cut(file, p_text);
    if (ideal->parsed()) {
      int kinds = int(k_sub) + int(k_left) + int(k_right) + int(k_bi) + int(k_interior);
      if (kinds != 1) {
        std::cerr << "ideal: pick exactly one of --sub --left --right --bi --interior\n";
        return 2;
      }
      std::string kind = k_sub ? "sub"
                       : k_left ? "left"
                       : k_right ? "right"
                       : k_bi ? "bi"
                              : "interior";
      return run_ideal(file, subset_file, kind, common);
    }
    if (generate->parsed()) return run_generate(file, subset_file, right, oracle, budget);
    if (convert->parsed()) return run_convert(file, to);
    if (hom->parsed()) return run_hom(file, target_file, map_file, crisp, common);
    if (rel->parsed()) return run_relation(file, relation, strong, common);
    if (quot->parsed()) return run_quotient(file, relation, strong, fuzzy);
    if (enumerate->parsed()) {
      return run_enumerate(m, gammas, den, filter, cursor, limit, budget, distinct);
    }
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const hyperlab::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hyperlab::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
