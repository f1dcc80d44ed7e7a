#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "ellislab/ellis_element.hpp"
#include "ellislab/finite_monoid.hpp"
#include "ellislab/witness.hpp"

using nlohmann::json;
using namespace ellislab;

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::CapExceeded: return 2;
    case ErrorKind::Internal: return 3;
    default: return 1;
  }
}

int enumeration_cap(std::optional<int> flag_cap) {
  if (flag_cap) return *flag_cap;
  if (const char* env = std::getenv("ELLIS_LAB_CAP")) {
    try {
      return std::stoi(env);
    } catch (...) {
      fail(ErrorKind::ParseError, "ELLIS_LAB_CAP is not an integer");
    }
  }
  return kDefaultEnumerationCap;
}

MonoidMode parse_mode(const std::string& mode) {
  if (mode == "I") return MonoidMode::I;
  if (mode == "J") return MonoidMode::J;
  fail(ErrorKind::ParseError, "mode must be I or J");
}

FiniteMonoid monoid_table(int n, MonoidMode mode, int cap) {
  return close_under_composition(enumerate_monoid(n, mode, cap)).monoid;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(ErrorKind::ParseError, "cannot open " + out_path);
  out << text << "\n";
}

json monoid_to_json(const FiniteMonoid& m) {
  json j;
  j["order"] = m.size();
  j["identity"] = m.identity;
  j["zero"] = m.zero ? json(*m.zero) : json(nullptr);
  j["mul"] = m.mul;
  j["star"] = m.star ? json(*m.star) : json(nullptr);
  j["labels"] = m.labels;
  return j;
}

FiniteMonoid monoid_from_json(const json& j) {
  FiniteMonoid m;
  try {
    m.labels = j.at("labels").get<std::vector<std::string>>();
    m.mul = j.at("mul").get<std::vector<std::vector<int>>>();
    m.identity = j.at("identity").get<int>();
    if (!j.at("zero").is_null()) m.zero = j.at("zero").get<int>();
    if (!j.at("star").is_null()) m.star = j.at("star").get<std::vector<int>>();
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad monoid JSON: ") + e.what());
  }
  m.validate();
  return m;
}

int cmd_enumerate(int n, const std::string& mode_text, const std::string& format,
                  std::optional<int> cap_flag, const std::string& out_path) {
  if (n < 1) fail(ErrorKind::ParseError, "--n must be positive");
  MonoidMode mode = parse_mode(mode_text);
  int cap = enumeration_cap(cap_flag);
  auto elements = enumerate_monoid(n, mode, cap);

  // the full table is quadratic in the order; build it only at desk scale
  std::optional<FiniteMonoid> table;
  if (elements.size() <= 300)
    table = close_under_composition(elements).monoid;

  std::vector<int> ideal_sizes, quotient_orders;
  for (int k = 0; k <= n; ++k) {
    if (table) {
      IdealSet ideal = rank_ideal(*table, k);
      ideal_sizes.push_back(static_cast<int>(ideal.size()));
      quotient_orders.push_back(rees_quotient(*table, ideal).quotient.size());
    } else {
      // the empty map sits inside every rank ideal, so the Rees order law
      // |S| - |I| + 1 applies directly
      int members = 0;
      for (const auto& f : elements)
        if (f.rank() <= k) ++members;
      ideal_sizes.push_back(members);
      quotient_orders.push_back(static_cast<int>(elements.size()) - members + 1);
    }
  }

  if (format == "csv") {
    std::ostringstream csv;
    csv << "n,mode,order,rank_ideal_sizes,quotient_orders\n";
    csv << n << "," << mode_text << "," << elements.size() << ",";
    for (size_t i = 0; i < ideal_sizes.size(); ++i)
      csv << (i ? ";" : "") << ideal_sizes[i];
    csv << ",";
    for (size_t i = 0; i < quotient_orders.size(); ++i)
      csv << (i ? ";" : "") << quotient_orders[i];
    emit(csv.str(), out_path);
    return 0;
  }
  if (format != "json") fail(ErrorKind::ParseError, "format must be json or csv");
  json j;
  j["n"] = n;
  j["mode"] = mode_text;
  j["order"] = elements.size();
  j["rank_ideal_sizes"] = ideal_sizes;
  j["quotient_orders"] = quotient_orders;
  json elems = json::array();
  for (const auto& f : elements) {
    json pairs = json::array();
    for (const auto& [x, y] : f.pairs()) pairs.push_back(json::array({x, y}));
    elems.push_back(pairs);
  }
  j["elements"] = elems;
  if (table) j["monoid"] = monoid_to_json(*table);
  emit(j.dump(2), out_path);
  return 0;
}

FiniteMonoid broken_control() {
  // two-element left-zero semigroup with an adjoined identity: both zero-like
  // elements are mutual generalized inverses, so uniqueness fails
  FiniteMonoid m;
  m.labels = {"e", "a", "b"};
  m.identity = 0;
  m.mul = {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}};
  return m;
}

json run_suite(const std::string& suite, int n, int cap, uint64_t seed);

int cmd_verify(const std::string& suite, int n, std::optional<int> cap_flag,
               uint64_t seed, const std::string& in_path,
               const std::string& out_path) {
  json report;
  if (!in_path.empty()) {
    // check a monoid provided as a JSON table instead of a generated one
    std::ifstream in(in_path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + in_path);
    json raw = json::parse(in, nullptr, false);
    if (raw.is_discarded()) fail(ErrorKind::ParseError, "bad monoid JSON");
    FiniteMonoid m = monoid_from_json(raw.contains("monoid") ? raw["monoid"] : raw);
    auto inv = check_inverse_monoid(m);
    json checks = json::array();
    checks.push_back(json{{"check", "table/laws"}, {"ok", true}});
    checks.push_back(json{{"check", "table/unique-inverses"}, {"ok", inv.ok}});
    report = json{{"suite", "monoid-file"}, {"checks", checks}};
  } else {
    report = run_suite(suite, n, enumeration_cap(cap_flag), seed);
  }
  bool all_ok = true;
  for (const auto& check : report["checks"])
    if (!check["ok"].get<bool>()) all_ok = false;
  report["ok"] = all_ok;
  emit(report.dump(2), out_path);
  return all_ok ? 0 : 3;
}

json run_suite(const std::string& suite, int n, int cap, uint64_t seed) {
  json checks = json::array();
  auto add = [&](const std::string& name, bool ok) {
    checks.push_back(json{{"check", name}, {"ok", ok}});
  };

  if (suite == "inverse-axioms") {
    for (MonoidMode mode : {MonoidMode::I, MonoidMode::J}) {
      std::string tag = mode == MonoidMode::I ? "I" : "J";
      auto table = monoid_table(n, mode, kDefaultClosureCap);
      add(tag + std::to_string(n) + "/unique-inverses",
          check_inverse_monoid(table).ok);
    }
    add("control/left-zero-fails", !check_inverse_monoid(broken_control()).ok);
  } else if (suite == "ideals") {
    for (MonoidMode mode : {MonoidMode::I, MonoidMode::J}) {
      std::string tag = mode == MonoidMode::I ? "I" : "J";
      auto table = monoid_table(n, mode, kDefaultClosureCap);
      auto ideals = enumerate_all_ideals(table);
      std::vector<IdealSet> expected = {IdealSet{}};
      for (int k = 0; k <= n; ++k) expected.push_back(rank_ideal(table, k));
      std::sort(expected.begin(), expected.end(),
                [](const IdealSet& a, const IdealSet& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
                });
      add(tag + std::to_string(n) + "/ideals-are-rank-ideals", ideals == expected);
    }
  } else if (suite == "rees") {
    for (MonoidMode mode : {MonoidMode::I, MonoidMode::J}) {
      std::string tag = mode == MonoidMode::I ? "I" : "J";
      auto table = monoid_table(n, mode, kDefaultClosureCap);
      for (int k = 0; k <= n; ++k) {
        IdealSet ideal = rank_ideal(table, k);
        auto rq = rees_quotient(table, ideal);
        std::string name = tag + std::to_string(n) + "/rank" + std::to_string(k);
        bool ok = true;
        try {
          rq.quotient.validate();
        } catch (const Error&) {
          ok = false;
        }
        add(name + "/laws", ok);
        add(name + "/order",
            rq.quotient.size() == table.size() - static_cast<int>(ideal.size()) + 1);
        add(name + "/homomorphism",
            check_homomorphism(rq.quotient_map, table, rq.quotient));
        add(name + "/involution-lifted", rq.quotient.star.has_value());
      }
    }
  } else if (suite == "xi") {
    auto elements = enumerate_monoid(n, MonoidMode::I, cap);
    bool functorial = true;
    std::vector<EllisElementFin> lifted;
    lifted.reserve(elements.size());
    for (const auto& f : elements)
      lifted.push_back(make_ellis_element(Space::AlphaX, GroupMode::Sym, f));
    for (size_t i = 0; i < lifted.size() && functorial; ++i)
      for (size_t j = 0; j < lifted.size(); ++j) {
        if (!(xi_restrict(ellis_compose(lifted[i], lifted[j])) ==
              compose(xi_restrict(lifted[i]), xi_restrict(lifted[j])))) {
          functorial = false;
          break;
        }
      }
    add("alpha" + std::to_string(n) + "/xi-functorial", functorial);
  } else if (suite == "lattice") {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 12);
    std::uniform_int_distribution<int> kind(0, 5);
    bool commutes = true;
    for (int trial = 0; trial < 2000 && commutes; ++trial) {
      Rational x(Int(num(rng)), Int(den(rng)));
      ExtendedPoint p = ExtendedPoint::inf();
      switch (kind(rng)) {
        case 0: p = ExtendedPoint::inf(); break;
        case 1: p = ExtendedPoint::sup(); break;
        case 2: p = ExtendedPoint::tagged(x, -1); break;
        case 3: p = ExtendedPoint::tagged(x, 0); break;
        case 4: p = ExtendedPoint::tagged(x, 1); break;
        default: p = ExtendedPoint::gap(GapCut(x, Rational(Int(1), Int(den(rng)))));
      }
      auto left = quotient_point(
          Space::BplusX, Space::AlphaX,
          quotient_point(Space::BlrX, Space::BplusX,
                         quotient_point(Space::BmX, Space::BlrX, p)));
      auto right = quotient_point(
          Space::BplusX, Space::AlphaX,
          quotient_point(Space::BudX, Space::BplusX,
                         quotient_point(Space::BmX, Space::BudX, p)));
      if (!(left == right)) commutes = false;
    }
    add("bm-to-alpha/paths-commute", commutes);
    add("arrows/count", lattice_arrows().size() == 10);
  } else {
    fail(ErrorKind::ParseError, "unknown suite '" + suite + "'");
  }
  return json{{"suite", suite}, {"n", n}, {"checks", checks}};
}

json pl_to_json(const PLAutomorphism& g) {
  json bps = json::array();
  for (const auto& [x, y] : g.breakpoints())
    bps.push_back(json::array({to_text(x), to_text(y)}));
  return json{{"kind", "pl"}, {"breakpoints", bps}};
}

int cmd_witness(const std::string& in_path, const std::string& out_path) {
  std::ifstream in(in_path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + in_path);
  std::stringstream buffer;
  buffer << in.rdbuf();

  json raw;
  try {
    raw = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("bad JSON: ") + e.what());
  }
  Observation obs = observation_from_json_text(buffer.str());
  std::string mode = raw.value("mode", "");

  json result;
  if (obs.space == Space::AlphaX && mode != "aut") {
    Verdict v = check_alpha_membership(obs, GroupMode::Sym);
    if (!v.consistent) {
      result = json{{"verdict", "refuted"}, {"clause", v.clause}, {"detail", v.detail}};
    } else {
      auto w = permutation_witness(obs);
      auto completed = complete_to_permutation(w);
      bool pass = true;
      for (const auto& e : obs.entries) {
        ExtendedPoint value = ExtendedPoint::infinity();
        if (e.point.is_chain_point()) {
          auto img = completed.apply(e.point.x());
          value = img ? ExtendedPoint::chain(*img) : ExtendedPoint::infinity();
        }
        if (!e.target.satisfied_by(obs.space, value)) pass = false;
      }
      json pairs = json::array();
      for (const auto& [a, b] : w.pairs)
        pairs.push_back(json::array({to_text(a), to_text(b)}));
      result = json{{"verdict", "consistent"},
                    {"witness", json{{"kind", "permutation"}, {"pairs", pairs}}},
                    {"recheck", pass ? "pass" : "fail"}};
    }
  } else {
    WitnessFace face = mode == "br" ? WitnessFace::Br : default_face(obs.space);
    Verdict v = check_for_face(obs, face);
    if (!v.consistent) {
      result = json{{"verdict", "refuted"}, {"clause", v.clause}, {"detail", v.detail}};
    } else {
      PLAutomorphism g = ellis_witness(obs, face);
      bool pass = true;
      for (const auto& e : obs.entries)
        if (!e.target.satisfied_by(obs.space, witness_value(g, obs.space, face, e.point)))
          pass = false;
      result = json{{"verdict", "consistent"},
                    {"witness", pl_to_json(g)},
                    {"recheck", pass ? "pass" : "fail"}};
    }
  }
  emit(result.dump(2), out_path);
  return 0;
}

int cmd_lattice(const std::string& format, const std::string& out_path) {
  if (format == "csv") {
    std::ostringstream csv;
    csv << "from,to,elementary\n";
    for (const auto& a : lattice_arrows())
      csv << to_string(a.from) << "," << to_string(a.to) << ","
          << (a.elementary ? "true" : "false") << "\n";
    std::string text = csv.str();
    text.pop_back();
    emit(text, out_path);
    return 0;
  }
  json arrows = json::array();
  for (const auto& a : lattice_arrows())
    arrows.push_back(json{{"from", to_string(a.from)},
                          {"to", to_string(a.to)},
                          {"elementary", a.elementary}});
  emit(json{{"arrows", arrows}}.dump(2), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ellis-lab: exact models of chain compactifications, partial-map "
               "monoids and their Ellis-semigroup elements"};
  app.require_subcommand(1);

  int n = 3;
  std::string mode = "I";
  std::string format = "json";
  std::string suite = "inverse-axioms";
  std::string in_path, out_path;
  std::optional<int> cap;
  uint64_t seed = 1;

  auto* enumerate = app.add_subcommand("enumerate", "element tables of I_n / J_n");
  enumerate->add_option("--n", n, "carrier size");
  enumerate->add_option("--mode", mode, "I or J");
  enumerate->add_option("--format", format, "json or csv");
  enumerate->add_option("--cap", cap, "enumeration cap override");
  enumerate->add_option("--out", out_path, "output file");

  auto* verify = app.add_subcommand("verify", "axiom / ideal / quotient checks");
  verify->add_option("--suite", suite,
                     "inverse-axioms | ideals | rees | xi | lattice");
  verify->add_option("--n", n, "carrier size");
  verify->add_option("--cap", cap, "cap override");
  verify->add_option("--seed", seed, "seed for sampled checks");
  verify->add_option("--in", in_path, "monoid JSON to check instead");
  verify->add_option("--out", out_path, "output file");

  auto* witness = app.add_subcommand("witness", "membership check + witness");
  witness->add_option("--in", in_path, "observation JSON file")->required();
  witness->add_option("--out", out_path, "output file");

  auto* lattice = app.add_subcommand("lattice", "quotient lattice report");
  lattice->add_option("--format", format, "json or csv");
  lattice->add_option("--out", out_path, "output file");

  try {
    app.parse(argc, argv);
    if (enumerate->parsed()) return cmd_enumerate(n, mode, format, cap, out_path);
    if (verify->parsed()) return cmd_verify(suite, n, cap, seed, in_path, out_path);
    if (witness->parsed()) return cmd_witness(in_path, out_path);
    if (lattice->parsed()) return cmd_lattice(format, out_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
