#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilsec/errors.hpp"
#include "nilsec/exceptional.hpp"
#include "nilsec/json_io.hpp"
#include "nilsec/orbit.hpp"
#include "nilsec/rational.hpp"
#include "nilsec/secant.hpp"
#include "nilsec/verify.hpp"

using namespace nilsec;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : Error {
  using Error::Error;
};

void guard(const LieType& t, bool force) {
  if (force || t.is_exceptional()) return;
  const bool too_big = t.series() == Series::A ? t.N() > 12 : t.rank() > 10;
  if (too_big)
    throw UsageError(t.name() + " exceeds the desk-scale cap (sl_N: N<=12, sp/so: rank<=10); pass --force");
}

std::string marks_string(const DynkinMarks& m) {
  std::string s;
  for (int x : m) s += std::to_string(x);
  return s;
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string diagram_string(const EnhancedDiagram& d) {
  std::ostringstream os;
  os << "black {";
  for (std::size_t i = 0; i < d.black.size(); ++i) os << (i ? "," : "") << d.black[i];
  os << "} arcs {";
  for (std::size_t i = 0; i < d.arcs.size(); ++i) os << (i ? "," : "") << "(" << d.arcs[i].first << "," << d.arcs[i].second << ")";
  os << "}";
  return os.str();
}

std::string vector_string(const CartanVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.coords.size(); ++i) s += (i ? ", " : "") + to_string(v.coords[i]);
  return s + ")";
}

void print_report(const SecantReport& r, std::ostream& os) {
  os << "orbit        " << r.orbit.to_string() << "\n"
     << "dim          " << r.dim_orbit << "\n"
     << "marks        " << marks_string(weighted_dynkin(r.orbit)) << "\n"
     << "spherical    " << (is_spherical(r.orbit) ? "yes" : "no") << "\n";
  if (r.orbit.is_classical()) os << "class        " << r.upsilon.to_string() << "\n";
  os << "r, c         " << r.r << ", " << r.c << "\n"
     << "s_star       " << r.s_star.to_string() << "\n"
     << "l_star       " << r.l_star.to_string() << "\n"
     << "dim CS       " << r.dim_cs << "\n"
     << "defect       " << optional_int(r.defect) << "\n"
     << "CS(O)        " << r.descriptor.to_string() << "\n"
     << "embedding    " << diagram_string(r.embedding) << "\n"
     << "t_O basis    ";
  if (r.t_o_basis.empty()) os << "(empty)";
  for (std::size_t i = 0; i < r.t_o_basis.size(); ++i) os << (i ? "\n             " : "") << vector_string(r.t_o_basis[i]);
  os << "\n"
     << "tilde orbit  " << r.tilde.to_string() << "\n";
}

int cmd_info(const std::string& text, bool as_json) {
  const Orbit o = Orbit::parse(text);
  if (o.is_zero()) {
    if (as_json) {
      std::cout << orbit_record(o).dump(2) << "\n";
    } else {
      std::cout << "orbit        " << o.to_string() << "\n"
                << "dim          0\n"
                << "CS(O)        {0}\n";
    }
    return kExitOk;
  }
  const SecantReport r = build_secant_report(o);
  if (as_json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    print_report(r, std::cout);
  return kExitOk;
}

int cmd_list(const std::string& type_text, bool as_json, bool force, bool only_defective, bool only_spherical) {
  const LieType t = LieType::parse(type_text);
  guard(t, force);
  json rows = json::array();
  std::ostringstream text;
  text << std::left << std::setw(22) << "label" << std::setw(6) << "dim" << std::setw(4) << "r" << std::setw(5) << "c"
       << std::setw(8) << "defect" << "CS(O)\n";
  for (const auto& o : enumerate_orbits(t)) {
    if (only_spherical && !is_spherical(o)) continue;
    if (o.is_zero()) {
      if (only_defective) continue;
      rows.push_back(orbit_record(o));
      text << std::setw(22) << o.label() << std::setw(6) << 0 << std::setw(4) << "-" << std::setw(5) << "-"
           << std::setw(8) << "-" << "{0}\n";
      continue;
    }
    const SecantReport r = build_secant_report(o);
    if (only_defective && !r.defective) continue;
    rows.push_back(to_json(r));
    text << std::setw(22) << o.label() << std::setw(6) << r.dim_orbit << std::setw(4) << r.r << std::setw(5) << r.c
         << std::setw(8) << optional_int(r.defect) << r.descriptor.to_string() << "\n";
  }
  std::cout << (as_json ? rows.dump(2) + "\n" : text.str());
  return kExitOk;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

int cmd_poset(const std::string& type_text, bool as_json, bool force) {
  const LieType t = LieType::parse(type_text);
  guard(t, force);
  if (t.is_exceptional()) throw UsageError("closure order is only available for classical algebras");
  const HasseDiagram h = hasse(t);
  if (as_json) {
    json nodes = json::array(), edges = json::array();
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
      nodes.push_back({{"id", i}, {"label", h.nodes[i].label()}, {"dim", dim_orbit(h.nodes[i])},
                       {"defective", !h.nodes[i].is_zero() && is_defective(h.nodes[i])}});
    for (auto [lo, hi] : h.covers) edges.push_back({{"from", lo}, {"to", hi}});
    std::cout << json{{"algebra", t.name()}, {"nodes", nodes}, {"edges", edges}}.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "digraph \"" << t.name() << "\" {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    const Orbit& o = h.nodes[i];
    std::cout << "  n" << i << " [label=\"" << dot_escape(o.label()) << " (" << dim_orbit(o) << ")\"";
    if (!o.is_zero() && is_defective(o)) std::cout << ", style=filled, fillcolor=lightpink";
    std::cout << "];\n";
  }
  for (auto [lo, hi] : h.covers) std::cout << "  n" << lo << " -> n" << hi << ";\n";
  std::cout << "}\n";
  return kExitOk;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

int cmd_verify(const std::vector<std::string>& type_texts, const std::vector<std::string>& suite_texts, bool as_json,
               bool force) {
  std::vector<LieType> types;
  for (const auto& s : split_list(type_texts)) types.push_back(LieType::parse(s));
  if (types.empty()) types = default_verify_types();
  for (const auto& t : types) guard(t, force);
  auto suites = split_list(suite_texts);
  if (suites.empty()) suites = suite_names();
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw UsageError("unknown suite '" + s + "'");

  std::vector<CheckResult> results;
  for (const auto& s : suites)
    for (const auto& t : types) {
      auto part = run_suite(s, t);
      results.insert(results.end(), part.begin(), part.end());
    }
  const bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
  if (as_json) {
    json arr = json::array();
    for (const auto& c : results)
      arr.push_back({{"suite", c.suite}, {"algebra", c.algebra}, {"check", c.name}, {"passed", c.passed},
                     {"detail", c.detail}});
    std::cout << json{{"passed", ok}, {"checks", arr}}.dump(2) << "\n";
  } else {
    for (const auto& c : results)
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.suite << " " << c.algebra << ": " << c.name << " [" << c.detail
                << "]\n";
    const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& c) { return !c.passed; });
    std::cout << results.size() << " checks, " << failed << " failed\n";
  }
  return ok ? kExitOk : kExitFailure;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

int cmd_export(const std::vector<std::string>& type_texts, const std::string& format, const std::string& path,
               bool force) {
  if (format != "json" && format != "csv") throw UsageError("format must be json or csv");
  std::vector<LieType> types;
  for (const auto& s : split_list(type_texts)) types.push_back(LieType::parse(s));
  if (types.empty()) throw UsageError("export needs at least one --type");
  for (const auto& t : types) guard(t, force);

  std::ostringstream out;
  json all = json::array();
  if (format == "csv") out << "algebra,label,dim,marks,spherical,upsilon,r,c,sStar,dimCS,defect,descriptor,tilde\n";
  for (const auto& t : types) {
    for (const auto& o : enumerate_orbits(t)) {
      if (o.is_zero()) {
        if (format == "json") all.push_back(orbit_record(o));
        else out << t.name() << "," << csv_field(o.label()) << ",0," << marks_string(weighted_dynkin(o))
                 << ",true,,,,,0,,,\n";
        continue;
      }
      const SecantReport r = build_secant_report(o);
      if (format == "json") {
        all.push_back(to_json(r));
        continue;
      }
      out << t.name() << "," << csv_field(o.label()) << "," << r.dim_orbit << "," << marks_string(weighted_dynkin(o))
          << "," << (is_spherical(o) ? "true" : "false") << "," << (o.is_classical() ? r.upsilon.to_string() : "")
          << "," << r.r << "," << r.c << "," << csv_field(r.s_star.to_string()) << "," << r.dim_cs << ","
          << (r.defect ? std::to_string(*r.defect) : "") << "," << csv_field(r.descriptor.to_string()) << ","
          << csv_field(r.tilde.label()) << "\n";
    }
  }
  if (format == "json") out << all.dump(2) << "\n";
  if (path.empty() || path == "-") {
    std::cout << out.str();
  } else {
    std::ofstream f(path);
    if (!f) throw DataIntegrityError("cannot write " + path);
    f << out.str();
  }
  return kExitOk;
}

int cmd_higher_secant(int n, int r, bool as_json) {
  const long d = higher_secant_dim_sp_min(n, r);
  if (as_json)
    std::cout << json{{"algebra", "sp" + std::to_string(2 * n)}, {"orbit", "min"}, {"r", r}, {"dimCS", d}}.dump(2) << "\n";
  else
    std::cout << "dim CS_" << r << "(O_min) in sp" << 2 * n << " = " << d << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nilsec: nilpotent orbit and conical secant invariants"};
  app.require_subcommand(1);
  bool as_json = false, as_dot = false, force = false;
  std::string data_dir;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("--force", force, "Lift the desk-scale size cap");
  app.add_option("--data-dir", data_dir, "Directory with the exceptional orbit tables");

  std::string orbit_text;
  auto* info = app.add_subcommand("info", "Secant report for one orbit");
  info->add_option("orbit", orbit_text, "e.g. sl9:[3,1^6], so8:[2^4]:I, E7:A2")->required();

  std::string type_text;
  bool only_defective = false, only_spherical = false;
  auto* list = app.add_subcommand("list", "All orbits of an algebra");
  list->add_option("type", type_text, "e.g. sp8, E6")->required();
  list->add_flag("--defective", only_defective, "Only defective orbits");
  list->add_flag("--spherical", only_spherical, "Only spherical orbits");

  auto* poset = app.add_subcommand("poset", "Hasse diagram of the closure order");
  poset->add_option("type", type_text, "classical algebra")->required();
  poset->add_flag("--dot", as_dot, "Graphviz output (default)");

  std::vector<std::string> types, suites;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--type", types, "Algebras (comma separated); default: the desk-scale range");
  verify->add_option("--suite", suites, "dims,identities,richardson,parity,ranks,iso,table1");

  std::string format = "json", output;
  auto* exp = app.add_subcommand("export", "Write a catalog");
  exp->add_option("--type", types, "Algebras (comma separated)")->required();
  exp->add_option("--format", format, "json or csv");
  exp->add_option("-o,--output", output, "Output file (default stdout)");

  int n = 0, r = 0;
  auto* hs = app.add_subcommand("higher-secant", "dim CS_r of the minimal orbit of sp_2n");
  hs->add_option("n", n)->required()->check(CLI::Range(1, 1000));
  hs->add_option("r", r)->required()->check(CLI::Range(1, 1000));

  for (auto* sub : {info, list, poset, verify, exp, hs}) {
    sub->add_flag("--json", as_json, "Machine-readable output");
    sub->add_flag("--force", force, "Lift the desk-scale size cap");
    sub->add_option("--data-dir", data_dir, "Directory with the exceptional orbit tables");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (as_dot && as_json) {
    std::cerr << "error: --dot and --json are exclusive\n";
    return kExitUsage;
  }

  try {
    if (!data_dir.empty()) set_data_dir(data_dir);
    if (*info) return cmd_info(orbit_text, as_json);
    if (*list) return cmd_list(type_text, as_json, force, only_defective, only_spherical);
    if (*poset) return cmd_poset(type_text, as_json, force);
    if (*verify) return cmd_verify(types, suites, as_json, force);
    if (*exp) return cmd_export(types, format, output, force);
    if (*hs) return cmd_higher_secant(n, r, as_json);
  } catch (const DataIntegrityError& e) {
    std::cerr << "data integrity failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const DataLoadError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
