#include "nilsec/exceptional.hpp"

#include "nilsec/errors.hpp"
#include "nilsec/reductive.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <set>

namespace nilsec {

using nlohmann::json;

const ExceptionalRecord& ExceptionalTable::find(const std::string& label) const {
  for (const auto& r : orbits)
    if (r.label == label) return r;
  throw DataLoadError("no orbit '" + label + "' in " + type.cartan_name() + " data");
}

bool ExceptionalTable::contains(const std::string& label) const {
  for (const auto& r : orbits)
    if (r.label == label) return true;
  return false;
}

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = {
      {"E6", {22, 1, 0, "A5"}, "A1"},
      {"E6", {32, 2, 0, "A3+t1"}, "2A1"},
      {"E6", {40, 4, 0, "t2"}, "3A1"},
      {"E6", {42, 4, 2, "t2"}, "A2"},
      {"E7", {34, 1, 0, "D6"}, "A1"},
      {"E7", {52, 2, 0, "D4+A1"}, "2A1"},
      {"E7", {54, 3, 0, "D4"}, "(3A1)''"},
      {"E7", {64, 4, 0, "(A1)^3"}, "(3A1)'"},
      {"E7", {66, 4, 2, "(A1)^3"}, "A2"},
      {"E8", {58, 1, 0, "E7"}, "A1"},
      {"E8", {92, 2, 0, "D6"}, "2A1"},
      {"E8", {112, 4, 0, "D4"}, "3A1"},
      {"E8", {114, 4, 2, "D4"}, "A2"},
      {"F4", {16, 1, 0, "C3"}, "A1"},
      {"F4", {22, 2, 0, "C2"}, "~A1"},
      {"G2", {6, 1, 0, "A1"}, "A1"},
  };
  return rows;
}

int expected_orbit_count(const LieType& type) {
  switch (type.series()) {
    case Series::E6: return 21;
    case Series::E7: return 45;
    case Series::E8: return 70;
    case Series::F4: return 16;
    case Series::G2: return 5;
    default: throw UnsupportedError(type.name() + " is classical");
  }
}

namespace {

std::mutex g_mu;
std::filesystem::path g_override;

std::filesystem::path resolve_dir() {
  if (!g_override.empty()) return g_override;
  if (const char* env = std::getenv("NILSEC_DATA_DIR"); env && *env) return env;
#ifdef NILSEC_INSTALL_DATA_DIR
  if (std::filesystem::exists(std::filesystem::path(NILSEC_INSTALL_DATA_DIR) / "E6.json"))
    return NILSEC_INSTALL_DATA_DIR;
#endif
#ifdef NILSEC_SOURCE_DATA_DIR
  return NILSEC_SOURCE_DATA_DIR;
#else
  return "data/exceptional/v1";
#endif
}

[[noreturn]] void fail(const LieType& t, const std::string& where, const std::string& what) {
  throw DataLoadError(t.cartan_name() + " data, " + where + ": " + what);
}

template <class T>
T get(const json& j, const char* key, const LieType& t, const std::string& where) {
  if (!j.contains(key)) fail(t, where, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(t, where, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

std::filesystem::path data_dir() {
  std::lock_guard lock(g_mu);
  return resolve_dir();
}

void set_data_dir(const std::filesystem::path& dir) {
  std::lock_guard lock(g_mu);
  g_override = dir;
}

ExceptionalTable load_exceptional_file(const std::filesystem::path& file, const LieType& type) {
  if (type.is_classical()) throw UnsupportedError(type.name() + " is classical");
  std::ifstream in(file);
  if (!in) fail(type, file.string(), "cannot open file");
  json root;
  try {
    root = json::parse(in);
  } catch (const json::exception& e) {
    fail(type, file.string(), e.what());
  }
  if (!root.is_object()) fail(type, file.string(), "top level must be an object");

  ExceptionalTable table{type, 0, "", {}};
  if (get<std::string>(root, "algebra", type, "header") != type.cartan_name())
    fail(type, "header", "algebra field does not match");
  table.version = get<int>(root, "version", type, "header");
  table.max_spherical = get<std::string>(root, "max_spherical", type, "header");
  const json& orbits = root.contains("orbits") ? root["orbits"] : json();
  if (!orbits.is_array()) fail(type, "header", "'orbits' must be an array");

  const int rank = type.rank();
  std::set<std::string> labels;
  std::set<DynkinMarks> seen_marks;
  for (std::size_t idx = 0; idx < orbits.size(); ++idx) {
    const json& o = orbits[idx];
    std::string where = "record #" + std::to_string(idx);
    if (!o.is_object()) fail(type, where, "record must be an object");
    ExceptionalRecord rec;
    rec.label = get<std::string>(o, "label", type, where);
    where += " (" + rec.label + ")";
    if (rec.label.empty()) fail(type, where, "empty label");
    if (!labels.insert(rec.label).second) fail(type, where, "duplicate label");
    rec.marks = get<std::vector<int>>(o, "marks", type, where);
    try {
      validate_marks(type, rec.marks);
    } catch (const InvalidMarksError& e) {
      fail(type, where, e.what());
    }
    if (!seen_marks.insert(rec.marks).second) fail(type, where, "duplicate weighted Dynkin diagram");
    const bool all_zero = std::all_of(rec.marks.begin(), rec.marks.end(), [](int m) { return m == 0; });
    if (all_zero != (rec.label == "0")) fail(type, where, "only the zero orbit has all marks zero");
    rec.dim = orbit_dim_from_marks(type, rec.marks);
    rec.spherical = get<bool>(o, "spherical", type, where);

    if (o.contains("defective")) {
      const json& d = o["defective"];
      DefectiveRow row;
      row.dim = get<int>(d, "dim", type, where);
      row.r = get<int>(d, "r", type, where);
      row.c = get<int>(d, "c", type, where);
      row.s_star = get<std::string>(d, "sStar", type, where);
      if (row.dim != rec.dim)
        fail(type, where, "defective dim " + std::to_string(row.dim) + " but marks give " +
                              std::to_string(rec.dim));
      ReductiveType s;
      try {
        s = ReductiveType::parse(row.s_star);
      } catch (const Error& e) {
        fail(type, where, e.what());
      }
      if (s.rank() != rank - row.r) fail(type, where, "rank(sStar) != rank - r");
      rec.defective = row;
    }
    if (o.contains("tilde")) rec.tilde = get<std::string>(o, "tilde", type, where);
    if (o.contains("embedding")) {
      const json& e = o["embedding"];
      EmbeddingData emb;
      emb.black = get<std::vector<int>>(e, "black", type, where);
      emb.arcs = get<std::vector<std::pair<int, int>>>(e, "arcs", type, where);
      std::set<int> used;
      for (int b : emb.black)
        if (b < 1 || b > rank || !used.insert(b).second) fail(type, where, "bad black node");
      for (auto [i, j] : emb.arcs)
        if (i < 1 || i > rank || j < 1 || j > rank || i == j || !used.insert(i).second ||
            !used.insert(j).second)
          fail(type, where, "bad arc");
      rec.embedding = emb;
    }
    if (rec.defective && (!rec.tilde || !rec.embedding))
      fail(type, where, "defective record needs tilde and embedding");
    table.orbits.push_back(std::move(rec));
  }

  if (static_cast<int>(table.orbits.size()) != expected_orbit_count(type))
    fail(type, "header", "expected " + std::to_string(expected_orbit_count(type)) + " orbits, found " +
                             std::to_string(table.orbits.size()));
  if (!table.contains("0")) fail(type, "header", "zero orbit missing");
  for (const auto& rec : table.orbits)
    if (rec.tilde && !table.contains(*rec.tilde))
      fail(type, "record (" + rec.label + ")", "unknown tilde label '" + *rec.tilde + "'");
  if (!table.contains(table.max_spherical) || !table.find(table.max_spherical).spherical)
    fail(type, "header", "max_spherical must name a spherical orbit");

  // Defective rows must be exactly the published ones.
  std::set<std::string> published;
  for (const auto& row : table1()) {
    if (row.algebra != type.cartan_name()) continue;
    published.insert(row.label);
    if (!table.contains(row.label)) fail(type, "table check", "missing orbit " + row.label);
    const auto& rec = table.find(row.label);
    if (!rec.defective) fail(type, "table check", row.label + " must be defective");
    const auto& d = *rec.defective;
    if (d.dim != row.row.dim || d.r != row.row.r || d.c != row.row.c ||
        !(ReductiveType::parse(d.s_star) == ReductiveType::parse(row.row.s_star)))
      fail(type, "table check", row.label + " differs from the published row");
  }
  for (const auto& rec : table.orbits)
    if (rec.defective && !published.count(rec.label))
      fail(type, "table check", rec.label + " is not a published defective orbit");
  return table;
}

const ExceptionalTable& load_exceptional(const LieType& type) {
  static std::map<std::pair<std::string, LieType>, std::unique_ptr<ExceptionalTable>> cache;
  std::lock_guard lock(g_mu);
  const std::filesystem::path dir = resolve_dir();
  auto& slot = cache[{dir.string(), type}];
  if (!slot)
    slot = std::make_unique<ExceptionalTable>(
        load_exceptional_file(dir / (type.cartan_name() + ".json"), type));
  return *slot;
}

std::vector<Table1Check> validate_against_table1() {
  std::vector<Table1Check> out;
  for (const auto& row : table1()) {
    Table1Check check{row.algebra, row.label, false, ""};
    try {
      const LieType type = LieType::parse(row.algebra);
      const auto& rec = load_exceptional(type).find(row.label);
      const int dim = orbit_dim_from_marks(type, rec.marks);
      const auto s = ReductiveType::parse(row.row.s_star);
      std::string problems;
      if (dim != row.row.dim) problems += " dim " + std::to_string(dim);
      if (!rec.defective) {
        problems += " not marked defective";
      } else {
        const auto& d = *rec.defective;
        if (d.r != row.row.r) problems += " r " + std::to_string(d.r);
        if (d.c != row.row.c) problems += " c " + std::to_string(d.c);
        if (!(ReductiveType::parse(d.s_star) == s)) problems += " sStar " + d.s_star;
      }
      if (s.rank() != type.rank() - row.row.r) problems += " rank(sStar) != rk g - r";
      if (type.dim() - s.dim() != 2 * dim - 2 * row.row.c - row.row.r)
        problems += " dim g - dim sStar != 2dimO - 2c - r";
      check.passed = problems.empty();
      check.detail = "dim " + std::to_string(dim) + ", defect " +
                     std::to_string(2 * row.row.c + row.row.r) +
                     (problems.empty() ? "" : ", mismatch:" + problems);
    } catch (const Error& e) {
      check.detail = e.what();
    }
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace nilsec
