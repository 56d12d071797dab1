#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsec/lie_type.hpp"
#include "nilsec/root_system.hpp"

namespace nilsec {

/// A row of the table of defective exceptional orbits.
struct DefectiveRow {
  int dim = 0;
  int r = 0;
  int c = 0;
  std::string s_star;  // e.g. "A3+t1", "(A1)^3"
  friend bool operator==(const DefectiveRow&, const DefectiveRow&) = default;
};

/// Canonical embedding of s_star: black nodes and arcs, 1-based Bourbaki indices.
struct EmbeddingData {
  std::vector<int> black;
  std::vector<std::pair<int, int>> arcs;
};

struct ExceptionalRecord {
  std::string label;
  DynkinMarks marks;
  int dim = 0;  // recomputed from marks at load time
  bool spherical = false;
  std::optional<DefectiveRow> defective;
  std::optional<std::string> tilde;
  std::optional<EmbeddingData> embedding;
};

struct ExceptionalTable {
  LieType type;
  int version = 0;
  std::string max_spherical;
  std::vector<ExceptionalRecord> orbits;

  const ExceptionalRecord& find(const std::string& label) const;  // DataLoadError if absent
  bool contains(const std::string& label) const;
};

struct Table1Row {
  std::string algebra;
  DefectiveRow row;
  std::string label;
};

/// The defective exceptional orbits with dim, r, c and s_star as published.
const std::vector<Table1Row>& table1();

/// Number of orbits (zero included) per exceptional type.
int expected_orbit_count(const LieType& type);

/// Directory holding E6.json ... G2.json. Resolution order: set_data_dir, NILSEC_DATA_DIR,
/// the install location, the source tree.
std::filesystem::path data_dir();
/// Overrides the data directory (empty path clears it). Tables are cached per directory.
void set_data_dir(const std::filesystem::path& dir);

/// Parses and validates one data file. Throws DataLoadError naming the offending record.
ExceptionalTable load_exceptional_file(const std::filesystem::path& file, const LieType& type);

/// Cached, validated table for an exceptional type.
const ExceptionalTable& load_exceptional(const LieType& type);

struct Table1Check {
  std::string algebra;
  std::string label;
  bool passed = false;
  std::string detail;
};

/// Compares the loaded data with the published table row by row; never throws on mismatch.
std::vector<Table1Check> validate_against_table1();

}  // namespace nilsec
