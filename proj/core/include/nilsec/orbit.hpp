#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilsec/lie_type.hpp"
#include "nilsec/partition.hpp"
#include "nilsec/root_system.hpp"

namespace nilsec {

/// Which of the two SO_N-orbits of a very even partition in type D.
/// Tag I carries the weighted Dynkin mark 2 on alpha_n, tag II on alpha_{n-1}.
enum class VeTag { I, II };

/// A nilpotent orbit: classical ones by partition (plus tag), exceptional ones by label.
/// The zero orbit is the partition (1^N), resp. the label "0".
class Orbit {
 public:
  static Orbit classical(const LieType& type, const Partition& p,
                         std::optional<VeTag> tag = std::nullopt);
  static Orbit exceptional(const LieType& type, const std::string& label);
  static Orbit zero(const LieType& type);

  /// "sl7:[3,2,2]", "so8:[2^4]:I", "E7:A2", "F4:~A1", "E7:(3A1)''", "sp8:0".
  static Orbit parse(const std::string& text);

  const LieType& type() const { return type_; }
  bool is_classical() const { return type_.is_classical(); }
  bool is_zero() const;

  /// Classical only.
  const Partition& partition() const;
  const std::optional<VeTag>& tag() const { return tag_; }
  /// Exceptional only.
  const std::string& exceptional_label() const;

  /// "[3,2,2]", "[2^4]:I", "A2".
  std::string label() const;
  /// "sl7:[3,2,2]".
  std::string to_string() const;

  friend bool operator==(const Orbit&, const Orbit&) = default;
  friend auto operator<=>(const Orbit&, const Orbit&) = default;

 private:
  Orbit(LieType type, Partition p, std::optional<VeTag> tag, std::string label)
      : type_(type), partition_(std::move(p)), tag_(tag), label_(std::move(label)) {}

  LieType type_;
  Partition partition_;
  std::optional<VeTag> tag_;
  std::string label_;
};

struct HasseDiagram {
  std::vector<Orbit> nodes;
  /// (lower, upper) index pairs into nodes; the transitive reduction of closure_leq.
  std::vector<std::pair<int, int>> covers;
};

/// Classical: admissible partitions (very even ones twice in type D), zero first, regular last.
/// Exceptional: the bundled table order.
std::vector<Orbit> enumerate_orbits(const LieType& type);

/// Centralizer formula for classical partitions.
int dim_from_partition(const LieType& type, const Partition& p);

/// Classical: partition formula, cross-checked against root counting on the weighted
/// Dynkin diagram (DataIntegrityError on mismatch). Exceptional: from the marks.
int dim_orbit(const Orbit& o);

DynkinMarks weighted_dynkin(const Orbit& o);

bool is_spherical(const Orbit& o);

/// Closure order; classical only (UnsupportedError otherwise).
bool closure_leq(const Orbit& a, const Orbit& b);
HasseDiagram hasse(const LieType& type);

Orbit max_spherical(const LieType& type);
Orbit minimal_orbit(const LieType& type);
Orbit regular_orbit(const LieType& type);

}  // namespace nilsec
