#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilsec/orbit.hpp"
#include "nilsec/partition.hpp"
#include "nilsec/reductive.hpp"
#include "nilsec/root_system.hpp"

namespace nilsec {

/// The subposet of nonzero orbits on which r, s_star and CS(O) are constant.
/// sl: Max, J(j) (rank j, l1>=3), Spherical(r) (l=(2^r,1^...)).
/// sp: Max, J(j). so: Max, J(m) (rank 2m, l1>=3), Spherical(m) (l=(2^2m,1^...)).
struct UpsilonClass {
  enum class Kind { Max, J, Spherical, ExceptionalDirect };
  Kind kind = Kind::Max;
  int param = 0;

  /// "Max", "J(2)", "Spherical(3)", "Exceptional".
  std::string to_string() const;
  static UpsilonClass parse(const std::string& text);
  friend bool operator==(const UpsilonClass&, const UpsilonClass&) = default;
  friend auto operator<=>(const UpsilonClass&, const UpsilonClass&) = default;
};

/// Black nodes are simple roots of s_star; each arc (i,j) contributes alpha_i - alpha_j to
/// the centre of s_star. 1-based Bourbaki indices, sorted, arcs with i < j.
struct EnhancedDiagram {
  std::vector<int> black;
  std::vector<std::pair<int, int>> arcs;
  friend bool operator==(const EnhancedDiagram&, const EnhancedDiagram&) = default;
};

/// Symbolic description of CS(O).
struct VarietyDescriptor {
  enum class Kind {
    FullAlgebra,             // CS(O) = g
    DetTraceless,            // rank <= r in sl_N, plus sigma_k = 0 for the listed odd k
    DetSymplecticSym,        // rank <= r in sp_N viewed as symmetric matrices
    DetSkew,                 // rank <= r in so_N viewed as skew matrices
    SphericalSOSlice,        // codim 3m inside Skew(4m, N)
    E6CompleteIntersection,  // F_d = 0 for the listed invariant degrees
    DixmierClosure           // closure of G.t_O with centraliser levi
  };
  Kind kind = Kind::FullAlgebra;
  int ambient_dim = 0;         // dim g
  int rank_bound = 0;          // Det*: r; SphericalSOSlice: 4m
  int N = 0;                   // matrix size for Det* and SphericalSOSlice
  std::vector<int> equations;  // odd trace indices or invariant degrees
  ReductiveType levi;          // DixmierClosure only
  int torus = 0;               // DixmierClosure only: r(O)

  long dimension() const;
  std::string to_string() const;
  static std::string kind_name(Kind k);
  friend bool operator==(const VarietyDescriptor&, const VarietyDescriptor&) = default;
};

struct SecantReport {
  Orbit orbit;
  int dim_orbit = 0;
  UpsilonClass upsilon;
  int r = 0;
  int c = 0;
  ReductiveType s_star;
  ReductiveType l_star;
  int dim_cs = 0;
  std::optional<int> defect;
  bool defective = false;
  VarietyDescriptor descriptor;
  EnhancedDiagram embedding;
  std::vector<CartanVector> t_o_basis;
  Orbit tilde;

  friend bool operator==(const SecantReport&, const SecantReport&) = default;
};

/// Classical nonzero orbits only (UnsupportedError otherwise).
UpsilonClass classify_upsilon(const Orbit& o);

/// Nonzero orbits: as published; zero orbit: the whole algebra.
ReductiveType generic_stabilizer(const Orbit& o);

/// (r, c) for a nonzero orbit.
std::pair<int, int> rank_complexity(const Orbit& o);

/// dim CS(O); 0 for the zero orbit.
int dim_cs(const Orbit& o);
std::optional<int> secant_defect(const Orbit& o);
bool is_defective(const Orbit& o);

VarietyDescriptor cs_descriptor(const Orbit& o);
EnhancedDiagram enhanced_diagram(const Orbit& o);
std::vector<CartanVector> t_O_basis(const Orbit& o);
Orbit tilde_orbit(const Orbit& o);

std::vector<Orbit> maximal_defective(const LieType& type);

/// Nonzero orbits of a classical algebra lying in the given class.
std::vector<Orbit> upsilon_members(const LieType& type, const UpsilonClass& cls);

/// The classes of type J(.) that exist for this algebra.
std::vector<UpsilonClass> j_classes(const LieType& type);

/// Dimension of the nilpotent orbit of a partition in sl_n / sp_n / so_n (any n >= 1).
int dim_partition_orbit(PartitionKind kind, const Partition& p);

struct UpsilonIsomorphism {
  PartitionKind target_kind;
  int target_size = 0;  // n of sl_n / sp_n / so_n
  bool target_includes_zero = false;
  std::string target_name;  // "nonzero orbits of sl3"
  std::vector<std::pair<Orbit, Partition>> map;
};

/// Column erasure on a J class; checks bijectivity, order in both directions and
/// codimension preservation, throwing DataIntegrityError on failure.
UpsilonIsomorphism upsilon_isomorphism(const LieType& type, const UpsilonClass& cls);

std::set<int> forbidden_ranks(const LieType& type);

/// dim CS_r of the minimal orbit of sp_2n.
long higher_secant_dim_sp_min(int n, int r);

/// All invariants, with every identity checked; DataIntegrityError names a failed identity.
SecantReport build_secant_report(const Orbit& o);

}  // namespace nilsec
