#pragma once

#include <map>
#include <vector>

#include "nilsec/lie_type.hpp"
#include "nilsec/rational.hpp"

namespace nilsec {

/// Marks alpha_i(h) in Bourbaki order, each in {0,1,2}.
using DynkinMarks = std::vector<int>;

/// Throws InvalidMarksError unless marks has length rank and entries in {0,1,2}.
void validate_marks(const LieType& type, const DynkinMarks& marks);

/// Cartan data and positive roots of a simple Lie algebra (Bourbaki numbering).
/// cartan(i, j) = <alpha_i^vee, alpha_j>; nodes are 0-based internally.
class RootSystem {
 public:
  explicit RootSystem(const LieType& type);

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// Positive roots as coefficient vectors over the simple roots, sorted by height.
  const std::vector<std::vector<int>>& positive_roots() const { return roots_; }
  const std::vector<int>& highest_root() const { return roots_.back(); }

  /// The symmetry -w0 of the diagram as a permutation of 0-based node indices.
  const std::vector<int>& involution() const { return involution_; }

  /// d_i = (alpha_i, alpha_i)/2 scaled to coprime integers; d_i * cartan(i,j) is symmetric.
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }

  /// Pairing of a root (simple-root coordinates) with h given by its marks.
  int evaluate(const std::vector<int>& root, const DynkinMarks& marks) const;

 private:
  LieType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<int> involution_;
  std::vector<int> symmetrizer_;
};

/// Cartan matrix in Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(const LieType& type);

/// Shared immutable root system per type; thread-safe.
const RootSystem& root_system(const LieType& type);
inline RootSystem build_root_system(const LieType& type) { return RootSystem(type); }

/// dim g(i) for the grading by h; keys run over nonzero degrees in both signs.
std::map<int, int> graded_dims(const LieType& type, const DynkinMarks& marks);

/// dim g - dim g(0) - dim g(1).
int orbit_dim_from_marks(const LieType& type, const DynkinMarks& marks);

/// theta(h) for the highest root theta.
int height_of_marks(const LieType& type, const DynkinMarks& marks);

/// An element of the Cartan subalgebra with exact coordinates.
/// Epsilon: the usual diagonal coordinates of the matrix model (N entries for sl_N,
/// n entries for so/sp). Coroot: coordinates over the simple coroots.
struct CartanVector {
  enum class Basis { Epsilon, Coroot };
  Basis basis = Basis::Coroot;
  std::vector<Rational> coords;

  friend bool operator==(const CartanVector&, const CartanVector&) = default;
};

/// The basis used for t_O and friends: Epsilon for classical types, Coroot otherwise.
CartanVector::Basis natural_basis(const LieType& type);

/// Simple coroot alpha_i^vee (0-based i) in the requested basis, up to positive scaling.
CartanVector simple_coroot(const LieType& type, int i, CartanVector::Basis basis);

/// Invariant form on the Cartan subalgebra, up to a positive scalar.
Rational inner_product(const LieType& type, const CartanVector& a, const CartanVector& b);

/// True iff v lies in the Cartan (for sl in epsilon coordinates: coordinates sum to zero).
bool in_cartan(const LieType& type, const CartanVector& v);

/// Basis of the orthogonal complement of span(vectors) in the Cartan subalgebra.
/// Throws DegeneracyError if the input is linearly dependent.
std::vector<CartanVector> orthocomplement_in_cartan(const LieType& type,
                                                    const std::vector<CartanVector>& vectors);

/// Rank of a family of Cartan vectors (all in one basis).
int span_rank(const std::vector<CartanVector>& vectors);

}  // namespace nilsec
