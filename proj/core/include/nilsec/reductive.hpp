#pragma once

#include <string>
#include <vector>

namespace nilsec {

struct SimpleFactor {
  char series;  // 'A'..'G'
  int rank;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// A formal reductive Lie algebra: simple factors plus a central torus.
/// Small types are normalized on construction: B1,C1 -> A1; D1 -> t1; D2 -> 2A1; D3 -> A3;
/// gl_k -> A_{k-1}+t1. B2 and C2 are kept as written but compare equal.
class ReductiveType {
 public:
  ReductiveType() = default;

  static ReductiveType zero() { return {}; }
  static ReductiveType torus(int dim);
  /// A simple factor of the given Cartan type, normalized (rank <= 0 gives zero).
  static ReductiveType simple(char series, int rank);
  static ReductiveType gl(int k);
  static ReductiveType sp(int N);
  static ReductiveType so(int N);
  /// "0", "A5", "A3+t1", "t2", "D4+A1", "(A1)^3", "3A1", "C2".
  static ReductiveType parse(const std::string& text);

  const std::vector<SimpleFactor>& factors() const { return factors_; }
  int torus_dim() const { return torus_; }
  int semisimple_rank() const;
  int rank() const { return semisimple_rank() + torus_; }
  int dim() const;
  bool is_zero() const { return factors_.empty() && torus_ == 0; }

  /// Semisimple part only.
  ReductiveType semisimple() const;

  std::string to_string() const;

  friend ReductiveType operator+(const ReductiveType& a, const ReductiveType& b);
  /// Isomorphism of the formal algebras (B2 ~ C2).
  friend bool operator==(const ReductiveType& a, const ReductiveType& b);

 private:
  void add(SimpleFactor f);
  void sort();
  std::vector<SimpleFactor> factors_;
  int torus_ = 0;
};

int dim_simple(const SimpleFactor& f);

/// Type of the Dynkin subdiagram on the given (0-based) nodes of a Cartan matrix.
ReductiveType subdiagram_type(const std::vector<std::vector<int>>& cartan,
                              const std::vector<int>& nodes);

}  // namespace nilsec
