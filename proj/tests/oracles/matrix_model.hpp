#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nilsec/orbit.hpp"
#include "nilsec/rational.hpp"
#include "nilsec/root_system.hpp"

// Classical Lie algebras as explicit matrices over F_p, p = 1e9+7.
// sl_N: trace-free matrices; so_N and sp_N preserve the antidiagonal form J with
// J(a, N-1-a) = 1 (so), resp. +1 for a < n and -1 for a >= n (sp).
// The diagonal Cartan is diag(t_1..t_n, [0], -t_n..-t_1) for so/sp.
namespace oracle::fp {

using u64 = std::uint64_t;
constexpr u64 P = 1000000007ULL;

u64 add(u64 a, u64 b);
u64 sub(u64 a, u64 b);
u64 mul(u64 a, u64 b);
u64 inv(u64 a);
u64 from_int(long long v);

struct Mat {
  int n = 0;
  std::vector<u64> a;
  explicit Mat(int size = 0) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}
  u64& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  u64 operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
  static Mat identity(int size);
};

Mat operator*(const Mat& x, const Mat& y);
Mat operator+(const Mat& x, const Mat& y);
Mat operator-(const Mat& x, const Mat& y);
Mat scale(const Mat& x, u64 c);
Mat bracket(const Mat& x, const Mat& y);
/// exp of a nilpotent matrix.
Mat exp_nilpotent(const Mat& x);

/// Rank of a list of row vectors.
int rank(std::vector<std::vector<u64>> rows);
int rank(const Mat& m);
/// Basis of the right null space of m, as vectors.
std::vector<std::vector<u64>> kernel(const Mat& m);

/// Jordan type of a nilpotent matrix, from the ranks of its powers.
nilsec::Partition jordan_type(const Mat& x);

/// A basis element together with its weight: the index pair (a,b) such that the element
/// has eigenvalue t_a - t_b under the diagonal Cartan (a == b for Cartan elements).
struct BasisElement {
  Mat m;
  int a = 0;
  int b = 0;
};

class Algebra {
 public:
  explicit Algebra(const nilsec::LieType& type);
  const nilsec::LieType& type() const { return type_; }
  int N() const { return N_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  /// Whether x preserves the form (so/sp) or is trace-free (sl).
  bool contains(const Mat& x) const;
  /// Diagonal entries of the Cartan element with the given marks, times 2 (keeps D/C integral).
  std::vector<long long> doubled_h(const nilsec::DynkinMarks& marks) const;
  /// Random element of the span of basis elements whose weight under diag(d) equals target.
  Mat random_in_degree(const std::vector<long long>& d, long long target, std::mt19937_64& rng) const;
  /// Random element of the span of basis elements with positive weight under diag(d).
  Mat random_positive(const std::vector<nilsec::Rational>& d, std::mt19937_64& rng) const;
  /// Product of exponentials of random upper and lower nilpotent elements.
  std::pair<Mat, Mat> random_group_element(std::mt19937_64& rng) const;
  /// Canonical Lagrangian of a very even nilpotent: sum of X^j ker X^{2j}.
  /// Returns true if it lies in the family of span(e_1..e_n).
  bool very_even_tag_is_I(const Mat& x) const;

  /// Rank of {[x, B] : B in basis}.
  int ad_rank(const Mat& x) const;
  /// Rank of {[x, B]} union {[y, B]}.
  int ad_rank_pair(const Mat& x, const Mat& y) const;

 private:
  nilsec::LieType type_;
  int N_ = 0;
  std::vector<BasisElement> basis_;
  std::vector<long long> form_;  // J(a, N-1-a)
};

/// Generic representative of the orbit: random element of g(2) for its characteristic.
Mat representative(const Algebra& g, const nilsec::Orbit& o, std::mt19937_64& rng);

/// Diagonal coordinates of a vector of the classical Cartan given in the epsilon basis.
std::vector<nilsec::Rational> diagonal_of(const nilsec::LieType& type, const std::vector<nilsec::Rational>& eps);

}  // namespace oracle::fp
