#include <gtest/gtest.h>

#include <random>

#include "matrix_model.hpp"
#include "nilsec/detvar.hpp"
#include "nilsec/errors.hpp"

using namespace nilsec;
using DK = DetKind::Kind;
namespace fp = oracle::fp;

namespace {

long D(DK k, int r, int N) { return dim_determinantal(DetKind{k, r, N}); }

// Rectangular helpers: row-major a x b.
using Rect = std::vector<fp::u64>;

Rect random_rect(int a, int b, std::mt19937_64& rng) {
  Rect m(static_cast<std::size_t>(a) * b);
  for (auto& x : m) x = rng() % fp::P;
  return m;
}

// M = U B U^T with U of size N x r and B a fixed r x r matrix; the tangent space at a
// random point is spanned by dU B U^T + U B dU^T.
int jacobian_rank_congruence(int N, int r, const Rect& B, std::mt19937_64& rng) {
  const Rect U = random_rect(N, r, rng);
  // UB^T and UB, N x r
  Rect UB(static_cast<std::size_t>(N) * r, 0), UBt(static_cast<std::size_t>(N) * r, 0);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < r; ++k)
      for (int l = 0; l < r; ++l) {
        UB[i * r + k] = fp::add(UB[i * r + k], fp::mul(U[i * r + l], B[l * r + k]));
        UBt[i * r + k] = fp::add(UBt[i * r + k], fp::mul(U[i * r + l], B[k * r + l]));
      }
  std::vector<std::vector<fp::u64>> rows;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < r; ++k) {
      // dU = E_ik: (E_ik B U^T)(a,b) = [a==i] (U B^T)(b,k); (U B E_ki)(a,b) = [b==i] (U B)(a,k)
      std::vector<fp::u64> v(static_cast<std::size_t>(N) * N, 0);
      for (int b = 0; b < N; ++b) v[i * N + b] = fp::add(v[i * N + b], UBt[b * r + k]);
      for (int a = 0; a < N; ++a) v[a * N + i] = fp::add(v[a * N + i], UB[a * r + k]);
      rows.push_back(std::move(v));
    }
  return fp::rank(std::move(rows));
}

// M = U V with U N x r, V r x N.
int jacobian_rank_product(int N, int r, std::mt19937_64& rng) {
  const Rect U = random_rect(N, r, rng), V = random_rect(r, N, rng);
  std::vector<std::vector<fp::u64>> rows;
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < r; ++k) {
      std::vector<fp::u64> v(static_cast<std::size_t>(N) * N, 0);
      for (int b = 0; b < N; ++b) v[i * N + b] = V[k * N + b];
      rows.push_back(std::move(v));
    }
  for (int k = 0; k < r; ++k)
    for (int j = 0; j < N; ++j) {
      std::vector<fp::u64> v(static_cast<std::size_t>(N) * N, 0);
      for (int a = 0; a < N; ++a) v[a * N + j] = U[a * r + k];
      rows.push_back(std::move(v));
    }
  return fp::rank(std::move(rows));
}

Rect identity_rect(int r) {
  Rect m(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r; ++i) m[i * r + i] = 1;
  return m;
}

Rect standard_symplectic(int r) {
  Rect m(static_cast<std::size_t>(r) * r, 0);
  for (int i = 0; i < r / 2; ++i) {
    m[i * r + r / 2 + i] = 1;
    m[(r / 2 + i) * r + i] = fp::P - 1;
  }
  return m;
}

TEST(Detvar, Examples) {
  EXPECT_EQ(D(DK::Traceless, 4, 9), 55);
  EXPECT_EQ(D(DK::Skew, 4, 8), 22);
  EXPECT_EQ(D(DK::SymAsSp, 2, 4), 7);
  EXPECT_EQ(D(DK::SymAsSp, 4, 8), 26);
  EXPECT_EQ(D(DK::Generic, 1, 3), 5);
}

TEST(Detvar, Boundaries) {
  for (int N = 1; N <= 8; ++N) {
    EXPECT_EQ(D(DK::Generic, N, N), N * N);
    EXPECT_EQ(D(DK::Traceless, N, N), N * N - 1);
    EXPECT_EQ(D(DK::Generic, 0, N), 0);
    EXPECT_EQ(D(DK::Traceless, 0, N), 0);
    EXPECT_EQ(D(DK::Skew, 0, N), 0);
    if (N % 2 == 0) {
      EXPECT_EQ(D(DK::Skew, N, N), N * (N - 1) / 2);
      EXPECT_EQ(D(DK::SymAsSp, N, N), N * (N + 1) / 2);
    }
  }
}

TEST(Detvar, Errors) {
  EXPECT_THROW(D(DK::Generic, 5, 4), SizeError);
  EXPECT_THROW(D(DK::Generic, -1, 4), SizeError);
  EXPECT_THROW(D(DK::Generic, 0, 0), SizeError);
  EXPECT_THROW(D(DK::Skew, 3, 8), SizeError);
  EXPECT_THROW(D(DK::SymAsSp, 2, 5), SizeError);
  EXPECT_EQ((DetKind{DK::Skew, 4, 8}.to_string()), "Skew(4,8)");
}

TEST(Detvar, MonotoneInRank) {
  for (int N = 2; N <= 10; ++N)
    for (int r = 1; r <= N; ++r) {
      EXPECT_LT(D(DK::Generic, r - 1, N), D(DK::Generic, r, N));
      if (N % 2 == 0) {
        EXPECT_LT(D(DK::SymAsSp, r - 1, N), D(DK::SymAsSp, r, N));
      }
      if (r % 2 == 0) {
        EXPECT_LT(D(DK::Skew, r - 2, N), D(DK::Skew, r, N));
      }
    }
}

// Independent route: Jacobian rank of a parametrization at a random point over F_p.
TEST(Detvar, JacobianOracle) {
  std::mt19937_64 rng(20261018);
  for (int N = 1; N <= 9; ++N)
    for (int r = 0; r <= N; ++r) {
      const int gen = r == 0 ? 0 : jacobian_rank_product(N, r, rng);
      EXPECT_EQ(D(DK::Generic, r, N), gen) << N << " " << r;
      // the cone of rank <= r matrices (r >= 1) is not inside the trace-zero hyperplane
      EXPECT_EQ(D(DK::Traceless, r, N), r == 0 ? 0 : gen - 1) << N << " " << r;
      if (r % 2 == 0) {
        const int skew = r == 0 ? 0 : jacobian_rank_congruence(N, r, standard_symplectic(r), rng);
        EXPECT_EQ(D(DK::Skew, r, N), skew) << N << " " << r;
      }
      if (N % 2 == 0) {
        const int sym = r == 0 ? 0 : jacobian_rank_congruence(N, r, identity_rect(r), rng);
        EXPECT_EQ(D(DK::SymAsSp, r, N), sym) << N << " " << r;
      }
    }
}

}  // namespace
