#include "matrix_model.hpp"

#include <stdexcept>

namespace oracle::fp {

using nilsec::LieType;
using nilsec::Rational;
using nilsec::Series;

u64 add(u64 a, u64 b) { return (a + b) % P; }
u64 sub(u64 a, u64 b) { return (a + P - b) % P; }
u64 mul(u64 a, u64 b) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % P); }
u64 inv(u64 a) {
  u64 r = 1, e = P - 2;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}
u64 from_int(long long v) {
  const long long m = v % static_cast<long long>(P);
  return static_cast<u64>(m < 0 ? m + static_cast<long long>(P) : m);
}

Mat Mat::identity(int size) {
  Mat m(size);
  for (int i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

Mat operator*(const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const u64 v = x(i, k);
      if (!v) continue;
      for (int j = 0; j < x.n; ++j) z(i, j) = add(z(i, j), mul(v, y(k, j)));
    }
  return z;
}

Mat operator+(const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = add(x.a[i], y.a[i]);
  return z;
}

Mat operator-(const Mat& x, const Mat& y) {
  Mat z(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = sub(x.a[i], y.a[i]);
  return z;
}

Mat scale(const Mat& x, u64 c) {
  Mat z(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) z.a[i] = mul(x.a[i], c);
  return z;
}

Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

Mat exp_nilpotent(const Mat& x) {
  Mat result = Mat::identity(x.n), term = Mat::identity(x.n);
  for (int k = 1; k <= x.n; ++k) {
    term = scale(term * x, inv(static_cast<u64>(k)));
    result = result + term;
  }
  return result;
}

namespace {

// Row-reduces in place; returns the pivot columns.
std::vector<int> reduce(std::vector<std::vector<u64>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows[0].size());
  std::size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const u64 f = inv(rows[r][c]);
    for (auto& v : rows[r]) v = mul(v, f);
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c] == 0) continue;
      const u64 g = rows[q][c];
      for (int k = c; k < cols; ++k) rows[q][k] = sub(rows[q][k], mul(g, rows[r][k]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<std::vector<u64>> rows_of(const Mat& m) {
  std::vector<std::vector<u64>> rows(m.n, std::vector<u64>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) rows[i][j] = m(i, j);
  return rows;
}

u64 random_unit(std::mt19937_64& rng) { return 1 + rng() % (P - 1); }

}  // namespace

int rank(std::vector<std::vector<u64>> rows) { return static_cast<int>(reduce(rows).size()); }
int rank(const Mat& m) { return rank(rows_of(m)); }

std::vector<std::vector<u64>> kernel(const Mat& m) {
  auto rows = rows_of(m);
  const auto pivots = reduce(rows);
  std::vector<bool> is_pivot(m.n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<u64>> out;
  for (int f = 0; f < m.n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<u64> v(m.n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = sub(0, rows[r][f]);
    out.push_back(v);
  }
  return out;
}

nilsec::Partition jordan_type(const Mat& x) {
  std::vector<int> ranks{x.n};
  Mat power = Mat::identity(x.n);
  while (ranks.back() > 0) {
    power = power * x;
    const int r = rank(power);
    if (r == ranks.back()) throw std::runtime_error("matrix is not nilpotent");
    ranks.push_back(r);
  }
  // blocks of size >= k: ranks[k-1] - ranks[k]
  std::vector<int> parts;
  const int top = static_cast<int>(ranks.size()) - 1;
  for (int k = top; k >= 1; --k) {
    const int at_least = ranks[k - 1] - ranks[k];
    const int at_least_next = k + 1 <= top ? ranks[k] - ranks[k + 1] : 0;
    for (int c = 0; c < at_least - at_least_next; ++c) parts.push_back(k);
  }
  return nilsec::Partition(parts);
}

Algebra::Algebra(const LieType& type) : type_(type), N_(type.N()) {
  const int N = N_, n = type.rank();
  auto E = [N](int a, int b) {
    Mat m(N);
    m(a, b) = 1;
    return m;
  };
  if (type.series() == Series::A) {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (a != b) basis_.push_back({E(a, b), a, b});
    for (int i = 0; i + 1 < N; ++i) basis_.push_back({E(i, i) - E(i + 1, i + 1), i, i});
    return;
  }
  if (type.series() != Series::B && type.series() != Series::C && type.series() != Series::D)
    throw std::invalid_argument("matrix model needs a classical algebra");
  const bool symplectic = type.series() == Series::C;
  form_.assign(N, 1);
  if (symplectic)
    for (int a = n; a < N; ++a) form_[a] = -1;
  for (int a = 0; a < N; ++a)
    for (int b = 0; a + b < N - 1; ++b) {
      const int ap = N - 1 - a, bp = N - 1 - b;
      const long long sign = symplectic ? form_[a] * form_[b] : 1;
      basis_.push_back({E(a, b) - scale(E(bp, ap), from_int(sign)), a, b});
    }
  if (symplectic)
    for (int a = 0; a < N; ++a) basis_.push_back({E(a, N - 1 - a), a, N - 1 - a});
}

bool Algebra::contains(const Mat& x) const {
  if (form_.empty()) {
    u64 tr = 0;
    for (int i = 0; i < N_; ++i) tr = add(tr, x(i, i));
    return tr == 0;
  }
  Mat J(N_);
  for (int a = 0; a < N_; ++a) J(a, N_ - 1 - a) = from_int(form_[a]);
  Mat xt(N_);
  for (int i = 0; i < N_; ++i)
    for (int j = 0; j < N_; ++j) xt(i, j) = x(j, i);
  const Mat z = xt * J + J * x;
  for (u64 v : z.a)
    if (v) return false;
  return true;
}

std::vector<long long> Algebra::doubled_h(const nilsec::DynkinMarks& m) const {
  const int n = type_.rank();
  std::vector<long long> t(n + (type_.series() == Series::A ? 1 : 0), 0);
  switch (type_.series()) {
    case Series::A:
      for (int i = n - 1; i >= 0; --i) t[i] = t[i + 1] + 2 * m[i];
      return t;
    case Series::B: t[n - 1] = 2 * m[n - 1]; break;
    case Series::C: t[n - 1] = m[n - 1]; break;
    case Series::D:
      t[n - 1] = m[n - 1] - m[n - 2];
      t[n - 2] = m[n - 1] + m[n - 2];
      break;
    default: throw std::invalid_argument("classical only");
  }
  for (int i = (type_.series() == Series::D ? n - 3 : n - 2); i >= 0; --i) t[i] = t[i + 1] + 2 * m[i];
  std::vector<long long> d(N_, 0);
  for (int i = 0; i < n; ++i) {
    d[i] = t[i];
    d[N_ - 1 - i] = -t[i];
  }
  return d;
}

Mat Algebra::random_in_degree(const std::vector<long long>& d, long long target, std::mt19937_64& rng) const {
  Mat x(N_);
  for (const auto& e : basis_)
    if (d[e.a] - d[e.b] == target) x = x + scale(e.m, random_unit(rng));
  return x;
}

Mat Algebra::random_positive(const std::vector<Rational>& d, std::mt19937_64& rng) const {
  Mat x(N_);
  for (const auto& e : basis_)
    if (d[e.a] - d[e.b] > Rational(0)) x = x + scale(e.m, random_unit(rng));
  return x;
}

std::pair<Mat, Mat> Algebra::random_group_element(std::mt19937_64& rng) const {
  std::vector<Mat> factors;
  for (int round = 0; round < 3; ++round) {
    Mat x(N_);
    for (const auto& e : basis_)
      if (round % 2 == 0 ? e.a < e.b : e.a > e.b) x = x + scale(e.m, random_unit(rng));
    factors.push_back(x);
  }
  Mat g = Mat::identity(N_), g_inv = Mat::identity(N_);
  for (const auto& f : factors) {
    g = g * exp_nilpotent(f);
    g_inv = exp_nilpotent(scale(f, P - 1)) * g_inv;
  }
  return {g, g_inv};
}

bool Algebra::very_even_tag_is_I(const Mat& x) const {
  const int n = type_.rank();
  std::vector<std::vector<u64>> lag;
  Mat xj = Mat::identity(N_);
  for (int j = 1; 2 * j <= 2 * N_; ++j) {
    xj = xj * x;
    const Mat x2j = xj * xj;
    for (const auto& v : kernel(x2j)) {
      std::vector<u64> w(N_, 0);
      for (int r = 0; r < N_; ++r)
        for (int c = 0; c < N_; ++c) w[r] = add(w[r], mul(xj(r, c), v[c]));
      lag.push_back(w);
    }
  }
  if (rank(lag) != n) throw std::runtime_error("canonical subspace is not Lagrangian");
  auto both = lag;
  for (int i = 0; i < n; ++i) {
    std::vector<u64> e(N_, 0);
    e[i] = 1;
    both.push_back(e);
  }
  const int meet = 2 * n - rank(both);
  return meet % 2 == n % 2;
}

int Algebra::ad_rank(const Mat& x) const {
  std::vector<std::vector<u64>> rows;
  for (const auto& e : basis_) rows.push_back(bracket(x, e.m).a);
  return rank(rows);
}

int Algebra::ad_rank_pair(const Mat& x, const Mat& y) const {
  std::vector<std::vector<u64>> rows;
  for (const auto& e : basis_) {
    rows.push_back(bracket(x, e.m).a);
    rows.push_back(bracket(y, e.m).a);
  }
  return rank(rows);
}

Mat representative(const Algebra& g, const nilsec::Orbit& o, std::mt19937_64& rng) {
  return g.random_in_degree(g.doubled_h(nilsec::weighted_dynkin(o)), 4, rng);
}

std::vector<Rational> diagonal_of(const LieType& type, const std::vector<Rational>& eps) {
  if (type.series() == Series::A) return eps;
  const int N = type.N(), n = type.rank();
  std::vector<Rational> d(N, Rational(0));
  for (int i = 0; i < n; ++i) {
    d[i] = eps[i];
    d[N - 1 - i] = -eps[i];
  }
  return d;
}

}  // namespace oracle::fp
