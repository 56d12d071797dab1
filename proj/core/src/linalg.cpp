#include "linalg.hpp"

#include <boost/integer/common_factor.hpp>

#include <numeric>

namespace nilsec::detail {

std::vector<int> rref(Matrix& m, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational lead = m[row][c];
    for (auto& x : m[row]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (int k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

int matrix_rank(Matrix m, int cols) { return static_cast<int>(rref(m, cols).size()); }

std::vector<std::vector<Rational>> nullspace(Matrix m, int cols) {
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

std::vector<Rational> primitive(std::vector<Rational> v) {
  std::int64_t den = 1;
  for (const auto& x : v) den = boost::integer::lcm(den, x.denominator());
  std::int64_t g = 0;
  for (auto& x : v) {
    x *= den;
    g = std::gcd(g, x.numerator());
  }
  if (g == 0) return v;
  Rational sign = 1;
  for (const auto& x : v)
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  for (auto& x : v) x = x / g * sign;
  return v;
}

}  // namespace nilsec::detail
