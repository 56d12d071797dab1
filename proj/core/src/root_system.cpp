#include "nilsec/root_system.hpp"

#include "linalg.hpp"
#include "nilsec/errors.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace nilsec {

void validate_marks(const LieType& type, const DynkinMarks& marks) {
  if (static_cast<int>(marks.size()) != type.rank())
    throw InvalidMarksError("expected " + std::to_string(type.rank()) + " marks for " +
                            type.cartan_name() + ", got " + std::to_string(marks.size()));
  for (int m : marks)
    if (m < 0 || m > 2)
      throw InvalidMarksError("mark " + std::to_string(m) + " outside {0,1,2}");
}

std::vector<std::vector<int>> cartan_matrix(const LieType& type) {
  const int n = type.rank();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type.series()) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Series::E6:
    case Series::E7:
    case Series::E8:
      // 1-3-4-5-...-n with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Series::F4:
      link(0, 1);
      link(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case Series::G2:
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
  }
  return a;
}

namespace {

std::vector<int> symmetrizer_for(const LieType& type) {
  const int n = type.rank();
  std::vector<int> d(n, 1);
  switch (type.series()) {
    case Series::B:
      std::fill(d.begin(), d.end(), 2);
      d[n - 1] = 1;
      break;
    case Series::C: d[n - 1] = 2; break;
    case Series::F4: d = {2, 2, 1, 1}; break;
    case Series::G2: d = {1, 3}; break;
    default: break;
  }
  return d;
}

std::vector<std::vector<int>> generate_roots(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> all, layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  while (!layer.empty()) {
    all.insert(all.end(), layer.begin(), layer.end());
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        // alpha_i-string through beta: p - q = -<beta, alpha_i^vee>
        int q = 0;
        std::vector<int> down = beta;
        while (true) {
          --down[i];
          if (!known.count(down)) break;
          ++q;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * a[i][j];
        if (q - pairing > 0) {
          std::vector<int> up = beta;
          ++up[i];
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }
  return all;
}

std::vector<int> minus_w0(const std::vector<std::vector<int>>& a) {
  const int n = static_cast<int>(a.size());
  // Drive rho to -rho by simple reflections, recording the word.
  std::vector<int> weight(n, 1), word;
  while (true) {
    int i = 0;
    while (i < n && weight[i] <= 0) ++i;
    if (i == n) break;
    const int c = weight[i];
    for (int j = 0; j < n; ++j) weight[j] -= c * a[j][i];
    word.push_back(i);
  }
  std::vector<int> perm(n, -1);
  for (int i = 0; i < n; ++i) {
    std::vector<int> beta(n, 0);
    beta[i] = 1;
    for (int k : word) {
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * a[k][j];
      beta[k] -= pairing;
    }
    for (int j = 0; j < n; ++j) {
      if (beta[j] == -1) {
        perm[i] = j;
        break;
      }
    }
  }
  return perm;
}

}  // namespace

RootSystem::RootSystem(const LieType& type)
    : type_(type),
      cartan_(::nilsec::cartan_matrix(type)),
      roots_(generate_roots(cartan_)),
      involution_(minus_w0(cartan_)),
      symmetrizer_(symmetrizer_for(type)) {}

int RootSystem::evaluate(const std::vector<int>& root, const DynkinMarks& marks) const {
  int v = 0;
  for (std::size_t i = 0; i < root.size(); ++i) v += root[i] * marks[i];
  return v;
}

const RootSystem& root_system(const LieType& type) {
  static std::mutex mu;
  static std::map<LieType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[type];
  if (!slot) slot = std::make_unique<RootSystem>(type);
  return *slot;
}

std::map<int, int> graded_dims(const LieType& type, const DynkinMarks& marks) {
  validate_marks(type, marks);
  const auto& rs = root_system(type);
  std::map<int, int> dims;
  dims[0] = type.rank();
  for (const auto& root : rs.positive_roots()) {
    const int d = rs.evaluate(root, marks);
    if (d == 0) {
      dims[0] += 2;
    } else {
      ++dims[d];
      ++dims[-d];
    }
  }
  return dims;
}

int orbit_dim_from_marks(const LieType& type, const DynkinMarks& marks) {
  auto dims = graded_dims(type, marks);
  return type.dim() - dims[0] - (dims.count(1) ? dims[1] : 0);
}

int height_of_marks(const LieType& type, const DynkinMarks& marks) {
  validate_marks(type, marks);
  const auto& rs = root_system(type);
  return rs.evaluate(rs.highest_root(), marks);
}

CartanVector::Basis natural_basis(const LieType& type) {
  return type.is_classical() ? CartanVector::Basis::Epsilon : CartanVector::Basis::Coroot;
}

namespace {

int coordinate_count(const LieType& type, CartanVector::Basis basis) {
  if (basis == CartanVector::Basis::Coroot) return type.rank();
  if (!type.is_classical()) throw UnsupportedError("no epsilon coordinates for " + type.name());
  return type.series() == Series::A ? type.N() : type.rank();
}

void check_shape(const LieType& type, const CartanVector& v) {
  if (static_cast<int>(v.coords.size()) != coordinate_count(type, v.basis))
    throw InvalidTypeError("Cartan vector of wrong length for " + type.name());
}

}  // namespace

CartanVector simple_coroot(const LieType& type, int i, CartanVector::Basis basis) {
  const int n = type.rank();
  if (i < 0 || i >= n) throw InvalidMarksError("node index out of range");
  CartanVector v{basis, std::vector<Rational>(coordinate_count(type, basis), Rational(0))};
  if (basis == CartanVector::Basis::Coroot) {
    v.coords[i] = 1;
    return v;
  }
  const bool last = (i == n - 1);
  switch (type.series()) {
    case Series::A:
      v.coords[i] = 1;
      v.coords[i + 1] = -1;
      break;
    case Series::B:
    case Series::C:
      v.coords[i] = 1;
      if (!last) v.coords[i + 1] = -1;
      break;
    case Series::D:
      if (last) {
        v.coords[n - 2] = 1;
        v.coords[n - 1] = 1;
      } else {
        v.coords[i] = 1;
        v.coords[i + 1] = -1;
      }
      break;
    default: break;
  }
  return v;
}

Rational inner_product(const LieType& type, const CartanVector& a, const CartanVector& b) {
  check_shape(type, a);
  check_shape(type, b);
  if (a.basis != b.basis) throw InvalidTypeError("mixed Cartan bases");
  Rational s = 0;
  if (a.basis == CartanVector::Basis::Epsilon) {
    for (std::size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
    return s;
  }
  const auto& rs = root_system(type);
  const auto& d = rs.symmetrizer();
  // (alpha_i^vee, alpha_j^vee) is proportional to cartan(i,j)/d_j
  for (int i = 0; i < type.rank(); ++i)
    for (int j = 0; j < type.rank(); ++j)
      if (rs.cartan(i, j) != 0)
        s += a.coords[i] * b.coords[j] * Rational(rs.cartan(i, j), d[j]);
  return s;
}

bool in_cartan(const LieType& type, const CartanVector& v) {
  check_shape(type, v);
  if (v.basis == CartanVector::Basis::Epsilon && type.series() == Series::A)
    return std::accumulate(v.coords.begin(), v.coords.end(), Rational(0)) == 0;
  return true;
}

int span_rank(const std::vector<CartanVector>& vectors) {
  if (vectors.empty()) return 0;
  detail::Matrix m;
  for (const auto& v : vectors) m.push_back(v.coords);
  return detail::matrix_rank(m, static_cast<int>(vectors.front().coords.size()));
}

std::vector<CartanVector> orthocomplement_in_cartan(const LieType& type,
                                                    const std::vector<CartanVector>& vectors) {
  const auto basis = vectors.empty() ? natural_basis(type) : vectors.front().basis;
  const int dim = coordinate_count(type, basis);
  for (const auto& v : vectors) {
    if (v.basis != basis) throw InvalidTypeError("mixed Cartan bases");
    if (!in_cartan(type, v)) throw InvalidTypeError("vector outside the Cartan subalgebra");
  }
  if (span_rank(vectors) != static_cast<int>(vectors.size()))
    throw DegeneracyError("input vectors are linearly dependent");

  // Rows are the functionals x -> (v, x).
  detail::Matrix rows;
  for (const auto& v : vectors) {
    std::vector<Rational> row(dim, Rational(0));
    for (int j = 0; j < dim; ++j) {
      CartanVector e{basis, std::vector<Rational>(dim, Rational(0))};
      e.coords[j] = 1;
      row[j] = inner_product(type, v, e);
    }
    rows.push_back(std::move(row));
  }
  if (basis == CartanVector::Basis::Epsilon && type.series() == Series::A)
    rows.emplace_back(dim, Rational(1));  // stay inside sl_N

  std::vector<CartanVector> out;
  for (auto& v : detail::nullspace(rows, dim)) out.push_back({basis, std::move(v)});
  return out;
}

}  // namespace nilsec
