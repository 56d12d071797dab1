#include "nilsec/secant.hpp"

#include "nilsec/detvar.hpp"
#include "nilsec/errors.hpp"
#include "nilsec/exceptional.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace nilsec {

namespace {

Partition parts_of(std::initializer_list<std::pair<int, int>> blocks) {
  std::vector<int> v;
  for (auto [part, times] : blocks) v.insert(v.end(), std::max(times, 0), part);
  return Partition::from_unsorted(std::move(v));
}

void require_nonzero(const Orbit& o, const char* what) {
  if (o.is_zero()) throw UnsupportedError(std::string(what) + " is undefined for the zero orbit");
}

const ExceptionalRecord& record(const Orbit& o) {
  return load_exceptional(o.type()).find(o.exceptional_label());
}

char series_letter(const LieType& t) { return t.cartan_name().front(); }

}  // namespace

// ---------------------------------------------------------------- UpsilonClass

std::string UpsilonClass::to_string() const {
  switch (kind) {
    case Kind::Max: return "Max";
    case Kind::J: return "J(" + std::to_string(param) + ")";
    case Kind::Spherical: return "Spherical(" + std::to_string(param) + ")";
    case Kind::ExceptionalDirect: return "Exceptional";
  }
  return "";
}

UpsilonClass UpsilonClass::parse(const std::string& text) {
  if (text == "Max") return {Kind::Max, 0};
  if (text == "Exceptional") return {Kind::ExceptionalDirect, 0};
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')') throw ParseError("bad class '" + text + "'");
  const std::string head = text.substr(0, open);
  const std::string num = text.substr(open + 1, text.size() - open - 2);
  int v = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
  if (ec != std::errc{} || ptr != num.data() + num.size()) throw ParseError("bad class '" + text + "'");
  if (head == "J") return {Kind::J, v};
  if (head == "Spherical") return {Kind::Spherical, v};
  throw ParseError("bad class '" + text + "'");
}

UpsilonClass classify_upsilon(const Orbit& o) {
  require_nonzero(o, "the upsilon class");
  const LieType& t = o.type();
  if (t.is_exceptional()) throw UnsupportedError("exceptional orbits are handled directly");
  const Partition& p = o.partition();
  const int N = t.N();
  const int rank = matrix_rank(t, p);
  using K = UpsilonClass::Kind;
  switch (t.series()) {
    case Series::A:
      if (p.largest() >= 3) return 2 * rank >= N ? UpsilonClass{K::Max, 0} : UpsilonClass{K::J, rank};
      return {K::Spherical, p.multiplicity(2)};
    case Series::C:
      return rank >= t.rank() ? UpsilonClass{K::Max, 0} : UpsilonClass{K::J, rank};
    default:
      if (p.largest() >= 3)
        return rank >= N / 2 ? UpsilonClass{K::Max, 0} : UpsilonClass{K::J, rank / 2};
      return {K::Spherical, p.multiplicity(2) / 2};
  }
}

// ---------------------------------------------------------------- stabilizers

ReductiveType generic_stabilizer(const Orbit& o) {
  const LieType& t = o.type();
  if (o.is_zero()) return ReductiveType::simple(series_letter(t), t.rank());
  if (t.is_exceptional()) {
    const auto& rec = record(o);
    return rec.defective ? ReductiveType::parse(rec.defective->s_star) : ReductiveType::zero();
  }
  const auto cls = classify_upsilon(o);
  const int N = t.N();
  using K = UpsilonClass::Kind;
  if (cls.kind == K::Max) return ReductiveType::zero();
  const int k = cls.param;
  switch (t.series()) {
    case Series::A:
      if (cls.kind == K::J) return ReductiveType::gl(N - 2 * k);
      if (2 * k < N) return ReductiveType::gl(N - 2 * k) + ReductiveType::torus(k - 1);
      return ReductiveType::torus(k - 1);
    case Series::C: return ReductiveType::sp(2 * t.rank() - 2 * k);
    default: {
      if (cls.kind == K::J) return ReductiveType::so(N - 4 * k);
      ReductiveType s = ReductiveType::so(N - 4 * k);
      for (int i = 0; i < k; ++i) s = s + ReductiveType::simple('A', 1);
      return s;
    }
  }
}

std::pair<int, int> rank_complexity(const Orbit& o) {
  require_nonzero(o, "rank and complexity");
  const LieType& t = o.type();
  const ReductiveType s = generic_stabilizer(o);
  const int r = t.rank() - s.rank();
  const int twice = 2 * dim_orbit(o) - t.dim() + s.dim() - r;  // 2c
  if (twice % 2 != 0 || twice < 0)
    throw DataIntegrityError("2c = 2dimO - dim g + dim sStar - r is not a non-negative even number for " +
                             o.to_string());
  return {r, twice / 2};
}

int dim_cs(const Orbit& o) {
  if (o.is_zero()) return 0;
  return o.type().dim() - generic_stabilizer(o).dim();
}

bool is_defective(const Orbit& o) {
  if (o.is_zero()) return false;
  return rank_complexity(o).first < o.type().rank();
}

std::optional<int> secant_defect(const Orbit& o) {
  if (!is_defective(o)) return std::nullopt;
  auto [r, c] = rank_complexity(o);
  return 2 * c + r;
}

// ---------------------------------------------------------------- descriptors

std::string VarietyDescriptor::kind_name(Kind k) {
  switch (k) {
    case Kind::FullAlgebra: return "FullAlgebra";
    case Kind::DetTraceless: return "DetTraceless";
    case Kind::DetSymplecticSym: return "DetSymplecticSym";
    case Kind::DetSkew: return "DetSkew";
    case Kind::SphericalSOSlice: return "SphericalSOSlice";
    case Kind::E6CompleteIntersection: return "E6CompleteIntersection";
    case Kind::DixmierClosure: return "DixmierClosure";
  }
  return "";
}

long VarietyDescriptor::dimension() const {
  using DK = DetKind::Kind;
  switch (kind) {
    case Kind::FullAlgebra: return ambient_dim;
    case Kind::DetTraceless:
      return dim_determinantal({DK::Traceless, rank_bound, N}) - static_cast<long>(equations.size());
    case Kind::DetSymplecticSym: return dim_determinantal({DK::SymAsSp, rank_bound, N});
    case Kind::DetSkew: return dim_determinantal({DK::Skew, rank_bound, N});
    case Kind::SphericalSOSlice: return dim_determinantal({DK::Skew, rank_bound, N}) - 3L * (rank_bound / 4);
    case Kind::E6CompleteIntersection: return ambient_dim - static_cast<long>(equations.size());
    case Kind::DixmierClosure: return ambient_dim - levi.dim() + torus;
  }
  return 0;
}

std::string VarietyDescriptor::to_string() const {
  auto list = [](const std::vector<int>& v, const char* prefix) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::string(prefix) + std::to_string(x);
    return s;
  };
  const std::string rn = std::to_string(rank_bound) + "," + std::to_string(N);
  switch (kind) {
    case Kind::FullAlgebra: return "FullAlgebra";
    case Kind::DetTraceless:
      return "DetTraceless(" + rn + (equations.empty() ? "" : ";" + list(equations, "s")) + ")";
    case Kind::DetSymplecticSym: return "DetSymplecticSym(" + rn + ")";
    case Kind::DetSkew: return "DetSkew(" + rn + ")";
    case Kind::SphericalSOSlice:
      return "SphericalSOSlice(" + std::to_string(rank_bound / 4) + "," + std::to_string(N) + ")";
    case Kind::E6CompleteIntersection: return "E6CompleteIntersection(" + list(equations, "F") + ")";
    case Kind::DixmierClosure: return "DixmierClosure(" + levi.to_string() + ")";
  }
  return "";
}

VarietyDescriptor cs_descriptor(const Orbit& o) {
  require_nonzero(o, "CS(O)");
  const LieType& t = o.type();
  using K = VarietyDescriptor::Kind;
  VarietyDescriptor d;
  d.ambient_dim = t.dim();
  auto [r, c] = rank_complexity(o);
  if (r == t.rank()) return d;  // FullAlgebra

  if (t.is_exceptional()) {
    const std::string& label = o.exceptional_label();
    if (t.series() == Series::E6 && (label == "3A1" || label == "A2")) {
      d.kind = K::E6CompleteIntersection;
      d.equations = {5, 9};
    } else {
      d.kind = K::DixmierClosure;
      d.levi = generic_stabilizer(o) + ReductiveType::torus(r);
      d.torus = r;
    }
    return d;
  }

  const auto cls = classify_upsilon(o);
  const int N = t.N();
  const int k = cls.param;
  d.N = N;
  switch (t.series()) {
    case Series::A:
      d.kind = K::DetTraceless;
      d.rank_bound = 2 * k;
      if (cls.kind == UpsilonClass::Kind::Spherical)
        for (int e = 3; e <= 2 * k - 1; e += 2) d.equations.push_back(e);
      break;
    case Series::C:
      d.kind = K::DetSymplecticSym;
      d.rank_bound = 2 * k;
      break;
    default:
      d.kind = cls.kind == UpsilonClass::Kind::J ? K::DetSkew : K::SphericalSOSlice;
      d.rank_bound = 4 * k;
      break;
  }
  return d;
}

// ---------------------------------------------------------------- embeddings

EnhancedDiagram enhanced_diagram(const Orbit& o) {
  require_nonzero(o, "the enhanced diagram");
  const LieType& t = o.type();
  EnhancedDiagram e;
  if (t.is_exceptional()) {
    const auto& rec = record(o);
    if (rec.defective && rec.embedding) {
      e.black = rec.embedding->black;
      e.arcs = rec.embedding->arcs;
    }
  } else {
    const auto cls = classify_upsilon(o);
    if (cls.kind == UpsilonClass::Kind::Max) return e;
    const int n = t.rank();
    const int N = t.N();
    const int k = cls.param;
    auto range = [&](int from, int to) {
      for (int i = from; i <= to; ++i) e.black.push_back(i);
    };
    const bool spherical = cls.kind == UpsilonClass::Kind::Spherical;
    switch (t.series()) {
      case Series::A:
        if (!spherical) {
          range(k + 1, N - 1 - k);
          e.arcs.push_back({k, N - k});
        } else if (2 * k < N) {
          range(k + 1, N - 1 - k);
          for (int i = 1; i <= k; ++i) e.arcs.push_back({i, N - i});
        } else {
          for (int i = 1; i <= k - 1; ++i) e.arcs.push_back({i, N - i});
        }
        break;
      case Series::C: range(k + 1, n); break;
      case Series::B:
        if (spherical)
          for (int i = 1; i <= 2 * k - 1; i += 2) e.black.push_back(i);
        range(2 * k + 1, n);
        break;
      default:
        if (spherical)
          for (int i = 1; i <= 2 * k - 1 && i <= n - 2; i += 2) e.black.push_back(i);
        if (n - 2 * k >= 2) {
          range(2 * k + 1, n);
        } else if (n - 2 * k == 1) {
          e.arcs.push_back({n - 1, n});
        } else {
          // n = 2m: the last sl2 sits on alpha_{n-1} for tag I and alpha_n for tag II
          e.black.push_back(o.tag() == VeTag::II ? n : n - 1);
        }
        break;
    }
  }
  std::sort(e.black.begin(), e.black.end());
  for (auto& [i, j] : e.arcs)
    if (i > j) std::swap(i, j);
  std::sort(e.arcs.begin(), e.arcs.end());
  return e;
}

std::vector<CartanVector> t_O_basis(const Orbit& o) {
  require_nonzero(o, "t_O");
  const LieType& t = o.type();
  const auto basis = natural_basis(t);
  const EnhancedDiagram e = enhanced_diagram(o);
  std::vector<CartanVector> star;
  for (int b : e.black) star.push_back(simple_coroot(t, b - 1, basis));
  for (auto [i, j] : e.arcs) {
    CartanVector v = simple_coroot(t, i - 1, basis);
    const CartanVector w = simple_coroot(t, j - 1, basis);
    for (std::size_t k = 0; k < v.coords.size(); ++k) v.coords[k] -= w.coords[k];
    star.push_back(std::move(v));
  }
  return orthocomplement_in_cartan(t, star);
}

// ---------------------------------------------------------------- tilde orbit

Orbit tilde_orbit(const Orbit& o) {
  require_nonzero(o, "the tilde orbit");
  const LieType& t = o.type();
  if (t.is_exceptional()) {
    const auto& rec = record(o);
    if (rec.defective) return Orbit::exceptional(t, *rec.tilde);
    return regular_orbit(t);
  }
  const auto cls = classify_upsilon(o);
  if (cls.kind == UpsilonClass::Kind::Max) return regular_orbit(t);
  const int N = t.N();
  const int k = cls.param;
  switch (t.series()) {
    case Series::A:
      if (2 * k >= N) return regular_orbit(t);
      return Orbit::classical(t, parts_of({{2 * k + 1, 1}, {1, N - 2 * k - 1}}));
    case Series::C: return Orbit::classical(t, parts_of({{2 * k, 1}, {2, 1}, {1, N - 2 * k - 2}}));
    default:
      if (cls.kind == UpsilonClass::Kind::J)
        return Orbit::classical(t, parts_of({{4 * k + 1, 1}, {1, N - 4 * k - 1}}));
      if (N == 4 * k) return Orbit::classical(t, parts_of({{2 * k, 2}}), o.tag());
      if (N == 4 * k + 1) return Orbit::classical(t, parts_of({{2 * k + 1, 1}, {2 * k - 1, 1}, {1, 1}}));
      return Orbit::classical(t, parts_of({{2 * k + 1, 2}, {1, N - 4 * k - 2}}));
  }
}

// ---------------------------------------------------------------- posets

std::vector<Orbit> maximal_defective(const LieType& t) {
  if (t.is_exceptional()) {
    switch (t.series()) {
      case Series::E7: return {Orbit::exceptional(t, "A2"), Orbit::exceptional(t, "(3A1)''")};
      case Series::F4: return {Orbit::exceptional(t, "~A1")};
      case Series::G2: return {Orbit::exceptional(t, "A1")};
      default: return {Orbit::exceptional(t, "A2")};
    }
  }
  const int N = t.N();
  switch (t.series()) {
    case Series::A: {
      if (N == 2) return {};
      if (N == 4) return {Orbit::classical(t, parts_of({{2, 2}}))};
      const int n = N / 2;
      if (N % 2) return {Orbit::classical(t, parts_of({{n + 1, 1}, {1, n}}))};
      return {Orbit::classical(t, parts_of({{2, n}})), Orbit::classical(t, parts_of({{n, 1}, {1, n}}))};
    }
    case Series::C: {
      const int n = t.rank();
      const int m = n / 2;
      if (n % 2 == 0) return {Orbit::classical(t, parts_of({{2 * m, 1}, {1, 2 * m}}))};
      return {Orbit::classical(t, parts_of({{2 * m, 1}, {2, 1}, {1, 2 * m}}))};
    }
    default: {
      const int m = N / 4;
      switch (N % 4) {
        case 0:
          return {Orbit::classical(t, parts_of({{2 * m - 1, 1}, {1, 2 * m + 1}})),
                  Orbit::classical(t, parts_of({{2, 2 * m}}), VeTag::I),
                  Orbit::classical(t, parts_of({{2, 2 * m}}), VeTag::II)};
        case 1:
          return {Orbit::classical(t, parts_of({{2 * m - 1, 1}, {1, 2 * m + 2}})),
                  Orbit::classical(t, parts_of({{2, 2 * m}, {1, 1}}))};
        case 2: return {Orbit::classical(t, parts_of({{2 * m + 1, 1}, {1, 2 * m + 1}}))};
        default: return {Orbit::classical(t, parts_of({{2 * m + 1, 1}, {1, 2 * m + 2}}))};
      }
    }
  }
}

std::vector<Orbit> upsilon_members(const LieType& type, const UpsilonClass& cls) {
  std::vector<Orbit> out;
  for (const auto& o : enumerate_orbits(type))
    if (!o.is_zero() && classify_upsilon(o) == cls) out.push_back(o);
  return out;
}

std::vector<UpsilonClass> j_classes(const LieType& t) {
  std::vector<UpsilonClass> out;
  using K = UpsilonClass::Kind;
  switch (t.series()) {
    case Series::A:
      for (int j = 2; j <= (t.N() - 1) / 2; ++j) out.push_back({K::J, j});
      break;
    case Series::C:
      for (int j = 1; j <= t.rank() - 1; ++j) out.push_back({K::J, j});
      break;
    case Series::B:
    case Series::D:
      for (int m = 1; 2 * m < t.N() / 2; ++m) out.push_back({K::J, m});
      break;
    default: break;
  }
  return out;
}

int dim_partition_orbit(PartitionKind kind, const Partition& p) {
  const long n = p.total();
  const long sq = sum_transpose_squares(p);
  long odd = 0;
  for (int x : p.parts()) odd += x % 2;
  switch (kind) {
    case PartitionKind::Linear: return static_cast<int>(n * n - sq);
    case PartitionKind::Symplectic: return static_cast<int>(n * (n + 1) / 2 - (sq + odd) / 2);
    case PartitionKind::Orthogonal: return static_cast<int>(n * (n - 1) / 2 - (sq - odd) / 2);
  }
  return 0;
}

UpsilonIsomorphism upsilon_isomorphism(const LieType& type, const UpsilonClass& cls) {
  if (cls.kind != UpsilonClass::Kind::J) throw UnsupportedError("column erasure applies to J classes only");
  const auto classes = j_classes(type);
  if (std::find(classes.begin(), classes.end(), cls) == classes.end())
    throw UnsupportedError(cls.to_string() + " is not a J class of " + type.name());

  UpsilonIsomorphism iso;
  const int k = cls.param;
  switch (type.series()) {
    case Series::A:
      iso = {PartitionKind::Linear, k, false, "nonzero orbits of sl" + std::to_string(k), {}};
      break;
    case Series::C:
      iso = {PartitionKind::Orthogonal, k, true, "all orbits of so" + std::to_string(k), {}};
      break;
    default:
      iso = {PartitionKind::Symplectic, 2 * k, false, "nonzero orbits of sp" + std::to_string(2 * k), {}};
      break;
  }

  const auto source = upsilon_members(type, cls);
  auto target = admissible_partitions(iso.target_kind, iso.target_size);
  if (!iso.target_includes_zero)
    std::erase_if(target, [](const Partition& p) { return p.largest() <= 1; });

  std::set<Partition> image;
  for (const auto& o : source) {
    Partition q = erase_column(o.partition());
    if (q.total() != iso.target_size || !is_admissible(iso.target_kind, q))
      throw DataIntegrityError("column erasure leaves the target poset for " + o.to_string());
    image.insert(q);
    iso.map.emplace_back(o, std::move(q));
  }
  if (image.size() != source.size() || image != std::set<Partition>(target.begin(), target.end()))
    throw DataIntegrityError("column erasure is not a bijection onto the " + iso.target_name + " for " +
                             cls.to_string() + " of " + type.name());

  for (const auto& [a, qa] : iso.map)
    for (const auto& [b, qb] : iso.map) {
      const bool src = closure_leq(a, b);
      const bool dst = dominance_leq(qa, qb);
      if (src != dst)
        throw DataIntegrityError("column erasure does not preserve the order between " + a.to_string() +
                                 " and " + b.to_string());
      if (src && dim_orbit(b) - dim_orbit(a) !=
                     dim_partition_orbit(iso.target_kind, qb) - dim_partition_orbit(iso.target_kind, qa))
        throw DataIntegrityError("column erasure does not preserve codimension between " + a.to_string() +
                                 " and " + b.to_string());
    }
  return iso;
}

std::set<int> forbidden_ranks(const LieType& t) {
  std::set<int> out;
  const int N = t.N();
  switch (t.series()) {
    case Series::A:
      for (int v = 2; v < N - 1; v += 2)
        if (2 * v > N) out.insert(v);
      break;
    case Series::C: break;
    default:
      for (int v = 1; v < N / 2; v += 2)
        if (v > N / 4) out.insert(v);
      break;
  }
  return out;
}

long higher_secant_dim_sp_min(int n, int r) {
  if (n < 1 || r < 1) throw SizeError("higher secants need n >= 1 and r >= 1");
  const long dim = static_cast<long>(n) * (2 * n + 1);
  if (r >= 2 * n) return dim;
  const long m = r / 2;
  long stab = (n - m) * (2 * (n - m) + 1);
  if (r % 2) stab -= 2 * (n - m);
  return dim - stab;
}

// ---------------------------------------------------------------- report

namespace {

void expect(bool ok, const std::string& identity, const Orbit& o) {
  if (!ok) throw DataIntegrityError(identity + " failed for " + o.to_string());
}

void check_embedding(const Orbit& o, const EnhancedDiagram& e, const ReductiveType& s) {
  const LieType& t = o.type();
  const auto& rs = root_system(t);
  std::set<int> used;
  for (int b : e.black) expect(used.insert(b).second, "enhanced diagram: distinct nodes", o);
  for (auto [i, j] : e.arcs) {
    expect(used.insert(i).second && used.insert(j).second, "enhanced diagram: disjoint arcs", o);
  }
  std::vector<int> nodes;
  for (int b : e.black) nodes.push_back(b - 1);
  expect(subdiagram_type(rs.cartan_matrix(), nodes) == s.semisimple(),
         "enhanced diagram: black type = semisimple part of sStar", o);
  expect(static_cast<int>(e.arcs.size()) == s.torus_dim(), "enhanced diagram: #arcs = dim centre of sStar", o);

  const auto& inv = rs.involution();
  std::set<int> black(e.black.begin(), e.black.end()), moved;
  for (int b : e.black) moved.insert(inv[b - 1] + 1);
  std::set<std::pair<int, int>> arcs, moved_arcs;
  for (auto [i, j] : e.arcs) {
    arcs.insert({std::min(i, j), std::max(i, j)});
    const int a = inv[i - 1] + 1, b = inv[j - 1] + 1;
    moved_arcs.insert({std::min(a, b), std::max(a, b)});
  }
  expect(black == moved && arcs == moved_arcs, "enhanced diagram: stable under the diagram involution", o);
}

}  // namespace

SecantReport build_secant_report(const Orbit& o) {
  require_nonzero(o, "the secant report");
  const LieType& t = o.type();
  SecantReport rep{o, 0, {}, 0, 0, {}, {}, 0, std::nullopt, false, {}, {}, {}, o};
  rep.dim_orbit = dim_orbit(o);
  rep.upsilon = t.is_exceptional() ? UpsilonClass{UpsilonClass::Kind::ExceptionalDirect, 0} : classify_upsilon(o);
  rep.s_star = generic_stabilizer(o);
  std::tie(rep.r, rep.c) = rank_complexity(o);
  rep.l_star = rep.s_star + ReductiveType::torus(rep.r);
  rep.dim_cs = dim_cs(o);
  rep.defective = rep.r < t.rank();
  if (rep.defective) rep.defect = 2 * rep.c + rep.r;
  rep.descriptor = cs_descriptor(o);
  rep.embedding = enhanced_diagram(o);
  rep.t_o_basis = t_O_basis(o);
  rep.tilde = tilde_orbit(o);

  expect(rep.dim_cs == 2 * rep.dim_orbit - 2 * rep.c - rep.r, "dim CS = 2 dim O - 2c - r", o);
  expect(rep.dim_cs == t.dim() - rep.s_star.dim(), "dim CS = dim g - dim sStar", o);
  expect(rep.r == t.rank() - rep.s_star.rank(), "r = rk g - rk sStar", o);
  expect(rep.r >= 1 && rep.c >= 0, "r >= 1 and c >= 0", o);
  expect(rep.descriptor.dimension() == rep.dim_cs, "descriptor dimension = dim CS", o);
  expect(rep.defective == (rep.descriptor.kind != VarietyDescriptor::Kind::FullAlgebra),
         "defective iff CS(O) != g", o);
  expect(dim_orbit(rep.tilde) == rep.dim_cs - rep.r, "dim tilde(O) = dim CS - r", o);
  expect(static_cast<int>(rep.t_o_basis.size()) == rep.r, "dim t_O = r", o);
  if (!rep.defective) expect(rep.c == rep.dim_orbit - t.dim_borel(), "c = dim O - dim b (non-defective)", o);
  if (is_spherical(o)) expect(rep.c == 0, "spherical orbits have c = 0", o);
  check_embedding(o, rep.embedding, rep.s_star);
  return rep;
}

}  // namespace nilsec
