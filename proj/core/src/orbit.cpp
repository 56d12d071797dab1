#include "nilsec/orbit.hpp"

#include "nilsec/errors.hpp"
#include "nilsec/exceptional.hpp"

#include <algorithm>
#include <functional>

namespace nilsec {

Orbit Orbit::classical(const LieType& type, const Partition& p, std::optional<VeTag> tag) {
  if (!is_admissible(type, p))
    throw SizeError("partition [" + p.to_string() + "] is not admissible for " + type.name());
  const bool split = type.series() == Series::D && is_very_even(p);
  if (split && !tag)
    throw ParseError("very even partition [" + p.to_string() + "] in " + type.name() +
                     " needs a tag I or II");
  if (!split && tag)
    throw ParseError("tag I/II only applies to very even partitions in type D");
  return Orbit(type, p, tag, "");
}

Orbit Orbit::exceptional(const LieType& type, const std::string& label) {
  if (type.is_classical()) throw InvalidTypeError(type.name() + " is classical");
  if (!load_exceptional(type).contains(label))
    throw ParseError("unknown orbit label '" + label + "' for " + type.name());
  return Orbit(type, Partition(), std::nullopt, label);
}

Orbit Orbit::zero(const LieType& type) {
  if (type.is_classical()) return Orbit(type, Partition(std::vector<int>(type.N(), 1)), std::nullopt, "");
  return Orbit(type, Partition(), std::nullopt, "0");
}

Orbit Orbit::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("expected <algebra>:<label>, got '" + text + "'");
  const LieType type = LieType::parse(text.substr(0, colon));
  std::string label = text.substr(colon + 1);
  if (label == "0") return zero(type);
  if (type.is_exceptional()) return exceptional(type, label);

  if (label.empty() || label.front() != '[')
    throw ParseError("classical orbit label must look like [3,2,2], got '" + label + "'");
  const auto close = label.find(']');
  if (close == std::string::npos) throw ParseError("missing ']' in '" + text + "'");
  Partition p = Partition::parse(label.substr(0, close + 1));
  std::optional<VeTag> tag;
  const std::string rest = label.substr(close + 1);
  if (rest == ":I")
    tag = VeTag::I;
  else if (rest == ":II")
    tag = VeTag::II;
  else if (!rest.empty())
    throw ParseError("unexpected suffix '" + rest + "' in '" + text + "'");
  if (p.total() != type.N())
    throw SizeError("partition of " + std::to_string(p.total()) + " for " + type.name());
  return classical(type, p, tag);
}

bool Orbit::is_zero() const {
  if (is_classical()) return partition_.largest() <= 1;
  return label_ == "0";
}

const Partition& Orbit::partition() const {
  if (!is_classical()) throw UnsupportedError(to_string() + " has no partition");
  return partition_;
}

const std::string& Orbit::exceptional_label() const {
  if (is_classical()) throw UnsupportedError(to_string() + " is classical");
  return label_;
}

std::string Orbit::label() const {
  if (!is_classical()) return label_;
  std::string s = "[" + partition_.to_string() + "]";
  if (tag_) s += *tag_ == VeTag::I ? ":I" : ":II";
  return s;
}

std::string Orbit::to_string() const { return type_.name() + ":" + label(); }

std::vector<Orbit> enumerate_orbits(const LieType& type) {
  std::vector<Orbit> out;
  if (type.is_exceptional()) {
    for (const auto& rec : load_exceptional(type).orbits) out.push_back(Orbit::exceptional(type, rec.label));
    return out;
  }
  for (const auto& p : admissible_partitions(partition_kind(type), type.N())) {
    if (type.series() == Series::D && is_very_even(p)) {
      out.push_back(Orbit::classical(type, p, VeTag::I));
      out.push_back(Orbit::classical(type, p, VeTag::II));
    } else {
      out.push_back(Orbit::classical(type, p));
    }
  }
  return out;
}

int dim_from_partition(const LieType& type, const Partition& p) {
  if (!is_admissible(type, p))
    throw SizeError("partition [" + p.to_string() + "] is not admissible for " + type.name());
  const long sq = sum_transpose_squares(p);
  long odd = 0;
  for (int x : p.parts()) odd += x % 2;
  long centralizer = 0;
  switch (type.series()) {
    case Series::A: centralizer = sq - 1; break;
    case Series::C: centralizer = (sq + odd) / 2; break;
    default: centralizer = (sq - odd) / 2; break;
  }
  return type.dim() - static_cast<int>(centralizer);
}

DynkinMarks weighted_dynkin(const Orbit& o) {
  const LieType& type = o.type();
  if (type.is_exceptional()) return load_exceptional(type).find(o.exceptional_label()).marks;

  std::vector<int> h;
  for (int part : o.partition().parts())
    for (int v = part - 1; v >= 1 - part; v -= 2) h.push_back(v);
  std::sort(h.begin(), h.end(), std::greater<>());

  const int n = type.rank();
  DynkinMarks marks(n);
  if (type.series() == Series::A) {
    for (int i = 0; i < n; ++i) marks[i] = h[i] - h[i + 1];
  } else {
    for (int i = 0; i + 1 < n; ++i) marks[i] = h[i] - h[i + 1];
    switch (type.series()) {
      case Series::B: marks[n - 1] = h[n - 1]; break;
      case Series::C: marks[n - 1] = 2 * h[n - 1]; break;
      default: marks[n - 1] = h[n - 2] + h[n - 1]; break;
    }
    if (o.tag() == VeTag::II) std::swap(marks[n - 2], marks[n - 1]);
  }
  for (int m : marks)
    if (m < 0 || m > 2)
      throw DataIntegrityError("weighted Dynkin recipe produced mark " + std::to_string(m) +
                               " for " + o.to_string());
  return marks;
}

int dim_orbit(const Orbit& o) {
  const LieType& type = o.type();
  if (type.is_exceptional()) return load_exceptional(type).find(o.exceptional_label()).dim;
  const int by_partition = dim_from_partition(type, o.partition());
  const int by_roots = orbit_dim_from_marks(type, weighted_dynkin(o));
  if (by_partition != by_roots)
    throw DataIntegrityError("dim(partition formula) = dim(root counting) failed for " +
                             o.to_string() + ": " + std::to_string(by_partition) + " vs " +
                             std::to_string(by_roots));
  return by_partition;
}

bool is_spherical(const Orbit& o) {
  const LieType& type = o.type();
  if (type.is_exceptional()) return load_exceptional(type).find(o.exceptional_label()).spherical;
  const auto& parts = o.partition().parts();
  const int l1 = parts.empty() ? 0 : parts[0];
  const int l2 = parts.size() > 1 ? parts[1] : 0;
  if (type.series() == Series::B || type.series() == Series::D) return l1 + l2 <= 5;
  return l1 <= 2;
}

bool closure_leq(const Orbit& a, const Orbit& b) {
  if (a.type() != b.type()) throw InvalidTypeError("closure order across different algebras");
  if (a.type().is_exceptional())
    throw UnsupportedError("closure order for exceptional algebras is not provided");
  if (a == b) return true;
  if (a.partition() == b.partition()) return false;  // the two very even orbits
  return dominance_leq(a.partition(), b.partition());
}

HasseDiagram hasse(const LieType& type) {
  if (type.is_exceptional())
    throw UnsupportedError("closure order for exceptional algebras is not provided");
  HasseDiagram d;
  d.nodes = enumerate_orbits(type);
  const int n = static_cast<int>(d.nodes.size());
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lt[i][j] = i != j && closure_leq(d.nodes[i], d.nodes[j]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!lt[i][j]) continue;
      bool cover = true;
      for (int k = 0; k < n && cover; ++k) cover = !(lt[i][k] && lt[k][j]);
      if (cover) d.covers.emplace_back(i, j);
    }
  return d;
}

namespace {
Partition parts_of(std::initializer_list<std::pair<int, int>> blocks) {
  std::vector<int> v;
  for (auto [part, times] : blocks) v.insert(v.end(), std::max(times, 0), part);
  return Partition::from_unsorted(std::move(v));
}
}  // namespace

Orbit max_spherical(const LieType& type) {
  if (type.is_exceptional()) return Orbit::exceptional(type, load_exceptional(type).max_spherical);
  const int N = type.N();
  const int n = type.rank();
  switch (type.series()) {
    case Series::A: return Orbit::classical(type, parts_of({{2, N / 2}, {1, N % 2}}));
    case Series::C: return Orbit::classical(type, parts_of({{2, n}}));
    case Series::B:
      if (n % 2 == 1) return Orbit::classical(type, parts_of({{3, 1}, {2, n - 1}}));
      return Orbit::classical(type, parts_of({{3, 1}, {2, n - 2}, {1, 2}}));
    default:
      if (n % 2 == 0) return Orbit::classical(type, parts_of({{3, 1}, {2, n - 2}, {1, 1}}));
      return Orbit::classical(type, parts_of({{3, 1}, {2, n - 3}, {1, 3}}));
  }
}

Orbit minimal_orbit(const LieType& type) {
  if (type.is_exceptional()) return Orbit::exceptional(type, "A1");
  const int N = type.N();
  if (type.series() == Series::B || type.series() == Series::D)
    return Orbit::classical(type, parts_of({{2, 2}, {1, N - 4}}));
  return Orbit::classical(type, parts_of({{2, 1}, {1, N - 2}}));
}

Orbit regular_orbit(const LieType& type) {
  if (type.is_exceptional()) return Orbit::exceptional(type, type.cartan_name());
  const int N = type.N();
  if (type.series() == Series::D) return Orbit::classical(type, parts_of({{N - 1, 1}, {1, 1}}));
  return Orbit::classical(type, parts_of({{N, 1}}));
}

}  // namespace nilsec
