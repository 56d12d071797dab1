#include "nilsec/partition.hpp"

#include "nilsec/errors.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace nilsec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw SizeError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw SizeError("partition parts must be weakly decreasing");
  }
  total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

namespace {
int parse_count(std::string_view s, const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v <= 0)
    throw ParseError("bad partition '" + text + "'");
  return v;
}
}  // namespace

Partition Partition::parse(const std::string& text) {
  std::string_view body(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unbalanced brackets in '" + text + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    auto caret = item.find('^');
    int part = parse_count(item.substr(0, caret), text);
    int times = caret == std::string_view::npos ? 1 : parse_count(item.substr(caret + 1), text);
    parts.insert(parts.end(), times, part);
    if (comma != std::string_view::npos && body.empty())
      throw ParseError("trailing comma in '" + text + "'");
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw ParseError("partition parts must be weakly decreasing: '" + text + "'");
  return Partition(std::move(parts));
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size();) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

Partition transpose(const Partition& p) {
  std::vector<int> t(p.largest(), 0);
  for (int part : p.parts())
    for (int k = 0; k < part; ++k) ++t[k];
  return Partition(std::move(t));
}

bool is_very_even(const Partition& p) {
  return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x % 2 == 0; });
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.total() != b.total())
    throw SizeError("dominance needs equal totals: " + std::to_string(a.total()) + " vs " +
                    std::to_string(b.total()));
  int sa = 0, sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    sa += i < a.length() ? a[i] : 0;
    sb += i < b.length() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

Partition erase_column(const Partition& p) {
  std::vector<int> out;
  for (int x : p.parts())
    if (x > 1) out.push_back(x - 1);
  return Partition(std::move(out));
}

bool is_admissible(PartitionKind kind, const Partition& p) {
  if (kind == PartitionKind::Linear) return true;
  const int bad_parity = kind == PartitionKind::Symplectic ? 1 : 0;
  for (int x : p.parts())
    if (x % 2 == bad_parity && p.multiplicity(x) % 2 != 0) return false;
  return true;
}

PartitionKind partition_kind(const LieType& type) {
  switch (type.series()) {
    case Series::A: return PartitionKind::Linear;
    case Series::C: return PartitionKind::Symplectic;
    case Series::B:
    case Series::D: return PartitionKind::Orthogonal;
    default: throw UnsupportedError(type.name() + " orbits are not labelled by partitions");
  }
}

bool is_admissible(const LieType& type, const Partition& p) {
  const auto kind = partition_kind(type);
  if (p.total() != type.N())
    throw SizeError("partition of " + std::to_string(p.total()) + " for " + type.name());
  return is_admissible(kind, p);
}

int matrix_rank(const LieType& type, const Partition& p) {
  if (p.total() != type.N())
    throw SizeError("partition of " + std::to_string(p.total()) + " for " + type.name());
  return type.N() - p.length();
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(left, cap); x >= 1; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> admissible_partitions(PartitionKind kind, int n) {
  auto all = partitions_of(n);
  std::erase_if(all, [&](const Partition& p) { return !is_admissible(kind, p); });
  return all;
}

long sum_transpose_squares(const Partition& p) {
  const Partition t = transpose(p);
  long s = 0;
  for (int x : t.parts()) s += static_cast<long>(x) * x;
  return s;
}

}  // namespace nilsec
