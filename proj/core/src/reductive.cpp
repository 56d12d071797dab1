#include "nilsec/reductive.hpp"

#include "nilsec/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace nilsec {

namespace {

int series_order(char s) {
  static const std::string order = "EFGDCBA";
  return static_cast<int>(order.find(s));
}

bool factor_before(const SimpleFactor& a, const SimpleFactor& b) {
  if (a.series != b.series) return series_order(a.series) < series_order(b.series);
  return a.rank > b.rank;
}

SimpleFactor canonical(SimpleFactor f) {
  if (f.series == 'C' && f.rank == 2) f.series = 'B';
  return f;
}

int parse_int(std::string_view s, const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
    throw ParseError("bad reductive type '" + text + "'");
  return v;
}

}  // namespace

int dim_simple(const SimpleFactor& f) {
  const int n = f.rank;
  switch (f.series) {
    case 'A': return n * (n + 2);
    case 'B':
    case 'C': return n * (2 * n + 1);
    case 'D': return n * (2 * n - 1);
    case 'E': return n == 6 ? 78 : n == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
    default: return 0;
  }
}

void ReductiveType::add(SimpleFactor f) {
  if (f.rank <= 0) return;
  switch (f.series) {
    case 'B':
    case 'C':
      if (f.rank == 1) f.series = 'A';
      break;
    case 'D':
      if (f.rank == 1) {
        ++torus_;
        return;
      }
      if (f.rank == 2) {
        factors_.push_back({'A', 1});
        factors_.push_back({'A', 1});
        return;
      }
      if (f.rank == 3) f.series = 'A';
      break;
    case 'A':
    case 'E':
    case 'F':
    case 'G': break;
    default: throw InvalidTypeError(std::string("unknown series '") + f.series + "'");
  }
  factors_.push_back(f);
}

void ReductiveType::sort() { std::stable_sort(factors_.begin(), factors_.end(), factor_before); }

ReductiveType ReductiveType::torus(int dim) {
  ReductiveType t;
  t.torus_ = std::max(dim, 0);
  return t;
}

ReductiveType ReductiveType::simple(char series, int rank) {
  ReductiveType t;
  t.add({series, rank});
  t.sort();
  return t;
}

ReductiveType ReductiveType::gl(int k) {
  if (k <= 0) return zero();
  return simple('A', k - 1) + torus(1);
}

ReductiveType ReductiveType::sp(int N) { return simple('C', N / 2); }

ReductiveType ReductiveType::so(int N) {
  if (N <= 1) return zero();
  return N % 2 ? simple('B', (N - 1) / 2) : simple('D', N / 2);
}

ReductiveType ReductiveType::parse(const std::string& text) {
  ReductiveType out;
  if (text == "0") return out;
  std::string_view rest(text);
  while (true) {
    auto plus = rest.find('+');
    std::string term(rest.substr(0, plus));
    term.erase(std::remove_if(term.begin(), term.end(), ::isspace), term.end());
    if (term.empty()) throw ParseError("bad reductive type '" + text + "'");
    int times = 1;
    std::string body = term;
    if (term.front() == '(') {
      auto close = term.find(')');
      if (close == std::string::npos || close + 2 > term.size() || term[close + 1] != '^')
        throw ParseError("bad reductive type '" + text + "'");
      body = term.substr(1, close - 1);
      times = parse_int(std::string_view(term).substr(close + 2), text);
    } else {
      std::size_t k = 0;
      while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
      if (k > 0) {
        times = parse_int(std::string_view(term).substr(0, k), text);
        body = term.substr(k);
      }
    }
    if (body.size() < 2) throw ParseError("bad reductive type '" + text + "'");
    const char s = body.front();
    const int rank = parse_int(std::string_view(body).substr(1), text);
    for (int i = 0; i < times; ++i) {
      if (s == 't' || s == 'T')
        out.torus_ += rank;
      else if (std::string("ABCDEFG").find(s) != std::string::npos && rank > 0)
        out = out + ReductiveType::simple(s, rank);
      else
        throw ParseError("bad reductive type '" + text + "'");
    }
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return out;
}

int ReductiveType::semisimple_rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

int ReductiveType::dim() const {
  int d = torus_;
  for (const auto& f : factors_) d += dim_simple(f);
  return d;
}

ReductiveType ReductiveType::semisimple() const {
  ReductiveType t = *this;
  t.torus_ = 0;
  return t;
}

std::string ReductiveType::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += factors_[i].series + std::to_string(factors_[i].rank);
    i = j;
  }
  if (torus_ > 0) {
    if (!out.empty()) out += '+';
    out += "t" + std::to_string(torus_);
  }
  return out;
}

ReductiveType operator+(const ReductiveType& a, const ReductiveType& b) {
  ReductiveType out = a;
  out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
  out.torus_ += b.torus_;
  return out;
}

bool operator==(const ReductiveType& a, const ReductiveType& b) {
  if (a.torus_ != b.torus_ || a.factors_.size() != b.factors_.size()) return false;
  auto key = [](const ReductiveType& t) {
    std::vector<SimpleFactor> v;
    for (const auto& f : t.factors_) v.push_back(canonical(f));
    std::sort(v.begin(), v.end(), factor_before);
    return v;
  };
  return key(a) == key(b);
}

ReductiveType subdiagram_type(const std::vector<std::vector<int>>& cartan,
                              const std::vector<int>& nodes) {
  ReductiveType out;
  std::map<int, bool> seen;
  for (int v : nodes) seen[v] = false;
  for (int start : nodes) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int w : nodes)
        if (!seen[w] && cartan[comp[k]][w] != 0) {
          seen[w] = true;
          comp.push_back(w);
        }
    const int n = static_cast<int>(comp.size());
    int branch = -1, multi = 0, triple = 0;
    std::map<int, int> degree;
    for (int u : comp) {
      for (int w : comp) {
        if (u == w || cartan[u][w] == 0) continue;
        ++degree[u];
        if (cartan[u][w] * cartan[w][u] == 2) ++multi;
        if (cartan[u][w] * cartan[w][u] == 3) ++triple;
      }
      if (degree[u] == 3) branch = u;
    }
    if (triple) {
      out = out + ReductiveType::simple('G', 2);
    } else if (multi) {
      // multi counts the double edge twice; locate it and decide which end is short.
      int end = -1, lengths_long_short = 0;
      for (int u : comp)
        for (int w : comp)
          if (u != w && cartan[u][w] == -2) {
            // cartan[u][w] = -2 means u is the short root of the pair.
            if (degree[u] == 1 && n > 2) end = u;
            if (degree[w] == 1 && n > 2) end = w, lengths_long_short = 1;
          }
      if (n == 4 && end < 0) {
        out = out + ReductiveType::simple('F', 4);
      } else if (n == 2) {
        out = out + ReductiveType::simple('B', 2);
      } else {
        // end is the terminal node of the double edge; B if it is short.
        out = out + ReductiveType::simple(lengths_long_short ? 'C' : 'B', n);
      }
    } else if (branch < 0) {
      out = out + ReductiveType::simple('A', n);
    } else {
      // legs from the branch node
      std::vector<int> legs;
      for (int w : comp) {
        if (w == branch || cartan[branch][w] == 0) continue;
        int len = 1, prev = branch, cur = w;
        while (true) {
          int nxt = -1;
          for (int x : comp)
            if (x != prev && x != cur && cartan[cur][x] != 0) nxt = x;
          if (nxt < 0) break;
          prev = cur;
          cur = nxt;
          ++len;
        }
        legs.push_back(len);
      }
      std::sort(legs.begin(), legs.end());
      if (legs[0] == 1 && legs[1] == 1)
        out = out + ReductiveType::simple('D', n);
      else
        out = out + ReductiveType::simple('E', n);
    }
  }
  return out;
}

}  // namespace nilsec
