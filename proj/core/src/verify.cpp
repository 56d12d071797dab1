#include "nilsec/verify.hpp"

#include "nilsec/errors.hpp"
#include "nilsec/exceptional.hpp"
#include "nilsec/orbit.hpp"
#include "nilsec/secant.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace nilsec {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"dims",  "identities", "richardson", "parity",
                                                 "ranks", "iso",        "table1"};
  return names;
}

std::vector<LieType> default_verify_types() {
  std::vector<LieType> out;
  for (int N = 4; N <= 9; ++N) out.push_back(LieType::sl(N));
  for (int n = 2; n <= 8; ++n) out.push_back(LieType::sp(2 * n));
  for (int N = 7; N <= 17; ++N) out.push_back(LieType::so(N));
  for (Series s : {Series::E6, Series::E7, Series::E8, Series::F4, Series::G2})
    out.push_back(LieType(s, s == Series::E6 ? 6 : s == Series::E7 ? 7 : s == Series::E8 ? 8 : s == Series::F4 ? 4 : 2));
  return out;
}

namespace {

std::string set_string(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

// Runs fn over every nonzero orbit and folds the outcomes into one check.
CheckResult over_orbits(const std::string& suite, const LieType& type, const std::string& name,
                        bool include_zero, const std::function<std::string(const Orbit&)>& fn) {
  CheckResult res{suite, type.name(), name, true, ""};
  int count = 0;
  for (const auto& o : enumerate_orbits(type)) {
    if (o.is_zero() && !include_zero) continue;
    ++count;
    std::string problem;
    try {
      problem = fn(o);
    } catch (const Error& e) {
      problem = e.what();
    }
    if (!problem.empty() && res.passed) {
      res.passed = false;
      res.detail = o.to_string() + ": " + problem;
    }
  }
  if (res.passed) res.detail = std::to_string(count) + " orbits";
  return res;
}

std::vector<CheckResult> dims(const LieType& type) {
  return {over_orbits("dims", type, "partition formula = root counting", true, [&](const Orbit& o) {
    const int d = dim_orbit(o);  // throws on a mismatch
    if (type.is_classical()) {
      const int by_roots = orbit_dim_from_marks(type, weighted_dynkin(o));
      if (by_roots != dim_from_partition(type, o.partition())) return std::string("mismatch");
    }
    return d % 2 == 0 ? std::string() : std::string("odd dimension");
  })};
}

std::vector<CheckResult> identities(const LieType& type) {
  std::vector<CheckResult> out;
  out.push_back(over_orbits("identities", type, "secant identity chain", false, [](const Orbit& o) {
    const auto rep = build_secant_report(o);  // checks every identity
    (void)rep;
    return std::string();
  }));

  if (type.rank() > 1) {
    CheckResult c{"identities", type.name(), "defect of O_min = 1", false, ""};
    try {
      const auto d = secant_defect(minimal_orbit(type));
      c.passed = d && *d == 1;
      c.detail = d ? "defect " + std::to_string(*d) : "not defective";
    } catch (const Error& e) {
      c.detail = e.what();
    }
    out.push_back(c);
  }

  if (type.is_classical()) {
    CheckResult c{"identities", type.name(), "maximal defective orbits (brute force)", false, ""};
    try {
      std::vector<Orbit> defective;
      for (const auto& o : enumerate_orbits(type))
        if (is_defective(o)) defective.push_back(o);
      std::set<Orbit> maxima;
      for (const auto& a : defective) {
        bool top = true;
        for (const auto& b : defective)
          if (!(a == b) && closure_leq(a, b)) top = false;
        if (top) maxima.insert(a);
      }
      auto listed = maximal_defective(type);
      c.passed = maxima == std::set<Orbit>(listed.begin(), listed.end());
      std::string names;
      for (const auto& o : maxima) names += (names.empty() ? "" : " ") + o.label();
      c.detail = "maxima: " + names;
    } catch (const Error& e) {
      c.detail = e.what();
    }
    out.push_back(c);

    // closed forms for the defect of the maximal orbit in each J class
    CheckResult g{"identities", type.name(), "defect growth formulas", true, ""};
    int checked = 0;
    try {
      for (const auto& cls : j_classes(type)) {
        const auto members = upsilon_members(type, cls);
        const Orbit top = *std::max_element(members.begin(), members.end(), [](const Orbit& a, const Orbit& b) {
          return dim_orbit(a) < dim_orbit(b);
        });
        const int k = cls.param;
        long expected = 0;
        if (type.series() == Series::A) {
          expected = static_cast<long>(k) * k + static_cast<long>(k - 1) * (k - 1);
        } else if (type.series() == Series::C) {
          const long m = (k + 1) / 2;
          expected = k % 2 ? 4 * m * m - 6 * m + 3 : 4 * m * m - 2 * m;
        } else {
          expected = 4L * k * k - 2L * k;
        }
        const auto d = secant_defect(top);
        ++checked;
        if (!d || *d != expected) {
          g.passed = false;
          g.detail = top.to_string() + ": defect " + (d ? std::to_string(*d) : "none") + ", expected " +
                     std::to_string(expected);
          break;
        }
      }
    } catch (const Error& e) {
      g.passed = false;
      g.detail = e.what();
    }
    if (g.passed) g.detail = std::to_string(checked) + " classes";
    out.push_back(g);
  }
  return out;
}

std::vector<CheckResult> richardson(const LieType& type) {
  return {over_orbits("richardson", type, "dim tilde(O) = dim CS - r", false, [&](const Orbit& o) {
    const Orbit t = tilde_orbit(o);
    const int dt = type.is_classical() ? dim_from_partition(type, t.partition()) : dim_orbit(t);
    const auto [r, c] = rank_complexity(o);
    (void)c;
    if (dt != dim_cs(o) - r)
      return t.to_string() + " has dim " + std::to_string(dt) + ", expected " + std::to_string(dim_cs(o) - r);
    return std::string();
  })};
}

std::vector<CheckResult> parity(const LieType& type) {
  const bool d_odd = type.series() == Series::D && type.rank() % 2 == 1;
  const bool always_even = type.series() != Series::A && !d_odd;
  if (!always_even && !d_odd) return {};
  return {over_orbits("parity", type, d_odd ? "c even iff defective" : "c even", false, [&](const Orbit& o) {
    const int c = rank_complexity(o).second;
    const bool even = c % 2 == 0;
    if (always_even && !even) return "c = " + std::to_string(c);
    if (d_odd && even != is_defective(o)) return "c = " + std::to_string(c);
    return std::string();
  })};
}

std::vector<CheckResult> ranks(const LieType& type) {
  if (type.is_exceptional()) return {};
  CheckResult c{"ranks", type.name(), "achieved ranks avoid exactly the forbidden set", false, ""};
  try {
    std::set<int> achieved;
    for (const auto& o : enumerate_orbits(type))
      if (!o.is_zero()) achieved.insert(rank_complexity(o).first);
    const auto forbidden = forbidden_ranks(type);
    std::set<int> expected;
    for (int v = 1; v <= type.rank(); ++v)
      if (!forbidden.count(v)) expected.insert(v);
    c.passed = achieved == expected;
    c.detail = "forbidden " + set_string(forbidden) + ", achieved " + set_string(achieved);
  } catch (const Error& e) {
    c.detail = e.what();
  }
  return {c};
}

std::vector<CheckResult> iso(const LieType& type) {
  if (type.is_exceptional()) return {};
  std::vector<CheckResult> out;
  for (const auto& cls : j_classes(type)) {
    CheckResult c{"iso", type.name(), "column erasure on " + cls.to_string(), false, ""};
    try {
      const auto m = upsilon_isomorphism(type, cls);
      c.passed = true;
      c.detail = std::to_string(m.map.size()) + " orbits onto " + m.target_name;
    } catch (const Error& e) {
      c.detail = e.what();
    }
    out.push_back(c);
  }
  return out;
}

std::vector<CheckResult> table1_suite(const LieType& type) {
  if (type.is_classical()) return {};
  std::vector<CheckResult> out;
  for (const auto& row : validate_against_table1())
    if (row.algebra == type.cartan_name())
      out.push_back({"table1", type.name(), row.label, row.passed, row.detail});
  return out;
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const LieType& type) {
  try {
    if (suite == "dims") return dims(type);
    if (suite == "identities") return identities(type);
    if (suite == "richardson") return richardson(type);
    if (suite == "parity") return parity(type);
    if (suite == "ranks") return ranks(type);
    if (suite == "iso") return iso(type);
    if (suite == "table1") return table1_suite(type);
  } catch (const Error& e) {
    return {{suite, type.name(), "suite aborted", false, e.what()}};
  }
  throw UnsupportedError("unknown suite '" + suite + "'");
}

}  // namespace nilsec
