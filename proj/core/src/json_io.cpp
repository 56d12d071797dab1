#include "nilsec/json_io.hpp"

#include "nilsec/errors.hpp"

namespace nilsec {

using nlohmann::json;

json orbit_record(const Orbit& o) {
  return {{"algebra", o.type().name()},
          {"label", o.label()},
          {"dim", dim_orbit(o)},
          {"marks", weighted_dynkin(o)},
          {"spherical", is_spherical(o)}};
}

json to_json(const VarietyDescriptor& d) {
  return {{"kind", VarietyDescriptor::kind_name(d.kind)},
          {"dim", d.dimension()},
          {"ambientDim", d.ambient_dim},
          {"rankBound", d.rank_bound},
          {"N", d.N},
          {"equations", d.equations},
          {"levi", d.levi.to_string()},
          {"torus", d.torus},
          {"text", d.to_string()}};
}

namespace {

VarietyDescriptor descriptor_fields(const json& j) {
  using K = VarietyDescriptor::Kind;
  VarietyDescriptor d;
  const std::string kind = j.at("kind").get<std::string>();
  bool known = false;
  for (K k : {K::FullAlgebra, K::DetTraceless, K::DetSymplecticSym, K::DetSkew, K::SphericalSOSlice,
              K::E6CompleteIntersection, K::DixmierClosure})
    if (VarietyDescriptor::kind_name(k) == kind) {
      d.kind = k;
      known = true;
    }
  if (!known) throw ParseError("unknown descriptor kind '" + kind + "'");
  d.ambient_dim = j.at("ambientDim").get<int>();
  d.rank_bound = j.at("rankBound").get<int>();
  d.N = j.at("N").get<int>();
  d.equations = j.at("equations").get<std::vector<int>>();
  d.levi = ReductiveType::parse(j.at("levi").get<std::string>());
  d.torus = j.at("torus").get<int>();
  return d;
}

}  // namespace

VarietyDescriptor descriptor_from_json(const json& j) {
  try {
    return descriptor_fields(j);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed descriptor JSON: ") + e.what());
  }
}

json to_json(const SecantReport& r) {
  json basis = json::array();
  for (const auto& v : r.t_o_basis) {
    json row = json::array();
    for (const auto& q : v.coords) row.push_back(to_string(q));
    basis.push_back(row);
  }
  const bool eps = natural_basis(r.orbit.type()) == CartanVector::Basis::Epsilon;
  json out = orbit_record(r.orbit);
  out["orbit"] = r.orbit.to_string();
  out["upsilon"] = r.upsilon.to_string();
  out["r"] = r.r;
  out["c"] = r.c;
  out["sStar"] = r.s_star.to_string();
  out["lStar"] = r.l_star.to_string();
  out["dimCS"] = r.dim_cs;
  out["defect"] = r.defect ? json(*r.defect) : json(nullptr);
  out["defective"] = r.defective;
  out["descriptor"] = to_json(r.descriptor);
  out["embedding"] = {{"black", r.embedding.black}, {"arcs", r.embedding.arcs}};
  out["tOBasis"] = {{"basis", eps ? "epsilon" : "coroot"}, {"vectors", basis}};
  out["tilde"] = r.tilde.to_string();
  return out;
}

SecantReport report_from_json(const json& j) {
  try {
    const Orbit orbit = Orbit::parse(j.at("orbit").get<std::string>());
    SecantReport r{orbit, 0, {}, 0, 0, {}, {}, 0, std::nullopt, false, {}, {}, {}, orbit};
    r.dim_orbit = j.at("dim").get<int>();
    r.upsilon = UpsilonClass::parse(j.at("upsilon").get<std::string>());
    r.r = j.at("r").get<int>();
    r.c = j.at("c").get<int>();
    r.s_star = ReductiveType::parse(j.at("sStar").get<std::string>());
    r.l_star = ReductiveType::parse(j.at("lStar").get<std::string>());
    r.dim_cs = j.at("dimCS").get<int>();
    if (!j.at("defect").is_null()) r.defect = j.at("defect").get<int>();
    r.defective = j.at("defective").get<bool>();
    r.descriptor = descriptor_from_json(j.at("descriptor"));
    r.embedding.black = j.at("embedding").at("black").get<std::vector<int>>();
    r.embedding.arcs = j.at("embedding").at("arcs").get<std::vector<std::pair<int, int>>>();
    const auto& tb = j.at("tOBasis");
    const std::string basis_name = tb.at("basis").get<std::string>();
    if (basis_name != "epsilon" && basis_name != "coroot") throw ParseError("unknown basis '" + basis_name + "'");
    const auto basis = basis_name == "epsilon" ? CartanVector::Basis::Epsilon : CartanVector::Basis::Coroot;
    for (const auto& row : tb.at("vectors")) {
      CartanVector v{basis, {}};
      for (const auto& q : row) v.coords.push_back(parse_rational(q.get<std::string>()));
      r.t_o_basis.push_back(std::move(v));
    }
    r.tilde = Orbit::parse(j.at("tilde").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report JSON: ") + e.what());
  }
}

}  // namespace nilsec
