#include "nilsec/detvar.hpp"

#include "nilsec/errors.hpp"

namespace nilsec {

std::string DetKind::to_string() const {
  const char* name = "";
  switch (kind) {
    case Kind::Generic: name = "Generic"; break;
    case Kind::Traceless: name = "Traceless"; break;
    case Kind::Skew: name = "Skew"; break;
    case Kind::SymAsSp: name = "SymAsSp"; break;
  }
  return std::string(name) + "(" + std::to_string(r) + "," + std::to_string(N) + ")";
}

long dim_determinantal(const DetKind& k) {
  if (k.N < 1 || k.r < 0 || k.r > k.N)
    throw SizeError("rank bound out of range in " + k.to_string());
  const long r = k.r, N = k.N;
  switch (k.kind) {
    case DetKind::Kind::Generic: return r * (2 * N - r);
    case DetKind::Kind::Traceless: return r == 0 ? 0 : r * (2 * N - r) - 1;
    case DetKind::Kind::Skew: {
      if (r % 2) throw SizeError("skew rank bound must be even in " + k.to_string());
      const long p = r / 2;
      return p * (2 * N - 2 * p - 1);
    }
    case DetKind::Kind::SymAsSp:
      if (N % 2) throw SizeError("symplectic size must be even in " + k.to_string());
      return r * N - r * (r - 1) / 2;
  }
  return 0;
}

}  // namespace nilsec
