#pragma once

#include <string>

namespace nilsec {

/// Matrix varieties cut out by a rank bound.
struct DetKind {
  enum class Kind {
    Generic,    // N x N matrices of rank <= r
    Traceless,  // the same intersected with sl_N
    Skew,       // skew-symmetric N x N of rank <= r (r even)
    SymAsSp     // symmetric 2n x 2n of rank <= r, i.e. inside sp_2n
  };
  Kind kind;
  int r;  // rank bound
  int N;  // matrix size

  std::string to_string() const;
};

/// Throws SizeError unless 0 <= r <= N, N >= 1, and r even for Skew.
long dim_determinantal(const DetKind& k);

}  // namespace nilsec
