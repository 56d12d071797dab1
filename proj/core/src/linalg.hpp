#pragma once

// Exact Gaussian elimination over Q, internal to the library.

#include <vector>

#include "nilsec/rational.hpp"

namespace nilsec::detail {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, int cols);

int matrix_rank(Matrix m, int cols);

/// Basis of {x : m x = 0}, one vector per free column (that entry set to 1).
std::vector<std::vector<Rational>> nullspace(Matrix m, int cols);

/// Scale to coprime integers with the first nonzero entry positive.
std::vector<Rational> primitive(std::vector<Rational> v);

}  // namespace nilsec::detail
