#pragma once

#include <cstddef>
#include <vector>

#include "qm/matrix.hpp"
#include "qm/polynomial.hpp"
#include "qm/rational.hpp"

namespace qm {

using RatMatrix = Matrix<Rational>;
using RatVector = std::vector<Rational>;

std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column, computed by fraction-free
/// (Bareiss) elimination on the integer-scaled matrix followed by back substitution.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

Rational determinant(RatMatrix m);

/// Throws SingularGram if m is singular.
RatMatrix inverse(const RatMatrix& m);

bool is_symmetric(const RatMatrix& m);

/// Determinant of a square matrix of polynomials by fraction-free elimination.
Polynomial polynomial_determinant(std::vector<std::vector<Polynomial>> m);

}  // namespace qm
