#pragma once

#include <vector>

#include "legknot/matrix.hpp"

namespace legknot {

// Determinant by fraction-free (Bareiss) elimination: every intermediate
// value is an exact integer, the quotients in the update rule are exact
// divisions. det of the 0x0 matrix is 1.
Int det(const IntMatrix& a);

// Exact solution of a*x = b over the rationals (Gaussian elimination with
// a nonzero pivot per column). Throws SingularMatrixError when a is
// singular.
std::vector<Rat> solve(const IntMatrix& a, const std::vector<Rat>& b);

// Smith normal form: left * a * right = diag(d1,...,dr,0,...,0) with
// d1 | d2 | ... | dr, di > 0, and left, right unimodular (|det| = 1).
struct SNFResult {
    std::vector<Int> diagonal;  // length min(rows, cols)
    IntMatrix left, right;
};
SNFResult smith_normal_form(const IntMatrix& a);

int rank(const IntMatrix& a);

// Signature of a symmetric matrix: exact congruence (inertia) reduction.
// Zero diagonals with a nonzero off-diagonal entry are cleared as a
// hyperbolic pair, which contributes 0.
int signature(const IntMatrix& a);

}  // namespace legknot
