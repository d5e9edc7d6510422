#pragma once

#include "normsurf/rational.hpp"

#include <vector>

namespace normsurf::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<std::vector<Rational>>;

bool is_square(const Mat& a);
bool is_symmetric(const Mat& a);

// x^T a y for a square matrix a (callers pass the Gram matrix).
Rational bilinear(const Mat& a, const Vec& x, const Vec& y);

// Exact determinant by Gaussian elimination with row pivoting.
Rational det(Mat a);

// Solves a x = b; throws std::runtime_error when a is singular.
Vec solve(Mat a, Vec b);

struct Signature {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

// Inertia of a symmetric matrix by congruence (symmetric Gaussian
// elimination over Q) — no eigenvalues, no rounding.
Signature signature(Mat a);

// Leading principal minors of -a are all positive. This is the exact
// Sylvester test used on exceptional blocks.
bool is_negative_definite(const Mat& a);

}  // namespace normsurf::linalg
