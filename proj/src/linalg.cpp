#include "normsurf/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace normsurf::linalg {

bool is_square(const Mat& a) {
    for (const auto& row : a)
        if (row.size() != a.size())
            return false;
    return true;
}

bool is_symmetric(const Mat& a) {
    if (!is_square(a))
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i][j] != a[j][i])
                return false;
    return true;
}

Rational bilinear(const Mat& a, const Vec& x, const Vec& y) {
    const std::size_t n = a.size();
    if (x.size() != n || y.size() != n)
        throw std::invalid_argument("bilinear: dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        Rational row = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (y[j] != 0)
                row += a[i][j] * y[j];
        acc += x[i] * row;
    }
    return acc;
}

Rational det(Mat a) {
    const std::size_t n = a.size();
    if (!is_square(a))
        throw std::invalid_argument("det: matrix not square");
    Rational result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            result = -result;
        }
        result *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0)
                continue;
            const Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j)
                a[row][j] -= f * a[col][j];
        }
    }
    return result;
}

Vec solve(Mat a, Vec b) {
    const std::size_t n = a.size();
    if (!is_square(a) || b.size() != n)
        throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::runtime_error("solve: singular matrix");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        const Rational inv_p = a[col][col];
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0)
                continue;
            const Rational f = a[row][col] / inv_p;
            for (std::size_t j = col; j < n; ++j)
                a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / a[i][i];
    return x;
}

Signature signature(Mat a) {
    const std::size_t n = a.size();
    if (!is_symmetric(a))
        throw std::invalid_argument("signature: matrix not symmetric");
    Signature sig;
    for (std::size_t k = 0; k < n; ++k) {
        // After k steps rows/columns >= k vanish on indices < k, so only the
        // trailing block matters.
        if (a[k][k] == 0) {
            std::size_t swap_j = n;
            std::size_t mix_j = n;
            for (std::size_t j = k + 1; j < n; ++j) {
                if (a[j][j] != 0 && swap_j == n)
                    swap_j = j;
                if (a[k][j] != 0 && mix_j == n)
                    mix_j = j;
            }
            if (swap_j != n) {
                std::swap(a[k], a[swap_j]);
                for (std::size_t i = 0; i < n; ++i)
                    std::swap(a[i][k], a[i][swap_j]);
            } else if (mix_j != n) {
                // Both diagonal entries vanish; adding row+column j makes the
                // pivot 2*a[k][j] != 0.
                for (std::size_t i = 0; i < n; ++i)
                    a[k][i] += a[mix_j][i];
                for (std::size_t i = 0; i < n; ++i)
                    a[i][k] += a[i][mix_j];
            } else {
                ++sig.zero;
                continue;
            }
        }
        const Rational pivot = a[k][k];
        if (pivot > 0)
            ++sig.positive;
        else
            ++sig.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0)
                continue;
            const Rational f = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
            for (std::size_t j = k; j < n; ++j)
                a[j][i] = a[i][j];
        }
    }
    return sig;
}

bool is_negative_definite(const Mat& a) {
    const std::size_t n = a.size();
    if (!is_square(a))
        return false;
    for (std::size_t k = 1; k <= n; ++k) {
        Mat minor(k, Vec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor[i][j] = -a[i][j];
        if (det(std::move(minor)) <= 0)
            return false;
    }
    return true;
}

}  // namespace normsurf::linalg
