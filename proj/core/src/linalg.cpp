#include "signedpinv/linalg.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace signedpinv {

namespace {

// Bareiss elimination over the rationals: the two-term update divides by the
// previous pivot, which is always exact and keeps intermediate entries from
// swelling. Returns the number of pivots; when `want_det` the caller gets
// det(m) through `det_out` (square input assumed by that caller).
std::size_t bareiss(RatMatrix m, bool want_det, Rational* det_out) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Rational prev(1);
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) {
            if (want_det) {
                *det_out = 0;
                return r;
            }
            continue;
        }
        if (pivot != r) {
            m.swap_rows(pivot, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(r, c) - m.at(i, c) * m.at(r, j)) / prev;
            m.at(i, c) = 0;
        }
        prev = m.at(r, c);
        ++r;
    }
    if (want_det) {
        // After full elimination of a square matrix the last pivot equals det
        // up to the row-swap sign.
        *det_out = (r == rows) ? (sign < 0 ? -prev : prev) : Rational(0);
    }
    return r;
}

// Reduced row echelon form in place; returns the pivot column indices.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        m.swap_rows(pivot, r);
        const Rational inv_p = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv_p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            const Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& m) { return bareiss(m, false, nullptr); }

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    Rational d;
    bareiss(m, true, &d);
    return d;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n || (n != 0 && pivots.back() != n - 1))
        throw std::invalid_argument("inverse of a singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

RankFactorization rank_factorization(const RatMatrix& m) {
    RatMatrix reduced = m;
    const auto pivots = rref(reduced);
    const std::size_t r = pivots.size();
    RankFactorization out{RatMatrix(m.rows(), r), RatMatrix(r, m.cols())};
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < m.rows(); ++i) out.f.at(i, k) = m.at(i, pivots[k]);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < m.cols(); ++j) out.g.at(k, j) = reduced.at(k, j);
    return out;
}

RatMatrix pinv_oracle(const RatMatrix& m) {
    const auto [f, g] = rank_factorization(m);
    if (f.cols() == 0) return RatMatrix(m.cols(), m.rows());
    const RatMatrix ft = f.transpose(), gt = g.transpose();
    return gt * inverse(g * gt) * inverse(ft * f) * ft;
}

std::array<bool, 4> penrose_verify(const RatMatrix& a, const RatMatrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw std::invalid_argument("candidate pseudoinverse has the wrong shape");
    const RatMatrix ax = a * x, xa = x * a;
    return {ax * a == a, xa * x == x, ax.is_symmetric(), xa.is_symmetric()};
}

}  // namespace signedpinv
