#pragma once

#include <array>
#include <cstddef>

#include "signedpinv/rat_matrix.hpp"

namespace signedpinv {

// Exact rank via fraction-free (Bareiss) elimination.
std::size_t rank(const RatMatrix& m);

// Exact determinant via Bareiss elimination; throws std::invalid_argument
// if m is not square. det of the 0x0 matrix is 1.
Rational det(const RatMatrix& m);

// Exact inverse of a square matrix by Gauss-Jordan elimination; throws
// std::invalid_argument if m is singular or not square.
RatMatrix inverse(const RatMatrix& m);

// m = f * g with f of full column rank r and g of full row rank r,
// r = rank(m). For the zero (or empty) matrix both factors are empty.
struct RankFactorization {
    RatMatrix f;  // rows(m) x r, pivot columns of m
    RatMatrix g;  // r x cols(m), nonzero rows of the reduced row echelon form
};
RankFactorization rank_factorization(const RatMatrix& m);

// Moore-Penrose inverse through the rank factorization:
//   pinv(m) = g^T (g g^T)^-1 (f^T f)^-1 f^T.
// Independent of any graph structure; exact. The zero matrix maps to the
// transposed zero matrix.
RatMatrix pinv_oracle(const RatMatrix& m);

// The four Moore-Penrose conditions for candidate x against a, checked with
// exact equality: axa = a, xax = x, (ax)^T = ax, (xa)^T = xa. Throws
// std::invalid_argument unless x has the transposed shape of a.
std::array<bool, 4> penrose_verify(const RatMatrix& a, const RatMatrix& x);

}  // namespace signedpinv
