#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "signedpinv/rational.hpp"

namespace signedpinv {

// Dense row-major matrix of exact rationals. Dimensions may be zero;
// a 0xk or kx0 matrix is a valid (empty) value, not an error.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;

    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Exact matrix product; throws std::invalid_argument on an inner-dimension
// mismatch.
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);
inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix scale(const Rational& c, const RatMatrix& m);

}  // namespace signedpinv
