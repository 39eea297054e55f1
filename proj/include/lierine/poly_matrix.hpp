#pragma once

#include "lierine/polynomial.hpp"

#include <functional>
#include <vector>

namespace lierine {

/// Dense matrix of polynomials over one ring. Form values of every kind are
/// stored as matrices: 1x1 for functions, r x 1 for module elements and
/// r x r for endomorphisms.
class PolyMatrix {
public:
    PolyMatrix(Ring ring, std::size_t rows, std::size_t cols);

    static PolyMatrix identity(Ring ring, std::size_t n);
    static PolyMatrix scalar(const Polynomial& p);

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    Polynomial trace() const;

    /// Applies f to every entry.
    PolyMatrix map(const std::function<Polynomial(const Polynomial&)>& f) const;

    PolyMatrix& operator+=(const PolyMatrix& other);
    PolyMatrix& operator-=(const PolyMatrix& other);
    friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
    friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const Polynomial& s, const PolyMatrix& m);
    friend PolyMatrix operator*(const Rational& s, const PolyMatrix& m);
    PolyMatrix operator-() const;

    bool operator==(const PolyMatrix& other) const;

private:
    void check_shape(const PolyMatrix& other, const char* op) const;

    Ring ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Polynomial> data_;
};

/// Kronecker product; entry ((i,k),(j,l)) sits at (i*b.rows()+k, j*b.cols()+l).
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// Block diagonal diag(a, b).
PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);

} // namespace lierine
