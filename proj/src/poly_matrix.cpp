#include "lierine/poly_matrix.hpp"

#include "lierine/errors.hpp"

#include <algorithm>

namespace lierine {

PolyMatrix::PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Polynomial(ring))
{
}

PolyMatrix PolyMatrix::identity(Ring ring, std::size_t n)
{
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Polynomial::constant(ring, 1);
    return m;
}

PolyMatrix PolyMatrix::scalar(const Polynomial& p)
{
    PolyMatrix m(p.ring(), 1, 1);
    m(0, 0) = p;
    return m;
}

bool PolyMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

Polynomial PolyMatrix::trace() const
{
    if (rows_ != cols_)
        throw StructuralError("trace of a non-square matrix");
    Polynomial t(ring_);
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

PolyMatrix PolyMatrix::map(const std::function<Polynomial(const Polynomial&)>& f) const
{
    PolyMatrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k)
        out.data_[k] = f(data_[k]);
    return out;
}

void PolyMatrix::check_shape(const PolyMatrix& other, const char* op) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw StructuralError(std::string("matrix shape mismatch in ") + op);
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other)
{
    check_shape(other, "addition");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] += other.data_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other)
{
    check_shape(other, "subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k)
        data_[k] -= other.data_[k];
    return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw StructuralError("matrix shape mismatch in multiplication");
    PolyMatrix out(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Polynomial& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += aik * b(k, j);
        }
    return out;
}

PolyMatrix operator*(const Polynomial& s, const PolyMatrix& m)
{
    PolyMatrix out(m.ring_, m.rows_, m.cols_);
    if (s.is_zero())
        return out;
    for (std::size_t k = 0; k < m.data_.size(); ++k)
        out.data_[k] = s * m.data_[k];
    return out;
}

PolyMatrix operator*(const Rational& s, const PolyMatrix& m)
{
    PolyMatrix out = m;
    for (auto& p : out.data_)
        p *= s;
    return out;
}

PolyMatrix PolyMatrix::operator-() const
{
    PolyMatrix out = *this;
    for (auto& p : out.data_)
        p = -p;
    return out;
}

bool PolyMatrix::operator==(const PolyMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix out(a.ring(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b)
{
    PolyMatrix out(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

} // namespace lierine
