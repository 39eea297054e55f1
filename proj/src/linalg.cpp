#include "lierine/linalg.hpp"

#include "lierine/errors.hpp"

namespace lierine {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Row i of `a` (and b_i when given) multiplied by the lcm of its denominators.
IntMatrix integer_rows(const RationalMatrix& a, std::span<const Rational> b)
{
    const bool augmented = !b.empty();
    IntMatrix m(a.rows(), std::vector<Integer>(a.cols() + (augmented ? 1 : 0)));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        if (augmented)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b[i].get_den_mpz_t());
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
        if (augmented)
            m[i][a.cols()] = b[i].get_num() * (l / b[i].get_den());
    }
    return m;
}

struct Echelon {
    std::vector<std::size_t> pivot_cols; // pivot_cols[r] = pivot column of row r
};

/// Fraction-free elimination on the first `ncols` columns; trailing columns
/// are carried along. Every division is exact.
Echelon bareiss(IntMatrix& m, std::size_t ncols)
{
    Echelon e;
    const std::size_t rows = m.size();
    const std::size_t width = rows ? m[0].size() : 0;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows; ++col) {
        std::size_t p = r;
        while (p < rows && m[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < width; ++j) {
                Integer v = m[r][col] * m[i][j] - m[i][col] * m[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        e.pivot_cols.push_back(col);
        ++r;
    }
    return e;
}

} // namespace

std::size_t rank(const RationalMatrix& a)
{
    IntMatrix m = integer_rows(a, {});
    return bareiss(m, a.cols()).pivot_cols.size();
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b)
{
    if (b.size() != a.rows())
        throw StructuralError("solve: right-hand side length does not match the matrix");
    std::vector<Rational> x(a.cols(), Rational(0));
    if (a.rows() == 0)
        return x;
    IntMatrix m = integer_rows(a, b);
    Echelon e = bareiss(m, a.cols());
    const std::size_t rk = e.pivot_cols.size();
    for (std::size_t i = rk; i < m.size(); ++i)
        if (m[i][a.cols()] != 0)
            return std::nullopt;
    for (std::size_t r = rk; r-- > 0;) {
        const std::size_t c = e.pivot_cols[r];
        Rational acc(m[r][a.cols()]);
        for (std::size_t j = c + 1; j < a.cols(); ++j)
            if (m[r][j] != 0)
                acc -= Rational(m[r][j]) * x[j];
        x[c] = acc / Rational(m[r][c]);
    }
    return x;
}

} // namespace lierine
