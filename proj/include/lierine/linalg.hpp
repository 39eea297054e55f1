#pragma once

#include "lierine/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace lierine {

/// Dense rational matrix used for the flattened cochain differentials.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Rank over Q. Rows are scaled to integers and reduced with fraction-free
/// (Bareiss) elimination; pivots are taken in column order, first nonzero
/// row wins.
std::size_t rank(const RationalMatrix& a);

/// Some x with a·x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero, so the answer is deterministic.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, std::span<const Rational> b);

} // namespace lierine
