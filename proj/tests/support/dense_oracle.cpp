#include "dense_oracle.hpp"

namespace oracle {

namespace {

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Dense& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[p], a[row]);
        const lierine::Rational inv = 1 / a[row][c];
        for (auto& v : a[row])
            v *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0)
                continue;
            const lierine::Rational f = a[r][c];
            for (std::size_t k = 0; k < a[r].size(); ++k)
                a[r][k] -= f * a[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Dense a)
{
    if (a.empty())
        return 0;
    const std::size_t cols = a.front().size();
    return rref(a, cols).size();
}

std::optional<Row> solve(const Dense& a, const Row& b)
{
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    Dense aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r)
        aug[r].push_back(b[r]);
    const auto pivots = rref(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;
    Row x(cols);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug[r][cols];
    return x;
}

} // namespace oracle
