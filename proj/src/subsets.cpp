#include "lierine/subsets.hpp"

#include "lierine/errors.hpp"

#include <string>

namespace lierine {

std::uint64_t binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<Subset> subsets(unsigned m, unsigned p)
{
    std::vector<Subset> out;
    if (p > m)
        return out;
    out.reserve(binomial(m, p));
    Subset s(p);
    for (unsigned i = 0; i < p; ++i)
        s[i] = i;
    for (;;) {
        out.push_back(s);
        int i = static_cast<int>(p) - 1;
        while (i >= 0 && s[i] == m - p + static_cast<unsigned>(i))
            --i;
        if (i < 0)
            break;
        ++s[i];
        for (unsigned j = static_cast<unsigned>(i) + 1; j < p; ++j)
            s[j] = s[j - 1] + 1;
    }
    return out;
}

std::size_t subset_rank(const Subset& s, unsigned m)
{
    const unsigned p = static_cast<unsigned>(s.size());
    std::size_t rank = 0;
    unsigned prev = 0;
    for (unsigned i = 0; i < p; ++i) {
        if (s[i] >= m || (i > 0 && s[i] <= s[i - 1]))
            throw StructuralError("subset_rank: not a strictly increasing subset of {0.." + std::to_string(m - 1) + "}");
        // Count the subsets that agree before position i and hold a smaller value there.
        for (unsigned v = prev; v < s[i]; ++v)
            rank += binomial(m - v - 1, p - i - 1);
        prev = s[i] + 1;
    }
    return rank;
}

int sort_with_sign(std::vector<unsigned>& indices)
{
    int sign = 1;
    // Insertion sort; each adjacent swap flips the sign.
    for (std::size_t i = 1; i < indices.size(); ++i) {
        for (std::size_t j = i; j > 0 && indices[j - 1] >= indices[j]; --j) {
            if (indices[j - 1] == indices[j])
                return 0;
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    }
    return sign;
}

} // namespace lierine
