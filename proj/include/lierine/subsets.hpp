#pragma once

#include <cstdint>
#include <vector>

namespace lierine {

/// Strictly increasing list of 0-based basis indices; the wedge g_{s_1} ∧ ... ∧ g_{s_p}.
using Subset = std::vector<unsigned>;

std::uint64_t binomial(unsigned n, unsigned k);

/// All p-subsets of {0..m-1} in lexicographic order. Empty when p > m.
std::vector<Subset> subsets(unsigned m, unsigned p);

/// Position of `s` in subsets(m, s.size()).
std::size_t subset_rank(const Subset& s, unsigned m);

/// Sorts an index list into increasing order and returns the sign of the
/// sorting permutation, or 0 when an index repeats (the wedge vanishes).
int sort_with_sign(std::vector<unsigned>& indices);

} // namespace lierine
