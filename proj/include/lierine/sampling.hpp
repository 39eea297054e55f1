#pragma once

#include "lierine/connection.hpp"
#include "lierine/forms.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace lierine {

/// Seeded generator of small random algebraic data (coefficients with
/// |numerator| <= 3 and denominator <= 3). Used by the identity checkers
/// and by the property tests.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);
    /// Nonzero rational.
    Rational coefficient();
    Polynomial polynomial(const Ring& ring, unsigned max_degree, unsigned max_terms = 3);
    PolyMatrix matrix(const Ring& ring, std::size_t rows, std::size_t cols, unsigned max_degree,
                      unsigned max_terms = 2);
    GElement element(const LieRinehartData& algebra, unsigned max_degree);
    Form form(const Algebra& algebra, unsigned degree, ValueKind kind, std::size_t rank, unsigned max_degree);
    Connection connection(const Algebra& algebra, std::size_t rank, unsigned max_degree, std::string label = {});

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace lierine
