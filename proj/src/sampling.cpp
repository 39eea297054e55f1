#include "lierine/sampling.hpp"

namespace lierine {

int Sampler::uniform(int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Rational Sampler::coefficient()
{
    int num = 0;
    while (num == 0)
        num = uniform(-3, 3);
    return make_rational(num, uniform(1, 3));
}

Polynomial Sampler::polynomial(const Ring& ring, unsigned max_degree, unsigned max_terms)
{
    Terms raw;
    const int nterms = uniform(0, static_cast<int>(max_terms));
    const std::size_t n = ring->size();
    for (int t = 0; t < nterms; ++t) {
        Exponents e(n, 0);
        if (n > 0) {
            int d = uniform(0, static_cast<int>(max_degree));
            for (int k = 0; k < d; ++k)
                ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
        }
        raw[e] += coefficient();
    }
    return Polynomial::from_terms(ring, raw);
}

PolyMatrix Sampler::matrix(const Ring& ring, std::size_t rows, std::size_t cols, unsigned max_degree,
                           unsigned max_terms)
{
    PolyMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = polynomial(ring, max_degree, max_terms);
    return m;
}

GElement Sampler::element(const LieRinehartData& algebra, unsigned max_degree)
{
    GElement d = algebra.zero_element();
    for (auto& c : d.coefficients)
        c = polynomial(algebra.ring(), max_degree, 2);
    return d;
}

Form Sampler::form(const Algebra& algebra, unsigned degree, ValueKind kind, std::size_t rank, unsigned max_degree)
{
    Form f(algebra, degree, kind, rank);
    for (std::size_t k = 0; k < f.size(); ++k)
        f.value(k) = matrix(algebra->ring(), f.value_rows(), f.value_cols(), max_degree);
    return f;
}

Connection Sampler::connection(const Algebra& algebra, std::size_t rank, unsigned max_degree, std::string label)
{
    std::vector<PolyMatrix> g;
    for (std::size_t j = 0; j < algebra->rank(); ++j)
        g.push_back(matrix(algebra->ring(), rank, rank, max_degree));
    return Connection(algebra, rank, std::move(g), std::move(label));
}

} // namespace lierine
