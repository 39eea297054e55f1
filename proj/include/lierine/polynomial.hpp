#pragma once

#include "lierine/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lierine {

/// Variable names of a polynomial ring over Q, optionally with a monomial
/// power ideal (x_i^{d_i}). A variable without a bound is never truncated;
/// this is how the homotopy parameter t rides along a truncated base ring.
class RingSpec {
public:
    RingSpec(std::vector<std::string> variables, std::vector<std::optional<unsigned>> bounds = {});

    std::size_t size() const { return variables_.size(); }
    const std::string& name(std::size_t i) const { return variables_.at(i); }
    const std::vector<std::string>& variables() const { return variables_; }
    std::optional<unsigned> bound(std::size_t i) const { return bounds_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Some variable carries a bound.
    bool truncated() const;
    /// Every variable carries a bound, so the ring is finite-dimensional over Q.
    bool finite() const;

    bool operator==(const RingSpec& other) const = default;

private:
    std::vector<std::string> variables_;
    std::vector<std::optional<unsigned>> bounds_;
};

using Ring = std::shared_ptr<const RingSpec>;

Ring make_ring(std::vector<std::string> variables, std::vector<std::optional<unsigned>> bounds = {});

bool same_ring(const Ring& a, const Ring& b);

using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order; x_1 > x_2 > ... among equal total degree.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

using Terms = std::map<Exponents, Rational, GrlexLess>;

/// Sparse polynomial with exact rational coefficients. Stored terms are
/// nonzero and already reduced modulo the ring's truncation ideal.
class Polynomial {
public:
    explicit Polynomial(Ring ring);

    static Polynomial constant(Ring ring, const Rational& c);
    static Polynomial variable(Ring ring, std::size_t index);
    static Polynomial monomial(Ring ring, Exponents exponents, const Rational& c = 1);
    /// Builds the canonical representative of an arbitrary term map: drops
    /// zero coefficients and every monomial inside the truncation ideal.
    static Polynomial from_terms(Ring ring, const Terms& raw);

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree, -1 for the zero polynomial.
    int degree() const;
    Rational coefficient(const Exponents& e) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    bool operator==(const Polynomial& other) const;

    std::string to_string() const;

private:
    void check_ring(const Polynomial& other, const char* op) const;
    bool admissible(const Exponents& e) const;

    Ring ring_;
    Terms terms_;
};

/// Formal partial derivative with respect to variable `index`.
Polynomial derive(const Polynomial& p, std::size_t index);

/// Canonical representative of p in `target`, which must list the same
/// variables. With target == p.ring() this is the identity on stored values.
Polynomial reduce(const Polynomial& p, const Ring& target);
Polynomial reduce(const Polynomial& p);

/// Parses `3/2*x^2*y - 1` style text against the ring's variable names.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

} // namespace lierine
