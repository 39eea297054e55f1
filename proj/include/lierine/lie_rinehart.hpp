#pragma once

#include "lierine/poly_matrix.hpp"
#include "lierine/polynomial.hpp"

#include <array>
#include <memory>
#include <vector>

namespace lierine {

/// Upper bound on the rank of the Lie-Rinehart algebra. Forms are stored
/// densely over basis subsets, so this bounds memory.
inline constexpr std::size_t kMaxAlgebraRank = 12;

/// Derivation sum_j c_j d/dx_j of the base ring.
class Derivation {
public:
    Derivation(Ring ring, std::vector<Polynomial> coefficients);

    static Derivation zero(Ring ring);

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& coefficients() const { return coefficients_; }

    Polynomial apply(const Polynomial& a) const;
    PolyMatrix apply(const PolyMatrix& m) const;

    /// Indices i whose ideal generator x_i^{d_i} is not sent into the ideal,
    /// i.e. the derivation does not descend to the quotient ring. Computed
    /// once at construction.
    const std::vector<std::size_t>& ideal_violations() const { return ideal_violations_; }
    bool well_defined() const { return ideal_violations_.empty(); }

    bool operator==(const Derivation& other) const { return coefficients_ == other.coefficients_; }

private:
    Ring ring_;
    std::vector<Polynomial> coefficients_;
    std::vector<std::size_t> ideal_violations_;
};

/// Commutator [D, E] = D∘E - E∘D, determined by its values on the variables.
Derivation commutator(const Derivation& d, const Derivation& e);

/// Element sum_i a_i g_i of the algebra.
struct GElement {
    std::vector<Polynomial> coefficients;

    bool is_zero() const;
    bool operator==(const GElement& other) const = default;
};

GElement operator+(const GElement& a, const GElement& b);
GElement operator-(const GElement& a, const GElement& b);
GElement operator*(const Polynomial& a, const GElement& d);

/// A (k,A)-Lie-Rinehart algebra that is free of rank m over A, given by
/// bracket structure constants on the basis and the anchor of each basis
/// vector. Antisymmetry is structural: only pairs i<j are stored.
class LieRinehartData {
public:
    struct Bracket {
        std::size_t i;
        std::size_t j;
        std::vector<Polynomial> coefficients; // [g_i, g_j] = sum_k coefficients[k] g_k
    };

    LieRinehartData(Ring ring, std::size_t rank, std::vector<Derivation> anchor, std::vector<Bracket> brackets = {});

    const Ring& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const Derivation& anchor(std::size_t i) const { return anchor_.at(i); }

    /// Coefficient of g_k in [g_i, g_j] for arbitrary i, j.
    Polynomial structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
    /// Coefficients of [g_i, g_j] (i < j), or nullptr when the bracket vanishes.
    const std::vector<Polynomial>* bracket_coefficients(std::size_t i, std::size_t j) const;

    GElement basis(std::size_t i) const;
    GElement zero_element() const;

    /// Largest total degree among anchor and structure-constant coefficients
    /// (-1 when all vanish).
    int anchor_degree() const;
    int structure_degree() const;

    bool operator==(const LieRinehartData& other) const;

private:
    std::size_t pair_index(std::size_t i, std::size_t j) const;

    Ring ring_;
    std::size_t rank_;
    std::vector<Derivation> anchor_;
    std::vector<std::vector<Polynomial>> constants_; // per pair i<j; empty = zero bracket
};

using Algebra = std::shared_ptr<const LieRinehartData>;

Algebra make_algebra(Ring ring, std::size_t rank, std::vector<Derivation> anchor,
                     std::vector<LieRinehartData::Bracket> brackets = {});

bool same_algebra(const Algebra& a, const Algebra& b);

/// The derivation alpha(d) = sum_i d_i alpha(g_i).
Derivation anchor_of(const LieRinehartData& algebra, const GElement& d);

/// alpha(d)(a).
Polynomial anchor_apply(const LieRinehartData& algebra, const GElement& d, const Polynomial& a);

/// [d, e] expanded through the structure constants and the rule
/// [δ, aη] = a[δ, η] + α(δ)(a)η.
GElement bracket_general(const LieRinehartData& algebra, const GElement& d, const GElement& e);

struct AxiomReport {
    /// Pairs i<j with α([g_i, g_j]) != [α(g_i), α(g_j)].
    std::vector<std::array<std::size_t, 2>> anchor_violations;
    /// Triples i<j<k whose cyclic Jacobi sum is nonzero.
    std::vector<std::array<std::size_t, 3>> jacobi_violations;
    /// Basis indices whose anchor does not preserve the truncation ideal.
    std::vector<std::size_t> truncation_violations;

    bool passed() const
    {
        return anchor_violations.empty() && jacobi_violations.empty() && truncation_violations.empty();
    }
};

AxiomReport verify_axioms(const LieRinehartData& algebra);

} // namespace lierine
