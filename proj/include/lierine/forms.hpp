#pragma once

#include "lierine/connection.hpp"
#include "lierine/lie_rinehart.hpp"
#include "lierine/poly_matrix.hpp"
#include "lierine/subsets.hpp"

#include <span>
#include <vector>

namespace lierine {

/// An element of C^p(g, V) = Hom_A(Λ^p g, V), V ∈ {A, W, End W}, stored by
/// its values on the basis wedges g_S for the C(m, p) increasing subsets S
/// (lexicographic order). A form of degree p > m has no stored values and
/// is zero.
class Form {
public:
    /// The zero form.
    Form(Algebra algebra, unsigned degree, ValueKind kind, std::size_t rank = 1);

    /// Degree-0 form with the given value.
    static Form constant(Algebra algebra, ValueKind kind, const PolyMatrix& value);
    /// Degree-0 identity of End A^r.
    static Form identity(Algebra algebra, std::size_t rank);
    /// The scalar 1-form dual to basis vector g_i, scaled by `value`.
    static Form dual(Algebra algebra, std::size_t i, const Polynomial& value);

    const Algebra& algebra() const { return algebra_; }
    unsigned degree() const { return degree_; }
    ValueKind kind() const { return kind_; }
    std::size_t rank() const { return rank_; }

    std::size_t size() const { return values_.size(); }
    std::vector<Subset> basis_subsets() const;

    const PolyMatrix& value(std::size_t index) const { return values_.at(index); }
    PolyMatrix& value(std::size_t index) { return values_.at(index); }
    const PolyMatrix& at(const Subset& s) const;
    void set(const Subset& s, PolyMatrix v);

    /// Value on arbitrary elements through the A-multilinear alternating
    /// extension: sum over S of det(coefficients of args on S) · value(S).
    PolyMatrix evaluate(std::span<const GElement> args) const;

    bool is_zero() const;

    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(const Rational& c, Form f);
    friend Form operator*(const Polynomial& c, Form f);
    Form operator-() const;

    bool operator==(const Form& other) const;

    /// Shape of one value: 1x1, r x 1 or r x r.
    std::size_t value_rows() const { return kind_ == ValueKind::Scalar ? 1 : rank_; }
    std::size_t value_cols() const { return kind_ == ValueKind::Endo ? rank_ : 1; }

private:
    void check_compatible(const Form& other, const char* op) const;

    Algebra algebra_;
    unsigned degree_;
    ValueKind kind_;
    std::size_t rank_;
    std::vector<PolyMatrix> values_;
};

/// Shuffle product (φ∧ψ)(g_S) = sum over (p,q)-shuffles of
/// sgn(σ) φ(first p) ψ(last q), without factorial normalisation.
/// Value products: function·anything, anything·function, End·End
/// (composition) and End·W (application).
Form wedge(const Form& phi, const Form& psi);

/// Differential of the standard complex with respect to `action`, whose
/// kind and rank must match the form.
Form differential(const Form& phi, const Action& action);
/// Scalar forms with the canonical action ∇_δ(a) = α(δ)(a).
Form differential(const Form& phi);

/// The Chevalley-type sum evaluated literally on `args`
/// (|args| = degree + 1), brackets taken with bracket_general and values of
/// phi through Form::evaluate. Independent of the basis-subset bookkeeping
/// inside differential().
PolyMatrix differential_eval_raw(const Form& phi, const Action& action, std::span<const GElement> args);

/// tr: C^p(g, End W) → C^p(g, A).
Form trace_form(const Form& phi);

/// Blockwise φ ⊕ ψ of two endomorphism-valued forms of equal degree.
Form endo_direct_sum(const Form& phi, const Form& psi);
/// φ ⊗ 1 on W ⊗ W' with rank(W') = other_rank.
Form endo_tensor_identity(const Form& phi, std::size_t other_rank);
/// 1 ⊗ ψ on W ⊗ W' with rank(W) = other_rank.
Form identity_tensor_endo(std::size_t other_rank, const Form& psi);

} // namespace lierine
