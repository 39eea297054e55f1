#pragma once

#include "lierine/lie_rinehart.hpp"
#include "lierine/poly_matrix.hpp"

#include <string>
#include <vector>

namespace lierine {

/// How a connection was built. Direct sums and tensor products keep the
/// labels of their operands so the Grothendieck ring can apply the
/// direct-sum relation syntactically.
struct ConnectionOrigin {
    enum class Kind { Atom, DirectSum, Tensor };
    Kind kind = Kind::Atom;
    std::vector<std::string> parts;

    bool operator==(const ConnectionOrigin&) const = default;
};

/// A g-connection on the free module A^r, ∇_{g_j} = α(g_j)·Id + Γ_j.
/// Every choice of Christoffel matrices satisfies the Leibniz rule.
class Connection {
public:
    Connection(Algebra algebra, std::size_t rank, std::vector<PolyMatrix> christoffel, std::string label = {},
               ConnectionOrigin origin = {});

    /// Γ = 0: the flat connection ∇_δ(a_1..a_r) = (α(δ)a_1, ..., α(δ)a_r).
    static Connection trivial(Algebra algebra, std::size_t rank, std::string label = {});

    const Algebra& algebra() const { return algebra_; }
    std::size_t rank() const { return rank_; }
    const PolyMatrix& christoffel(std::size_t j) const { return christoffel_.at(j); }
    const std::vector<PolyMatrix>& christoffel() const { return christoffel_; }
    const std::string& label() const { return label_; }
    const ConnectionOrigin& origin() const { return origin_; }

    Connection relabeled(std::string label, ConnectionOrigin origin = {}) const;

    /// Γ(δ) = sum_j δ_j Γ_j.
    PolyMatrix christoffel_of(const GElement& d) const;

    /// Largest total degree among the Christoffel entries (-1 if all vanish).
    int christoffel_degree() const;

    /// Same algebra, rank and Christoffel data; labels are ignored.
    bool same_data(const Connection& other) const;

private:
    Algebra algebra_;
    std::size_t rank_;
    std::vector<PolyMatrix> christoffel_;
    std::string label_;
    ConnectionOrigin origin_;
};

/// ∇_d(w) for a column vector w in A^r.
PolyMatrix apply_connection(const Connection& c, const GElement& d, const PolyMatrix& w);

/// Value kind of a cochain: functions (V = A), module elements (V = W) or
/// endomorphisms (V = End W).
enum class ValueKind { Scalar, Module, Endo };

const char* to_string(ValueKind kind);

/// The operator δ ↦ ∇_δ acting on the value space of one kind of cochain.
/// This is what the differential of the standard complex consumes:
///  - canonical: ∇_δ(a) = α(δ)(a) on A,
///  - module:    the connection itself on W,
///  - adjoint:   ad∇_δ(φ) = ∇_δ∘φ - φ∘∇_δ on End W.
class Action {
public:
    static Action canonical(Algebra algebra);
    static Action on_module(const Connection& c);
    static Action adjoint(const Connection& c);

    ValueKind kind() const { return kind_; }
    const Algebra& algebra() const { return algebra_; }
    std::size_t rank() const { return rank_; }
    /// Christoffel matrices, empty for the canonical action.
    const std::vector<PolyMatrix>& christoffel() const { return christoffel_; }

    PolyMatrix apply_basis(std::size_t j, const PolyMatrix& value) const;
    PolyMatrix apply(const GElement& d, const PolyMatrix& value) const;

    /// Maximal increase of coefficient degree under one application.
    int degree_shift() const;

private:
    Action(ValueKind kind, Algebra algebra, std::size_t rank, std::vector<PolyMatrix> christoffel);

    ValueKind kind_;
    Algebra algebra_;
    std::size_t rank_;
    std::vector<PolyMatrix> christoffel_;
};

/// The induced connection ad∇ = [∇, -] on End W.
Action ad_connection(const Connection& c);

} // namespace lierine
