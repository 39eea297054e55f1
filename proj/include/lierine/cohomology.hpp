#pragma once

#include "lierine/connection.hpp"
#include "lierine/forms.hpp"
#include "lierine/linalg.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <string_view>
#include <vector>

namespace lierine {

/// How cochain groups are cut down to finite-dimensional Q-vector spaces.
///  - Finite: A itself is finite-dimensional (no variables, or every
///    variable truncated); answers are complete.
///  - DegreeBounded(D): A is an untruncated polynomial ring and only
///    coefficients of total degree <= D are searched; positives are
///    certified, negatives carry no global claim.
struct Regime {
    enum class Mode { Finite, DegreeBounded };
    Mode mode = Mode::Finite;
    unsigned bound = 0;

    static Regime finite() { return {Mode::Finite, 0}; }
    static Regime degree_bounded(unsigned d) { return {Mode::DegreeBounded, d}; }
    /// "finite" or "degree:D".
    static Regime parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const Regime&) const = default;
};

/// A deterministic Q-basis of (part of) C^p(g, V): basis subset × monomial ×
/// value entry, in that nesting order.
class CochainSpace {
public:
    struct Coordinate {
        std::size_t subset;
        Exponents monomial;
        std::size_t row;
        std::size_t col;
    };

    CochainSpace(Algebra algebra, unsigned degree, ValueKind kind, std::size_t rank, Regime regime);

    const Algebra& algebra() const { return algebra_; }
    unsigned degree() const { return degree_; }
    ValueKind kind() const { return kind_; }
    std::size_t rank() const { return rank_; }
    const Regime& regime() const { return regime_; }
    const std::vector<Exponents>& monomials() const { return monomials_; }

    std::size_t dimension() const { return coordinates_.size(); }
    const std::vector<Coordinate>& coordinates() const { return coordinates_; }

    Form basis_form(std::size_t index) const;
    Form form_from(std::span<const Rational> coords) const;
    /// Coordinates of f; throws if f has a term outside the space.
    std::vector<Rational> coordinates_of(const Form& f) const;

private:
    Algebra algebra_;
    unsigned degree_;
    ValueKind kind_;
    std::size_t rank_;
    Regime regime_;
    std::vector<Exponents> monomials_;
    std::vector<Coordinate> coordinates_;
    std::map<std::tuple<std::size_t, Exponents, std::size_t, std::size_t>, std::size_t> index_;
};

CochainSpace flatten(const Algebra& algebra, unsigned degree, ValueKind kind, std::size_t rank, Regime regime);

/// Matrix of d^p : C^p → C^{p+1} in the Finite regime.
RationalMatrix differential_matrix(const CochainSpace& source, const CochainSpace& target, const Action& action);

struct CohomologyReport {
    Regime regime;
    std::vector<std::size_t> dims;  // dim C^p, p = 0..m
    std::vector<std::size_t> ranks; // rank d^p, p = 0..m-1
    std::vector<std::size_t> betti; // b_p, p = 0..m
};

/// Betti numbers of the complex C*(g, V) with differential from `action`.
/// Finite regime only; the action must be flat.
CohomologyReport betti_numbers(const Action& action, Regime regime);

struct PrimitiveResult {
    enum class Status { Found, NotFoundWithinBound, NotExact };
    Status status;
    /// For Found with target degree >= 1: a form w with d(w) == target.
    std::optional<Form> witness;
    unsigned bound = 0;
};

const char* to_string(PrimitiveResult::Status s);

/// Solves d(w) = target. The target must be closed. Every witness is
/// re-verified by applying the differential exactly.
PrimitiveResult find_primitive(const Form& target, const Action& action, Regime regime);

enum class ClassVerdict { Equal, Unequal, Unknown };

const char* to_string(ClassVerdict v);

ClassVerdict classes_equal(const Form& a, const Form& b, const Action& action, Regime regime);

/// Upper bound on how much one application of d raises coefficient degree.
int differential_degree_shift(const Action& action);

} // namespace lierine
