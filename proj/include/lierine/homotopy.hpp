#pragma once

#include "lierine/chern.hpp"
#include "lierine/connection.hpp"
#include "lierine/forms.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lierine {

/// Extension of scalars A → A[t]. The extended algebra g[t] = g ⊗ k[t]
/// keeps the structure constants and anchors of g (t never appears in
/// them); t is an extra, never-truncated ring variable.
class ScalarExtension {
public:
    explicit ScalarExtension(Algebra base);

    const Algebra& base() const { return base_; }
    const Algebra& extended() const { return extended_; }
    std::size_t parameter_index() const { return t_index_; }
    /// The polynomial t in A[t].
    Polynomial parameter() const;

    Polynomial embed(const Polynomial& p) const;
    PolyMatrix embed(const PolyMatrix& m) const;
    GElement embed(const GElement& d) const;
    Form embed(const Form& f) const;
    Connection embed(const Connection& c) const;

    /// p^i: substitute t = i (i ∈ {0, 1}) and land back in A.
    Polynomial evaluate(const Polynomial& p, int at) const;
    PolyMatrix evaluate(const PolyMatrix& m, int at) const;
    Form evaluate(const Form& f, int at) const;
    Connection evaluate(const Connection& c, int at) const;

private:
    Algebra base_;
    Algebra extended_;
    std::size_t t_index_;
};

struct ExtendedConnection {
    ScalarExtension extension;
    Connection connection;
};

/// (g, ∇) ↦ (g[t], ∇ ⊗ 1).
ExtendedConnection extend_scalars(const Connection& c);

/// The A[t]-connection with Γ_j(t) = t·Γ_j(c1) + (1 - t)·Γ_j(c0).
Connection interpolate_connection(const ScalarExtension& ext, const Connection& c0, const Connection& c1);

/// p^i_* on forms; `at` must be 0 or 1.
Form evaluate_at(const ScalarExtension& ext, const Form& f, int at);

struct EvaluationReport {
    struct Check {
        std::string identity;
        int at;
        bool passed;
    };
    std::vector<Check> checks;

    bool passed() const;
};

/// Builds ∇_t from (c0, c1) and checks at t = 0 and t = 1, as exact form
/// equalities: p∘d = d∘p on scalar, module and End W forms; p(φ∧ψ) =
/// p(φ)∧p(ψ); p∘tr = tr∘p; p(R_t) = R_{c_i}; p(R_t^k) = (p R_t)^k; and
/// p(ch(∇_t)) = ch(c_i). Test forms are drawn from a seeded generator.
EvaluationReport verify_evaluation_identities(const Connection& c0, const Connection& c1, std::uint64_t seed = 7);

} // namespace lierine
