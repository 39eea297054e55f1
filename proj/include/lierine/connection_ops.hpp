#pragma once

#include "lierine/connection.hpp"
#include "lierine/forms.hpp"

namespace lierine {

/// R_∇ as an End W-valued 2-form:
/// R(g_i∧g_j) = α_i(Γ_j) - α_j(Γ_i) + Γ_iΓ_j - Γ_jΓ_i - sum_k c^k_ij Γ_k.
Form curvature(const Connection& c);

/// R_∇(g_i∧g_j) = [∇_i, ∇_j] - ∇_{[g_i,g_j]}, evaluated column by column on
/// the standard basis of W with apply_connection and bracket_general.
Form curvature_by_commutator(const Connection& c);

bool is_flat(const Connection& c);

/// ∇ ⊕ ∇' on W ⊕ W' (block-diagonal Christoffel matrices).
Connection direct_sum(const Connection& a, const Connection& b);

/// ∇ ⊗ 1 + 1 ⊗ ∇' on W ⊗ W'; basis e_i ⊗ e'_j sits at i*rank(W') + j.
Connection tensor(const Connection& a, const Connection& b);

/// ∇ + φ for φ ∈ Hom_A(g, End W).
Connection add_one_form(const Connection& c, const Form& phi);

/// The unique φ with a = b + φ.
Form connection_difference(const Connection& a, const Connection& b);

} // namespace lierine
