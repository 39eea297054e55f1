#pragma once

#include "lierine/connection.hpp"
#include "lierine/lie_rinehart.hpp"
#include "lierine/sampling.hpp"

#include <string>
#include <vector>

// Known and randomly generated valid Lie-Rinehart algebras for the tests.
namespace instances {

using lierine::Algebra;

// Structure constants given as (i, j, k, value) with i < j, 0-based.
struct Constant {
    std::size_t i, j, k;
    long value;
};

Algebra lie_algebra_over_q(std::size_t m, const std::vector<Constant>& constants);

// e, h, f with [e,h] = -2e, [e,f] = h, [h,f] = -2f.
Algebra sl2();
Algebra abelian_over_q(std::size_t m);
// <d/dx_1, ..., d/dx_n> over Q[x_1..x_n], zero brackets.
Algebra de_rham(std::size_t n);
// <x d/dx> over Q[x]/(x^4).
Algebra truncated_euler();

// Connection over de_rham(2) with Gamma_1 = 0 and Gamma_2 = [lambda*x].
lierine::Connection line_bundle(const Algebra& algebra, long lambda, std::string label = {});

// Action algebroid A ⊗ span(fields): the fields must close under the
// commutator with constant coefficients.
Algebra action_algebroid(const lierine::Ring& ring, const std::vector<lierine::Derivation>& fields);

// Adds `extra` basis vectors with zero anchor and zero brackets.
Algebra with_central_summand(const Algebra& algebra, std::size_t extra);

// New basis g_a' = g_a + f g_b, everything else unchanged.
Algebra change_basis(const Algebra& algebra, std::size_t a, std::size_t b, const lierine::Polynomial& f);

enum class Family { Rationals, Plane, TruncatedLine };

struct Instance {
    Algebra algebra;
    Family family;
    std::string description;
};

// A random algebra of rank <= max_rank from the given family, scrambled by
// random basis changes. Every result passes verify_axioms.
Instance random_instance(lierine::Sampler& sampler, Family family, std::size_t max_rank = 4);

std::string to_string(Family family);

} // namespace instances
