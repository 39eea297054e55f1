#pragma once

#include "lierine/chern.hpp"
#include "lierine/connection.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace lierine {

/// Labelled connections over one algebra. Labels stand in for isomorphism
/// classes [W, ∇]; deciding isomorphism of connections is not attempted.
///
/// Tensor products are keyed by the sorted multiset of their non-unit
/// factors, so [a]·[b] and [b]·[a], or ([a]·[b])·[c] and [a]·([b]·[c]),
/// resolve to the same registered connection.
class ConnectionRegistry {
public:
    explicit ConnectionRegistry(Algebra algebra);

    const Algebra& algebra() const { return algebra_; }

    /// Registers c under its label (which must be nonempty and unused).
    /// Direct-sum and tensor origins must name registered labels.
    void add(const Connection& c);
    /// Registers a ⊕ b under `label` (default "(a⊕b)") and returns the label.
    std::string add_direct_sum(const std::string& a, const std::string& b, std::string label = {});
    /// Registers a ⊗ b under `label` and returns the label; reuses an
    /// existing connection with the same factors when `label` is empty.
    std::string add_tensor(const std::string& a, const std::string& b, std::string label = {});

    bool contains(const std::string& label) const;
    const Connection& get(const std::string& label) const;
    std::vector<std::string> labels() const;

    /// The rank-1 flat trivial connection, registered as "1".
    const std::string& unit() const { return unit_; }

private:
    std::vector<std::string> factors_locked(const std::string& label) const;
    std::string tensor_of_factors_locked(std::vector<std::string> factors, std::string label);

    Algebra algebra_;
    std::string unit_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<const Connection>> connections_;
    std::map<std::vector<std::string>, std::string> tensor_index_;
};

/// Element of K_0(g): finitely many labels with nonzero integer
/// coefficients, direct sums already replaced by their summands.
struct K0Element {
    std::map<std::string, long long> coefficients;

    bool is_zero() const { return coefficients.empty(); }
    bool operator==(const K0Element&) const = default;
};

K0Element k0_symbol(const ConnectionRegistry& registry, const std::string& label);

/// Applies [W ⊕ W'] = [W] + [W'] to every direct-sum label, recursively.
K0Element k0_normalize(const ConnectionRegistry& registry, const K0Element& a);

/// a + sign·b.
K0Element k0_combine(const ConnectionRegistry& registry, const K0Element& a, const K0Element& b, int sign);

K0Element k0_scale(const ConnectionRegistry& registry, const K0Element& a, long long n);

/// Bilinear extension of [c]·[c'] = [c ⊗ c']; missing tensor products are
/// registered on demand.
K0Element k0_product(ConnectionRegistry& registry, const K0Element& a, const K0Element& b);

/// sum of coefficient · ch(connection).
ChernForm chern_on_k0(const ConnectionRegistry& registry, const K0Element& a);

/// Parses expressions such as "(A+B)*C - 2*D" over registered labels. An
/// integer n alone stands for n·[1].
K0Element parse_k0_expression(ConnectionRegistry& registry, std::string_view text);

} // namespace lierine
