#pragma once

#include "lierine/connection.hpp"
#include "lierine/forms.hpp"

#include <vector>

namespace lierine {

/// tr exp(R) split by degree: component n is the scalar 2n-form
/// tr(R^n)/n!, for 0 <= n <= floor(m/2). Higher components vanish because
/// Λ^{>m} g = 0.
class ChernForm {
public:
    explicit ChernForm(std::vector<Form> components);
    /// All components zero.
    static ChernForm zero(const Algebra& algebra);

    const std::vector<Form>& components() const { return components_; }
    const Form& component(std::size_t n) const { return components_.at(n); }
    std::size_t size() const { return components_.size(); }
    const Algebra& algebra() const { return components_.front().algebra(); }

    ChernForm& operator+=(const ChernForm& other);
    ChernForm& operator-=(const ChernForm& other);
    friend ChernForm operator+(ChernForm a, const ChernForm& b) { return a += b; }
    friend ChernForm operator-(ChernForm a, const ChernForm& b) { return a -= b; }
    friend ChernForm operator*(const Rational& c, ChernForm a);

    bool operator==(const ChernForm& other) const { return components_ == other.components_; }

private:
    std::vector<Form> components_;
};

/// Product in the even part of C*(g, A): component n = sum_k a_k ∧ b_{n-k}.
ChernForm wedge(const ChernForm& a, const ChernForm& b);

/// n-fold shuffle wedge R∧...∧R (values composed as matrices); n = 0 gives
/// the degree-0 identity.
Form curvature_power(const Form& curvature, unsigned n);

/// ch_n = tr(R^n)/n!.
Form chern_component(const Connection& c, unsigned n);

ChernForm chern_character(const Connection& c);

struct ClosednessReport {
    struct Component {
        unsigned n;
        unsigned degree;
        bool closed;
    };
    std::vector<Component> components;

    bool passed() const;
};

/// d(ch_n) == 0 for every component, with the canonical action on A.
ClosednessReport verify_closed(const ChernForm& ch);
ClosednessReport verify_closed(const Connection& c);

} // namespace lierine
