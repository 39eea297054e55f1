#include "lierine/k0ring.hpp"

#include "lierine/connection_ops.hpp"
#include "lierine/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lierine {

ConnectionRegistry::ConnectionRegistry(Algebra algebra) : algebra_(std::move(algebra)), unit_("1")
{
    connections_.emplace(unit_, std::make_shared<const Connection>(Connection::trivial(algebra_, 1, unit_)));
}

void ConnectionRegistry::add(const Connection& c)
{
    std::lock_guard lock(mutex_);
    if (c.label().empty())
        throw StructuralError("registered connections need a label");
    if (connections_.count(c.label()))
        throw StructuralError("connection label '" + c.label() + "' is already registered");
    if (!same_algebra(c.algebra(), algebra_))
        throw StructuralError("connection '" + c.label() + "' lives over a different algebra");
    for (const auto& part : c.origin().parts)
        if (!connections_.count(part))
            throw StructuralError("connection '" + c.label() + "' refers to unregistered '" + part + "'");
    connections_.emplace(c.label(), std::make_shared<const Connection>(c));
    if (c.origin().kind == ConnectionOrigin::Kind::Tensor) {
        std::vector<std::string> factors;
        for (const auto& part : c.origin().parts) {
            auto f = factors_locked(part);
            factors.insert(factors.end(), f.begin(), f.end());
        }
        std::sort(factors.begin(), factors.end());
        tensor_index_.emplace(std::move(factors), c.label());
    }
}

std::string ConnectionRegistry::add_direct_sum(const std::string& a, const std::string& b, std::string label)
{
    Connection sum = direct_sum(get(a), get(b));
    if (label.empty())
        label = sum.label();
    add(sum.relabeled(label, sum.origin()));
    return label;
}

std::string ConnectionRegistry::add_tensor(const std::string& a, const std::string& b, std::string label)
{
    if (label.empty()) {
        std::lock_guard lock(mutex_);
        auto fa = factors_locked(a);
        auto fb = factors_locked(b);
        fa.insert(fa.end(), fb.begin(), fb.end());
        return tensor_of_factors_locked(std::move(fa), {});
    }
    Connection t = tensor(get(a), get(b));
    add(t.relabeled(label, t.origin()));
    return label;
}

bool ConnectionRegistry::contains(const std::string& label) const
{
    std::lock_guard lock(mutex_);
    return connections_.count(label) > 0;
}

const Connection& ConnectionRegistry::get(const std::string& label) const
{
    std::lock_guard lock(mutex_);
    auto it = connections_.find(label);
    if (it == connections_.end())
        throw StructuralError("unknown connection label '" + label + "'");
    return *it->second;
}

std::vector<std::string> ConnectionRegistry::labels() const
{
    std::lock_guard lock(mutex_);
    std::vector<std::string> out;
    for (const auto& [label, c] : connections_)
        out.push_back(label);
    return out;
}

std::vector<std::string> ConnectionRegistry::factors_locked(const std::string& label) const
{
    auto it = connections_.find(label);
    if (it == connections_.end())
        throw StructuralError("unknown connection label '" + label + "'");
    if (label == unit_)
        return {};
    const Connection& c = *it->second;
    if (c.origin().kind != ConnectionOrigin::Kind::Tensor)
        return {label};
    std::vector<std::string> out;
    for (const auto& part : c.origin().parts) {
        auto f = factors_locked(part);
        out.insert(out.end(), f.begin(), f.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string ConnectionRegistry::tensor_of_factors_locked(std::vector<std::string> factors, std::string label)
{
    std::sort(factors.begin(), factors.end());
    if (factors.empty())
        return unit_;
    if (factors.size() == 1)
        return factors.front();
    if (auto it = tensor_index_.find(factors); it != tensor_index_.end())
        return it->second;
    Connection acc = *connections_.at(factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k)
        acc = tensor(acc, *connections_.at(factors[k]));
    if (label.empty()) {
        label = "(";
        for (std::size_t k = 0; k < factors.size(); ++k)
            label += (k ? "⊗" : "") + factors[k];
        label += ")";
    }
    if (connections_.count(label))
        throw StructuralError("connection label '" + label + "' is already registered");
    connections_.emplace(label, std::make_shared<const Connection>(
                                    acc.relabeled(label, {ConnectionOrigin::Kind::Tensor, factors})));
    tensor_index_.emplace(factors, label);
    return label;
}

K0Element k0_symbol(const ConnectionRegistry& registry, const std::string& label)
{
    if (!registry.contains(label))
        throw StructuralError("unknown connection label '" + label + "'");
    K0Element e;
    e.coefficients[label] = 1;
    return k0_normalize(registry, e);
}

namespace {

void expand(const ConnectionRegistry& registry, const std::string& label, long long coeff,
            std::map<std::string, long long>& out)
{
    const Connection& c = registry.get(label);
    if (c.origin().kind == ConnectionOrigin::Kind::DirectSum) {
        for (const auto& part : c.origin().parts)
            expand(registry, part, coeff, out);
        return;
    }
    out[label] += coeff;
}

} // namespace

K0Element k0_normalize(const ConnectionRegistry& registry, const K0Element& a)
{
    std::map<std::string, long long> acc;
    for (const auto& [label, n] : a.coefficients)
        expand(registry, label, n, acc);
    K0Element out;
    for (const auto& [label, n] : acc)
        if (n != 0)
            out.coefficients.emplace(label, n);
    return out;
}

K0Element k0_combine(const ConnectionRegistry& registry, const K0Element& a, const K0Element& b, int sign)
{
    if (sign != 1 && sign != -1)
        throw StructuralError("k0_combine: sign must be +1 or -1");
    K0Element sum = a;
    for (const auto& [label, n] : b.coefficients)
        sum.coefficients[label] += sign * n;
    return k0_normalize(registry, sum);
}

K0Element k0_scale(const ConnectionRegistry& registry, const K0Element& a, long long n)
{
    K0Element out = a;
    for (auto& [label, c] : out.coefficients)
        c *= n;
    return k0_normalize(registry, out);
}

K0Element k0_product(ConnectionRegistry& registry, const K0Element& a, const K0Element& b)
{
    K0Element na = k0_normalize(registry, a);
    K0Element nb = k0_normalize(registry, b);
    K0Element out;
    for (const auto& [la, ca] : na.coefficients)
        for (const auto& [lb, cb] : nb.coefficients)
            out.coefficients[registry.add_tensor(la, lb)] += ca * cb;
    return k0_normalize(registry, out);
}

ChernForm chern_on_k0(const ConnectionRegistry& registry, const K0Element& a)
{
    ChernForm total = ChernForm::zero(registry.algebra());
    for (const auto& [label, n] : a.coefficients)
        total += Rational(static_cast<long>(n)) * chern_character(registry.get(label));
    return total;
}

namespace {

class K0Parser {
public:
    K0Parser(ConnectionRegistry& registry, std::string_view text) : registry_(registry), text_(text) {}

    K0Element parse()
    {
        K0Element e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return e;
    }

private:
    K0Element expr()
    {
        K0Element acc = term();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                int sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
                acc = k0_combine(registry_, acc, term(), sign);
            } else {
                return acc;
            }
        }
    }

    K0Element term()
    {
        K0Element acc = factor();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                acc = k0_product(registry_, acc, factor());
            } else {
                return acc;
            }
        }
    }

    K0Element factor()
    {
        skip_ws();
        if (pos_ >= text_.size())
            fail("expected a label, integer or '('");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            K0Element e = expr();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            return e;
        }
        if (c == '-') {
            ++pos_;
            return k0_scale(registry_, factor(), -1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            long long n = std::stoll(std::string(text_.substr(start, pos_ - start)));
            return k0_scale(registry_, k0_symbol(registry_, registry_.unit()), n);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string label(text_.substr(start, pos_ - start));
            if (!registry_.contains(label))
                fail("unknown module label '" + label + "'");
            return k0_symbol(registry_, label);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("k0 expression '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_));
    }

    ConnectionRegistry& registry_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

K0Element parse_k0_expression(ConnectionRegistry& registry, std::string_view text)
{
    return K0Parser(registry, text).parse();
}

} // namespace lierine
