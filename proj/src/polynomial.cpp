#include "lierine/polynomial.hpp"

#include "lierine/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace lierine {

RingSpec::RingSpec(std::vector<std::string> variables, std::vector<std::optional<unsigned>> bounds)
    : variables_(std::move(variables)), bounds_(std::move(bounds))
{
    if (bounds_.empty())
        bounds_.assign(variables_.size(), std::nullopt);
    if (bounds_.size() != variables_.size())
        throw StructuralError("truncation bounds must cover every variable");
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (v.empty())
            throw StructuralError("empty variable name");
        if (!seen.insert(v).second)
            throw StructuralError("duplicate variable name '" + v + "'");
    }
    for (const auto& b : bounds_)
        if (b && *b == 0)
            throw StructuralError("truncation bounds must be >= 1");
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name)
            return i;
    return std::nullopt;
}

bool RingSpec::truncated() const
{
    return std::any_of(bounds_.begin(), bounds_.end(), [](const auto& b) { return b.has_value(); });
}

bool RingSpec::finite() const
{
    return std::all_of(bounds_.begin(), bounds_.end(), [](const auto& b) { return b.has_value(); });
}

Ring make_ring(std::vector<std::string> variables, std::vector<std::optional<unsigned>> bounds)
{
    return std::make_shared<const RingSpec>(std::move(variables), std::move(bounds));
}

bool same_ring(const Ring& a, const Ring& b)
{
    return a == b || (a && b && *a == *b);
}

unsigned total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0u);
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const
{
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db)
        return da < db;
    return a < b;
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring))
{
    if (!ring_)
        throw StructuralError("polynomial without a ring");
}

Polynomial Polynomial::constant(Ring ring, const Rational& c)
{
    Polynomial p(std::move(ring));
    if (c != 0)
        p.terms_.emplace(Exponents(p.ring_->size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(Ring ring, std::size_t index)
{
    if (index >= ring->size())
        throw StructuralError("variable index out of range");
    Exponents e(ring->size(), 0);
    e[index] = 1;
    return monomial(std::move(ring), std::move(e));
}

Polynomial Polynomial::monomial(Ring ring, Exponents exponents, const Rational& c)
{
    Polynomial p(std::move(ring));
    if (exponents.size() != p.ring_->size())
        throw StructuralError("monomial length does not match the ring");
    if (c != 0 && p.admissible(exponents))
        p.terms_.emplace(std::move(exponents), c);
    return p;
}

Polynomial Polynomial::from_terms(Ring ring, const Terms& raw)
{
    Polynomial p(std::move(ring));
    for (const auto& [e, c] : raw) {
        if (e.size() != p.ring_->size())
            throw StructuralError("monomial length does not match the ring");
        if (c != 0 && p.admissible(e))
            p.terms_.emplace(e, c);
    }
    return p;
}

bool Polynomial::admissible(const Exponents& e) const
{
    for (std::size_t i = 0; i < e.size(); ++i) {
        auto b = ring_->bound(i);
        if (b && e[i] >= *b)
            return false;
    }
    return true;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const
{
    if (terms_.empty())
        return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

Rational Polynomial::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_ring(const Polynomial& other, const char* op) const
{
    if (!same_ring(ring_, other.ring_))
        throw StructuralError(std::string("ring mismatch in ") + op);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_ring(other, "addition");
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_ring(other, "subtraction");
    for (const auto& [e, c] : other.terms_) {
        auto [it, inserted] = terms_.emplace(e, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_ring(b, "multiplication");
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero())
        return r;
    const std::size_t n = a.ring_->size();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool keep = true;
            for (std::size_t i = 0; i < n; ++i) {
                e[i] = ea[i] + eb[i];
                auto bound = a.ring_->bound(i);
                if (bound && e[i] >= *bound) {
                    keep = false;
                    break;
                }
            }
            if (!keep)
                continue;
            auto [it, inserted] = r.terms_.emplace(e, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0)
                    r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& [e, v] : r.terms_)
        v = -v;
    return r;
}

bool Polynomial::operator==(const Polynomial& other) const
{
    return same_ring(ring_, other.ring_) && terms_ == other.terms_;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += ring_->name(i);
            if (e[i] > 1)
                mono += '^' + std::to_string(e[i]);
        }
        Rational mag = abs(c);
        std::string body;
        if (mono.empty())
            body = lierine::to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = lierine::to_string(mag) + '*' + mono;
        if (first)
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

Polynomial derive(const Polynomial& p, std::size_t index)
{
    if (index >= p.ring()->size())
        throw StructuralError("derivative variable index out of range");
    Terms raw;
    for (const auto& [e, c] : p.terms()) {
        if (e[index] == 0)
            continue;
        Exponents d = e;
        --d[index];
        raw[d] += c * e[index];
    }
    return Polynomial::from_terms(p.ring(), raw);
}

Polynomial reduce(const Polynomial& p, const Ring& target)
{
    if (p.ring()->variables() != target->variables())
        throw StructuralError("reduction target has different variables");
    return Polynomial::from_terms(target, p.terms());
}

Polynomial reduce(const Polynomial& p)
{
    return reduce(p, p.ring());
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

    Polynomial parse()
    {
        Terms raw;
        skip_ws();
        if (at_end())
            fail("empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        add_term(raw, sign);
        for (;;) {
            skip_ws();
            if (at_end())
                break;
            char c = peek();
            if (c != '+' && c != '-')
                fail("expected '+' or '-'");
            ++pos_;
            add_term(raw, c == '-' ? -1 : 1);
        }
        return Polynomial::from_terms(ring_, raw);
    }

private:
    void add_term(Terms& raw, int sign)
    {
        Rational coeff = sign;
        Exponents e(ring_->size(), 0);
        parse_factor(coeff, e);
        for (;;) {
            skip_ws();
            if (at_end() || peek() != '*')
                break;
            ++pos_;
            parse_factor(coeff, e);
        }
        raw[e] += coeff;
    }

    void parse_factor(Rational& coeff, Exponents& e)
    {
        skip_ws();
        if (at_end())
            fail("expected a factor");
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::string den = digits();
                if (den.empty())
                    fail("expected a denominator");
                num += '/' + den;
            }
            coeff *= parse_rational(num);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->index_of(name);
            if (!idx)
                fail("unknown variable '" + name + "'");
            unsigned power = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                std::string p = digits();
                if (p.empty())
                    fail("expected an exponent");
                power = static_cast<unsigned>(std::stoul(p));
            }
            e[*idx] += power;
            return;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const Ring& ring)
{
    return PolyParser(text, ring).parse();
}

} // namespace lierine
