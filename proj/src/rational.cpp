#include "lierine/rational.hpp"

#include "lierine/errors.hpp"

#include <cctype>

namespace lierine {

Rational make_rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0)
        throw StructuralError("rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return make_rational(n, d);
}

std::string to_string(const Rational& q)
{
    return q.get_str(10);
}

Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace lierine
