#include "wopt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wopt {

namespace {

bool is_integer_literal(std::string_view text)
{
    if (!text.empty() && (text.front() == '-' || text.front() == '+'))
        text.remove_prefix(1);
    if (text.empty())
        return false;
    for (char ch : text)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view text)
{
    if (!is_integer_literal(text))
        throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    if (text.front() == '+')
        text.remove_prefix(1);
    return mpz_class(std::string(text), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const std::string original(text);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '-')
            throw std::invalid_argument("not a rational number: '" + original + "'");
        mpz_class den = parse_integer(den_text);
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + original + "'");
        Rational value(num, den);
        value.canonicalize();
        return value;
    }

    if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot_pos);
        std::string_view frac_part = text.substr(dot_pos + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+'))
            int_part.remove_prefix(1);
        if ((int_part.empty() && frac_part.empty()) ||
            (!int_part.empty() && !is_integer_literal(int_part)) ||
            (!frac_part.empty() && !is_integer_literal(frac_part)) ||
            (!frac_part.empty() && (frac_part.front() == '-' || frac_part.front() == '+')))
            throw std::invalid_argument("not a rational number: '" + original + "'");
        mpz_class num(std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part), 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
        Rational value(negative ? mpz_class(-num) : num, den);
        value.canonicalize();
        return value;
    }

    return Rational(parse_integer(text));
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational dot(const RationalVector& lhs, const RationalVector& rhs)
{
    if (lhs.size() != rhs.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < lhs.size(); ++i)
        sum += lhs[i] * rhs[i];
    return sum;
}

} // namespace wopt
