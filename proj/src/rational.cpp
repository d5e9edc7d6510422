#include "normsurf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace normsurf {

std::string rational_to_string(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

[[noreturn]] void bad_literal(std::string_view text) {
    throw std::invalid_argument("not an exact rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
        if (den_part.find('/') != std::string_view::npos)
            bad_literal(text);
    }

    bool negative = false;
    if (!num_part.empty() && (num_part.front() == '-' || num_part.front() == '+')) {
        negative = num_part.front() == '-';
        num_part.remove_prefix(1);
    }
    if (!all_digits(num_part))
        bad_literal(text);

    Integer num(std::string(num_part));
    if (negative)
        num = -num;

    Integer den = 1;
    if (!den_part.empty() || text.find('/') != std::string_view::npos) {
        if (!all_digits(den_part))
            bad_literal(text);
        den = Integer(std::string(den_part));
        if (den == 0)
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

Integer floor_rational(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);  // > 0 by canonical form
    Integer t = num / den;               // truncates toward zero
    if (num < 0 && t * den != num)
        --t;
    return t;
}

Integer ceil_rational(const Rational& q) {
    return -floor_rational(Rational(-q));
}

}  // namespace normsurf
