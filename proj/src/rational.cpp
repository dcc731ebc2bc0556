#include "wsnash/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace wsnash {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_digits(std::string_view s) {
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal: '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        mpz_class d = parse_digits(den);
        if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        value = make_rational(parse_digits(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        // allow ".5" and "5." but not "."
        if (whole.empty() && frac.empty())
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
            throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
        mpz_class scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class units = whole.empty() ? mpz_class(0) : parse_digits(whole);
        mpz_class sub = frac.empty() ? mpz_class(0) : parse_digits(frac);
        value = make_rational(units * scale + sub, scale);
    } else {
        if (!all_digits(s))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        value = Rational(parse_digits(s));
    }
    if (negative) value = -value;
    return value;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const Rational& value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", to_double(value));
    return buf;
}

double to_double(const Rational& value) {
    return value.get_d();
}

mpz_class ceil_rational(const Rational& value) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
    return q;
}

} // namespace wsnash
