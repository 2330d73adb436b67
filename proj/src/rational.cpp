#include "bch/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bch {

namespace {

bool valid_integer(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

mpz_class to_mpz(std::string_view s)
{
    if (s[0] == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<signed long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(mpz_class(static_cast<signed long>(num)), mpz_class(static_cast<signed long>(den)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    mpz_class d = to_mpz(den);
    if (d == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(to_mpz(num), d));
}

std::string Rational::fraction_string() const
{
    return numerator() + "/" + denominator();
}

std::string Rational::to_string() const
{
    return is_integer() ? numerator() : fraction_string();
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::reciprocal() const
{
    if (is_zero())
        throw std::domain_error("Rational: reciprocal of zero");
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

}  // namespace bch
