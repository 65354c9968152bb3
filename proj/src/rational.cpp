#include "twodist/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace twodist {

namespace {

using wide = __int128;

std::int64_t narrow(wide x)
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(x);
}

wide gcd_wide(wide a, wide b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Rational make(wide num, wide den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(narrow(num), narrow(den));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("rational overflow");
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    num_ = num;
    den_ = den;
}

Rational Rational::operator-() const
{
    return make(-static_cast<wide>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs)
{
    return *this = make(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                        static_cast<wide>(den_) * rhs.den_);
}

Rational& Rational::operator-=(const Rational& rhs)
{
    return *this = make(static_cast<wide>(num_) * rhs.den_ - static_cast<wide>(rhs.num_) * den_,
                        static_cast<wide>(den_) * rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs)
{
    return *this = make(static_cast<wide>(num_) * rhs.num_, static_cast<wide>(den_) * rhs.den_);
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.num_ == 0)
        throw std::domain_error("rational division by zero");
    return *this = make(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    wide lhs = static_cast<wide>(a.num_) * b.den_;
    wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text)
{
    auto parse_int = [](std::string_view s) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
        return value;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.str();
}

}  // namespace twodist
