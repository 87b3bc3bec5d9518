#include "fsind/qz_value.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fsind {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n)
{
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

QZValue::QZValue(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0)
        throw std::invalid_argument("QZValue: zero denominator");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    numerator = floor_mod(numerator, denominator);
    const std::int64_t g = std::gcd(numerator, denominator);
    num_ = numerator / g;
    den_ = denominator / g;
    if (num_ == 0)
        den_ = 1;
}

std::complex<double> QZValue::to_complex() const
{
    // Exact values at the quarter points keep table arithmetic free of 1e-17 noise.
    if (num_ == 0)
        return {1.0, 0.0};
    if (den_ == 2)
        return {-1.0, 0.0};
    if (den_ == 4)
        return num_ == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
    const double angle = 2.0 * std::numbers::pi * to_double();
    return {std::cos(angle), std::sin(angle)};
}

QZValue QZValue::operator-() const { return {-num_, den_}; }

QZValue& QZValue::operator+=(const QZValue& other)
{
    const std::int64_t l = std::lcm(den_, other.den_);
    *this = QZValue(num_ * (l / den_) + other.num_ * (l / other.den_), l);
    return *this;
}

QZValue& QZValue::operator-=(const QZValue& other) { return *this += -other; }

QZValue QZValue::scaled(std::int64_t k) const
{
    return {floor_mod(k, den_) * num_, den_};
}

std::string QZValue::to_string() const
{
    if (num_ == 0)
        return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

QZValue QZValue::parse(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return {std::stoll(text), 1};
        return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("QZValue: cannot parse '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const QZValue& v) { return os << v.to_string(); }

} // namespace fsind
