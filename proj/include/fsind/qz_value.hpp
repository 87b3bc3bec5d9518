#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace fsind {

/// An element of Q/Z, stored as a reduced fraction num/den with 0 <= num < den.
///
/// All twists, form values and character phases live here so that periodicity
/// in k and equality of phases are exact. Only `to_complex` leaves exact land.
class QZValue {
public:
    constexpr QZValue() = default;
    QZValue(std::int64_t numerator, std::int64_t denominator);

    static QZValue zero() { return {}; }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// e^{2 pi i * value}
    std::complex<double> to_complex() const;

    QZValue operator-() const;
    QZValue& operator+=(const QZValue& other);
    QZValue& operator-=(const QZValue& other);
    friend QZValue operator+(QZValue a, const QZValue& b) { return a += b; }
    friend QZValue operator-(QZValue a, const QZValue& b) { return a -= b; }

    /// k * value mod 1.
    QZValue scaled(std::int64_t k) const;

    friend bool operator==(const QZValue&, const QZValue&) = default;
    friend auto operator<=>(const QZValue&, const QZValue&) = default;

    /// "num/den", or "0" for zero.
    std::string to_string() const;
    /// Accepts "a/b" or an integer; reduces mod 1.
    static QZValue parse(const std::string& text);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline QZValue qz_add(const QZValue& a, const QZValue& b) { return a + b; }
inline QZValue qz_scale(std::int64_t k, const QZValue& a) { return a.scaled(k); }

std::ostream& operator<<(std::ostream& os, const QZValue& v);

} // namespace fsind
