#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toricdiv {

using Integer = boost::multiprecision::cpp_int;

/// Error raised for every contract violation in the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(Integer n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(Integer n, Integer d);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    const Integer& num() const noexcept { return num_; }
    const Integer& den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }
    int sign() const noexcept { return num_.sign(); }

    Integer floor() const;
    Rational frac() const { return *this - Rational(floor()); }
    Rational abs() const { return num_ < 0 ? -*this : *this; }
    Rational inverse() const;

    double to_double() const;
    std::string str() const;

    Rational operator-() const { return Rational(Integer(-num_), den_, raw_tag{}); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct raw_tag {};
    Rational(Integer n, Integer d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();

    Integer num_{0};
    Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace toricdiv
