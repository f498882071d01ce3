#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qplane {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number kept in lowest terms with a positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) : v_(n) {}  // NOLINT: implicit on purpose, integers are rationals
    explicit Rat(const BigInt& n) : v_(n) {}
    Rat(const BigInt& num, const BigInt& den);

    BigInt numerator() const;
    BigInt denominator() const;

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_.sign(); }

    /// Throws InvalidInput if the value is not an integer.
    BigInt to_integer() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const;

    /// Parses an integer or "p/q" with q != 0. Throws InvalidInput on malformed text.
    static Rat parse(std::string_view text);

    static Rat half(std::int64_t n) { return Rat(BigInt(n), BigInt(2)); }

private:
    using Value = boost::multiprecision::cpp_rational;
    explicit Rat(Value v) : v_(std::move(v)) {}
    Value v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// floor and ceil of an exact rational.
BigInt floor(const Rat& r);
BigInt ceil(const Rat& r);

}  // namespace qplane
