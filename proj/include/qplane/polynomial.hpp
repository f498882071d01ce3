#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "qplane/rational.hpp"

namespace qplane {

/// Polynomial c2*t^2 + c1*t + c0 in the single variable t.
///
/// Every Hilbert polynomial handled by this project has degree at most 2, so
/// the representation is fixed-size; nothing here multiplies polynomials.
class HilbPoly {
public:
    HilbPoly() = default;
    HilbPoly(Rat c2, Rat c1, Rat c0) : c_{std::move(c0), std::move(c1), std::move(c2)} {}

    static HilbPoly constant(Rat c0) { return {Rat(0), Rat(0), std::move(c0)}; }
    static HilbPoly linear(Rat c1, Rat c0) { return {Rat(0), std::move(c1), std::move(c0)}; }

    /// Coefficient of t^i, i in 0..2.
    const Rat& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    const Rat& c2() const { return c_[2]; }
    const Rat& c1() const { return c_[1]; }
    const Rat& c0() const { return c_[0]; }

    /// -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return degree() < 0; }
    /// Coefficient of the highest nonzero power; zero for the zero polynomial.
    Rat leading() const;

    Rat operator()(const Rat& t) const;

    HilbPoly& operator+=(const HilbPoly& o);
    HilbPoly& operator-=(const HilbPoly& o);
    HilbPoly& operator*=(const Rat& k);
    HilbPoly& operator/=(const Rat& k);

    friend HilbPoly operator+(HilbPoly a, const HilbPoly& b) { return a += b; }
    friend HilbPoly operator-(HilbPoly a, const HilbPoly& b) { return a -= b; }
    friend HilbPoly operator*(HilbPoly a, const Rat& k) { return a *= k; }
    friend HilbPoly operator*(const Rat& k, HilbPoly a) { return a *= k; }
    friend HilbPoly operator/(HilbPoly a, const Rat& k) { return a /= k; }

    friend bool operator==(const HilbPoly&, const HilbPoly&) = default;

    std::string to_string() const;

private:
    std::array<Rat, 3> c_{};  // c_[i] is the coefficient of t^i
};

std::ostream& operator<<(std::ostream& os, const HilbPoly& p);

/// Expansion of C(t - shift + 2, 2) = (t - shift + 1)(t - shift + 2) / 2,
/// the Hilbert polynomial of R(-shift). binom2(0) is P_R.
HilbPoly binom2(std::int64_t shift);

/// Order by growth as t -> infinity, i.e. lexicographic on (c2, c1, c0).
std::strong_ordering lex_compare(const HilbPoly& p, const HilbPoly& q);

/// P divided by its leading coefficient. Throws InvalidInput for P = 0.
HilbPoly slope(const HilbPoly& p);

/// Q(t) = P(t + c).
HilbPoly shift_poly(const HilbPoly& p, const BigInt& c);

}  // namespace qplane
