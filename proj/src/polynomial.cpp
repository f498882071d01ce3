#include "qplane/polynomial.hpp"

#include <sstream>

#include "qplane/errors.hpp"

namespace qplane {

int HilbPoly::degree() const {
    for (int i = 2; i >= 0; --i)
        if (!coeff(i).is_zero())
            return i;
    return -1;
}

Rat HilbPoly::leading() const {
    int d = degree();
    return d < 0 ? Rat(0) : coeff(d);
}

Rat HilbPoly::operator()(const Rat& t) const { return (c2() * t + c1()) * t + c0(); }

HilbPoly& HilbPoly::operator+=(const HilbPoly& o) {
    for (std::size_t i = 0; i < 3; ++i)
        c_[i] += o.c_[i];
    return *this;
}

HilbPoly& HilbPoly::operator-=(const HilbPoly& o) {
    for (std::size_t i = 0; i < 3; ++i)
        c_[i] -= o.c_[i];
    return *this;
}

HilbPoly& HilbPoly::operator*=(const Rat& k) {
    for (auto& c : c_)
        c *= k;
    return *this;
}

HilbPoly& HilbPoly::operator/=(const Rat& k) {
    for (auto& c : c_)
        c /= k;
    return *this;
}

std::string HilbPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 2; i >= 0; --i) {
        const Rat& c = coeff(i);
        if (c.is_zero())
            continue;
        Rat mag = c.sign() < 0 ? -c : c;
        if (!first)
            os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << '-';
        bool unit = mag == Rat(1);
        if (i == 0 || !unit)
            os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")");
        if (i >= 1)
            os << 't';
        if (i == 2)
            os << "^2";
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HilbPoly& p) { return os << p.to_string(); }

HilbPoly binom2(std::int64_t shift) {
    // (t - c + 1)(t - c + 2) / 2 = (t^2 + (3 - 2c) t + (c - 1)(c - 2)) / 2
    BigInt c = shift;
    return {Rat(BigInt(1), BigInt(2)), Rat(BigInt(3 - 2 * c), BigInt(2)),
            Rat(BigInt((c - 1) * (c - 2)), BigInt(2))};
}

std::strong_ordering lex_compare(const HilbPoly& p, const HilbPoly& q) {
    for (int i = 2; i >= 0; --i)
        if (auto cmp = p.coeff(i) <=> q.coeff(i); cmp != 0)
            return cmp;
    return std::strong_ordering::equal;
}

HilbPoly slope(const HilbPoly& p) {
    if (p.is_zero())
        throw InvalidInput("slope undefined for the zero polynomial");
    return p / p.leading();
}

HilbPoly shift_poly(const HilbPoly& p, const BigInt& c) {
    Rat k(c);
    return {p.c2(), Rat(2) * k * p.c2() + p.c1(), p.c2() * k * k + p.c1() * k + p.c0()};
}

}  // namespace qplane
