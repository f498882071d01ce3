#include "qplane/rational.hpp"

#include <charconv>
#include <sstream>

#include "qplane/errors.hpp"

namespace qplane {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size())
        throw InvalidInput("malformed rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            throw InvalidInput("malformed rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw InvalidInput("rational with zero denominator");
    v_ = Value(num, den);
}

BigInt Rat::numerator() const { return boost::multiprecision::numerator(v_); }
BigInt Rat::denominator() const { return boost::multiprecision::denominator(v_); }

BigInt Rat::to_integer() const {
    if (!is_integer())
        throw InvalidInput("expected an integer, got " + to_string());
    return numerator();
}

Rat Rat::operator-() const { return Rat(Value(-v_)); }
Rat& Rat::operator+=(const Rat& o) { v_ += o.v_; return *this; }
Rat& Rat::operator-=(const Rat& o) { v_ -= o.v_; return *this; }
Rat& Rat::operator*=(const Rat& o) { v_ *= o.v_; return *this; }

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw InvalidInput("division by zero");
    v_ /= o.v_;
    return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rat::to_string() const {
    std::ostringstream os;
    os << numerator();
    if (!is_integer())
        os << '/' << denominator();
    return os.str();
}

Rat Rat::parse(std::string_view text) {
    std::string_view t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_integer(t, text));
    BigInt num = parse_integer(trim(t.substr(0, slash)), text);
    std::string_view den_text = trim(t.substr(slash + 1));
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw InvalidInput("malformed rational '" + std::string(text) + "'");
    BigInt den = parse_integer(den_text, text);
    if (den == 0)
        throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

BigInt floor(const Rat& r) {
    BigInt n = r.numerator();
    BigInt d = r.denominator();
    BigInt q = n / d;  // truncates toward zero
    if (n % d != 0 && n.sign() < 0)
        q -= 1;
    return q;
}

BigInt ceil(const Rat& r) { return -floor(-r); }

}  // namespace qplane
