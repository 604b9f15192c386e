#include "mdr/rational.hpp"

#include <functional>
#include <ostream>

namespace mdr {

std::ostream& operator<<(std::ostream& os, const BigInt& n) { return os << n.str(); }

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den.is_zero()) fail(ErrKind::Parse, "zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        fail(ErrKind::Parse, "bad rational literal '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    Rational base = e < 0 ? inv() : *this;
    unsigned long n = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    if (is_integer()) return num().str();
    return num().str() + "/" + den().str();
}

size_t Rational::hash() const {
    std::hash<std::string> h;
    return h(str());
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace mdr
