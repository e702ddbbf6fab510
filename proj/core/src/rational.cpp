#include "cliffinv/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace cliffinv {

using boost::multiprecision::gcd;

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("Rational: zero denominator");
    if (den_.sign() < 0) {
        num_.backend().negate();
        den_.backend().negate();
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r(*this);
    r.num_.backend().negate();
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (o.num_.is_zero())
        return *this;
    if (num_.is_zero()) {
        *this = o;
        return *this;
    }
    // Knuth-style: work with g = gcd(den, o.den) to keep intermediates small.
    Integer g = gcd(den_, o.den_);
    if (g == 1) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    } else {
        Integer t = num_ * (o.den_ / g) + o.num_ * (den_ / g);
        Integer d = den_ / g * o.den_;
        Integer g2 = gcd(t, g);
        if (g2 == 1) {
            num_ = std::move(t);
            den_ = std::move(d);
        } else {
            num_ = t / g2;
            den_ = d / g2;
        }
    }
    if (num_.is_zero())
        den_ = 1;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (num_.is_zero())
        return *this;
    if (o.num_.is_zero()) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    // Cross-reduce before multiplying.
    Integer g1 = gcd(num_, o.den_);
    Integer g2 = gcd(o.num_, den_);
    num_ = (g1 == 1 ? num_ : Integer(num_ / g1)) * (g2 == 1 ? o.num_ : Integer(o.num_ / g2));
    den_ = (g2 == 1 ? den_ : Integer(den_ / g2)) * (g1 == 1 ? o.den_ : Integer(o.den_ / g1));
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero())
        throw std::domain_error("Rational: division by zero");
    Rational inv(o.den_, o.num_);
    return *this *= inv;
}

Rational Rational::pow2(long k) {
    Integer p = Integer(1) << static_cast<unsigned>(k < 0 ? -k : k);
    return k >= 0 ? Rational(p) : Rational(Integer(1), p);
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
    }
}

std::size_t Rational::hash() const {
    std::size_t seed = hash_integer(num_);
    hash_mix(seed, hash_integer(den_));
    return seed;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::size_t hash_integer(const Integer& v) {
    // FNV-1a over the normalized limbs; cpp_int keeps a canonical limb count.
    const auto& b = v.backend();
    std::size_t h = 14695981039346656037ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (unsigned i = 0; i < b.size(); ++i)
        mix(static_cast<std::uint64_t>(b.limbs()[i]));
    mix(v.sign() < 0 ? 1u : 0u);
    return h;
}

} // namespace cliffinv
