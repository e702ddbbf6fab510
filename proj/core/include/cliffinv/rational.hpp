#ifndef CLIFFINV_RATIONAL_HPP
#define CLIFFINV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cliffinv {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Zero is stored as 0/1. Immutable-style value type: all
/// operations return fresh values, so sharing across threads is safe.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}          // NOLINT: implicit by design
    Rational(const Integer& n) : num_(n), den_(1) {}     // NOLINT
    Rational(Integer num, Integer den);

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
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
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// 2^k for any integer k (negative k gives 1/2^|k|).
    static Rational pow2(long k);

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;
    /// Parses the str() format. Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& s);

    std::size_t hash() const;

private:
    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

std::size_t hash_integer(const Integer& v);

inline void hash_mix(std::size_t& seed, std::size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

} // namespace cliffinv

#endif
