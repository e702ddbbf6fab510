#ifndef CLIFFINV_CYCLO8_HPP
#define CLIFFINV_CYCLO8_HPP

#include "cliffinv/rational.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace cliffinv {

/// Element of the cyclotomic field Q(zeta_8), zeta = exp(i*pi/4), in the
/// power basis c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 with zeta^4 = -1.
/// The representation is unique, so equality and hashing are structural.
///
/// i is exactly zeta^2 and sqrt(2) is exactly zeta - zeta^3; every entry of a
/// Clifford-group matrix lives here.
class Cyclo8 {
public:
    Cyclo8() = default;
    Cyclo8(long long n) : c_{Rational(n), {}, {}, {}} {}  // NOLINT: implicit by design
    Cyclo8(Rational r) : c_{std::move(r), {}, {}, {}} {}  // NOLINT
    Cyclo8(Rational c0, Rational c1, Rational c2, Rational c3)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cyclo8 zero() { return {}; }
    static Cyclo8 one() { return Cyclo8(1); }
    static Cyclo8 zeta() { return Cyclo8(0, 1, 0, 0); }
    static Cyclo8 i() { return Cyclo8(0, 0, 1, 0); }
    static Cyclo8 sqrt2() { return Cyclo8(0, 1, 0, -1); }
    static Cyclo8 inv_sqrt2() { return Cyclo8(0, Rational(1, 2), 0, Rational(-1, 2)); }
    /// zeta^k for any integer k (k mod 8, with zeta^4 = -1).
    static Cyclo8 zeta_pow(long k);
    /// i^k for any integer k.
    static Cyclo8 i_pow(long k) { return zeta_pow(2 * (((k % 4) + 4) % 4)); }

    const Rational& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const;
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

    /// The rational part, provided the value is rational. Throws NotRationalError otherwise.
    Rational as_rational() const;

    Cyclo8 operator-() const;
    Cyclo8& operator+=(const Cyclo8& o);
    Cyclo8& operator-=(const Cyclo8& o);
    Cyclo8& operator*=(const Cyclo8& o);
    Cyclo8& operator*=(const Rational& r);

    friend Cyclo8 operator+(Cyclo8 a, const Cyclo8& b) { return a += b; }
    friend Cyclo8 operator-(Cyclo8 a, const Cyclo8& b) { return a -= b; }
    friend Cyclo8 operator*(Cyclo8 a, const Cyclo8& b) { return a *= b; }
    friend Cyclo8 operator*(Cyclo8 a, const Rational& r) { return a *= r; }
    friend Cyclo8 operator*(const Rational& r, Cyclo8 a) { return a *= r; }

    friend bool operator==(const Cyclo8& a, const Cyclo8& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Cyclo8& a, const Cyclo8& b) { return !(a == b); }

    /// Complex conjugation: the field automorphism zeta -> zeta^7 = -zeta^3.
    Cyclo8 conj() const { return galois(7); }

    /// Galois automorphism zeta -> zeta^k for odd k in {1,3,5,7}.
    Cyclo8 galois(int k) const;

    /// Multiplicative inverse via the product of the three nontrivial Galois
    /// conjugates divided by the rational field norm. Throws std::domain_error on zero.
    Cyclo8 inverse() const;

    /// Canonical form "c0 + c1*z + c2*z^2 + c3*z^3" with rationals "p/q"; exact round-trip.
    std::string str() const;
    static Cyclo8 parse(const std::string& s);

    std::size_t hash() const;

private:
    std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Cyclo8& z);

} // namespace cliffinv

#endif
