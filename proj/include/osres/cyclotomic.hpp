#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "osres/rational.hpp"

namespace osres {

// Element of the cyclotomic field Q(zeta_n): a polynomial in zeta_n reduced
// modulo the n-th cyclotomic polynomial Phi_n. Phi_n is irreducible over Q,
// so the quotient is a field and zero-testing is unambiguous.
//
// Conductor 1 represents plain Q; rationals embed into any Q(zeta_n), so
// arithmetic silently promotes conductor-1 operands. Mixing two conductors
// > 1 is an error ("incompatible fields").
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
    Cyclotomic(long n) : conductor_(1), coeffs_{Rational(n)} {}
    explicit Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}
    Cyclotomic(int conductor, std::vector<Rational> coeffs);

    // zeta_n as a field element.
    static Cyclotomic zeta(int conductor);
    // r embedded into Q(zeta_n).
    static Cyclotomic from_rational(const Rational& r, int conductor);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // Value as a rational; requires is_rational().
    Rational rational_value() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this / o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Multiplicative inverse via extended gcd with Phi_n.
    Cyclotomic inverse() const;

    std::string str() const;

private:
    int conductor_;
    std::vector<Rational> coeffs_;  // length = deg Phi_n, index k holds coeff of zeta^k

    static void promote(Cyclotomic& a, Cyclotomic& b);
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

// Monic n-th cyclotomic polynomial as its coefficient vector, constant term
// first. Memoized.
const std::vector<Rational>& cyclotomic_polynomial(int n);

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }
std::size_t pivot_weight(const Cyclotomic& c);

}  // namespace osres
