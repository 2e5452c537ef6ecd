#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

// Arbitrary-precision integer. All coefficient arithmetic in the project is
// exact; there is no floating point anywhere.
using Int = mpz_class;

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const Int& n) : num_(n), den_(1) {}
    Rational(Int num, Int den);

    // Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& s);

    const Int& numerator() const { return num_; }
    const Int& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sgn(num_); }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;  // throws std::domain_error on zero
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

    std::string to_string() const;

private:
    Int num_;
    Int den_;  // > 0; gcd(num_, den_) == 1
    void canonicalize();
};

using Vec = std::vector<Rational>;

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);
Rational dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

/// Element of Z[d, d^-1] for the loop parameter d: a finite map
/// exponent -> nonzero coefficient, kept canonical (no zero terms).
class LaurentPoly {
public:
    LaurentPoly() = default;  // zero
    LaurentPoly(long c) { if (c != 0) terms_[0] = c; }

    static LaurentPoly monomial(long exp, Int coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    // (exponent, coefficient) of a monomial; throws otherwise.
    std::pair<long, Int> monomial_parts() const;

    const std::map<long, Int>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator-(const LaurentPoly& o) const { return *this + (-o); }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string to_string() const;  // e.g. "d^3 + 2 - d^-1"

private:
    std::map<long, Int> terms_;
};

}  // namespace brauer
