#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "dortho/errors.hpp"

namespace dortho {

using Integer = mpz_class;

// Arbitrary-precision rational, always kept canonical (gcd(num,den)=1, den>0).
// Thin wrapper over mpq_class; the wrapper exists because mpq_class does not
// canonicalize values assembled from separate numerator/denominator parts, and
// because we want a single choke point for parsing and printing the "p/q"
// string form used throughout the CLI and serialization layers.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}                 // NOLINT(google-explicit-constructor)
    Rational(long n) : v_((long)n) {}          // NOLINT(google-explicit-constructor)
    Rational(const Integer& n) : v_(n) {}      // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    // Parse "p", "-p", "p/q" (optional sign on p; q > 0 after normalization).
    static Rational parse(const std::string& text);

    const mpq_class& raw() const { return v_; }
    Integer num() const { return Integer(v_.get_num()); }
    Integer den() const { return Integer(v_.get_den()); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // True iff the value is an integer <= 0 (the condition under which a
    // Pochhammer factor in a hypergeometric denominator can vanish).
    bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

    // Integer value; caller must ensure is_integer().
    long to_long() const;

    double to_double() const { return v_.get_d(); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, long exp);

} // namespace dortho
