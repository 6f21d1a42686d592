#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>

namespace partlog {

/**
 * Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
 * den >= 1, zero is 0/1. All arithmetic is exact; nothing in this type
 * ever rounds.
 */
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(n) {}
    Rational(unsigned long n) : q_(n) {}
    Rational(const mpz_class& n) : q_(n) {}
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);

    // Accepts "<num>" or "<num>/<den>", base 10. Throws std::invalid_argument
    // on malformed input or zero denominator.
    static Rational from_string(const std::string& text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_positive() const { return sgn(q_) > 0; }
    int sign() const { return sgn(q_); }

    Rational reciprocal() const;            // throws std::domain_error on zero
    Rational pow(unsigned long e) const;    // exact integer power

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    // -1, 0, +1
    int compare(const Rational& o) const { return cmp(q_, o.q_); }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // Canonical form: "<num>" when integral, else "<num>/<den>".
    std::string str() const;

    double to_double() const { return q_.get_d(); }  // diagnostics only

    const mpq_class& mpq() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // invariant: canonical
};

Rational abs(const Rational& x);
std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace partlog
