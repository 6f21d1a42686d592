#include "partlog/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace partlog {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
}

Rational Rational::pow(unsigned long e) const {
    if (e == 0) return Rational(1);
    // num and den are coprime, so num^e / den^e is already canonical.
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(q_.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(q_.get_mpq_t()), e);
    return Rational(std::move(r));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

}  // namespace partlog
