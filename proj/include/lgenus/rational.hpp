#ifndef LGENUS_RATIONAL_HPP
#define LGENUS_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace lgenus {

using Int = mpz_class;

/// Exact rational scalar backed by GMP.  Always kept in canonical form:
/// gcd(num, den) = 1 and den > 0, with the sign carried by the numerator.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit by design, 3 means 3/1
    Rational(const Int& n) : q_(n) {}
    Rational(long num, long den);
    Rational(const Int& num, const Int& den);

    /// Parses "a" or "a/b" (optional leading '-').  Throws std::invalid_argument.
    static Rational parse(std::string_view s);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    /// Canonical "num/den" string in lowest terms, e.g. "-8/3", "0/1".
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned long e);

/// Falling-factorial binomial alpha(alpha-1)...(alpha-i+1)/i!, valid for any
/// rational alpha (integral result when alpha is an integer).
Rational generalized_binomial(const Rational& alpha, unsigned long i);

Int factorial(unsigned long n);
Int binomial(const Int& n, const Int& k);

}  // namespace lgenus

#endif
