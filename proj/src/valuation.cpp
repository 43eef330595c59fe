#include "lgenus/valuation.hpp"

#include <ostream>
#include <stdexcept>

namespace lgenus {

ExtInt ExtInt::infinity() {
    ExtInt v;
    v.inf_ = true;
    return v;
}

long ExtInt::value() const {
    if (inf_) throw std::logic_error("ExtInt: value() of infinity");
    return v_;
}

std::string ExtInt::str() const { return inf_ ? "inf" : std::to_string(v_); }

ExtInt ExtInt::operator+(const ExtInt& o) const {
    if (inf_ || o.inf_) return infinity();
    return ExtInt(v_ + o.v_);
}

std::ostream& operator<<(std::ostream& os, const ExtInt& v) {
    return os << v.str();
}

ExtInt min(const ExtInt& a, const ExtInt& b) { return a < b ? a : b; }

namespace {

void require_prime_base(unsigned long p) {
    if (p < 2) throw std::invalid_argument("valuation: base must be >= 2");
}

long nu_p_positive(Int n, unsigned long p) {
    // n > 0 here.  p = 2 is a bit scan; otherwise strip factors of p.
    if (p == 2) return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
    long count = 0;
    Int q, r;
    for (;;) {
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p);
        if (r != 0) return count;
        ++count;
        n = q;
    }
}

}  // namespace

ExtInt nu_p(const Int& n, unsigned long p) {
    require_prime_base(p);
    if (n == 0) return ExtInt::infinity();
    // nu is insensitive to sign (two's-complement bit scans preserve the
    // lowest set bit, so p = 2 needs no abs either).
    if (p == 2) return ExtInt(static_cast<long>(mpz_scan1(n.get_mpz_t(), 0)));
    return ExtInt(nu_p_positive(::abs(n), p));
}

ExtInt nu_p(const Rational& q, unsigned long p) {
    require_prime_base(p);
    if (q.is_zero()) return ExtInt::infinity();
    return ExtInt(nu_p(q.num(), p).value() - nu_p(q.den(), p).value());
}

long kappa_p(const Int& n, unsigned long p) {
    require_prime_base(p);
    if (n < 0) throw std::invalid_argument("kappa_p: negative argument");
    if (p == 2) return static_cast<long>(mpz_popcount(n.get_mpz_t()));
    Int v = n, q, r;
    long sum = 0;
    while (v != 0) {
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), p);
        sum += static_cast<long>(r.get_ui());
        v = q;
    }
    return sum;
}

ExtInt nu2(const Int& n) { return nu_p(n, 2); }
ExtInt nu2(const Rational& q) { return nu_p(q, 2); }
long kappa2(const Int& n) { return kappa_p(n, 2); }

Int nu2_factorial(const Int& n) {
    if (n < 0) throw std::invalid_argument("nu2_factorial: negative argument");
    return n - kappa2(n);
}

long nu2_binomial(const Int& n, const Int& k) {
    if (k < 0 || n < 0 || k > n)
        throw std::invalid_argument("nu2_binomial: need 0 <= k <= n");
    return kappa2(k) + kappa2(n - k) - kappa2(n);
}

ExtInt nu2_power_pm(const Int& n, unsigned long i) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("nu2_power_pm: n must be odd and positive");
    if (i == 0) throw std::invalid_argument("nu2_power_pm: i must be >= 1");
    if (i % 2 == 1) return nu2(n + 1);
    return nu2(n * n - 1) + nu2(Int(static_cast<long>(i))) - 1;
}

DigitInequality digit_inequality(const std::vector<Int>& parts) {
    if (parts.empty())
        throw std::invalid_argument("digit_inequality: empty tuple");
    if (parts.front() < 1)
        throw std::invalid_argument("digit_inequality: first part must be >= 1");
    Int total = 0;
    long lhs = nu2(parts.front()).value();
    for (const Int& part : parts) {
        if (part < 0)
            throw std::invalid_argument("digit_inequality: negative part");
        lhs += kappa2(part);
        total += part;
    }
    const long rhs = nu2(total).value() + 1;
    return DigitInequality{lhs, rhs, lhs >= rhs};
}

bool is_p_integral(const Rational& q, unsigned long p) {
    return nu_p(q, p) >= ExtInt(0);
}

bool congruent_mod_2pow(const Rational& a, const Rational& b, long s) {
    return nu2(a - b) >= ExtInt(s);
}

}  // namespace lgenus
