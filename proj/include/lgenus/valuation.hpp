#ifndef LGENUS_VALUATION_HPP
#define LGENUS_VALUATION_HPP

#include <string>
#include <vector>

#include "lgenus/rational.hpp"

namespace lgenus {

/// An integer extended with +infinity, the codomain of p-adic valuations.
/// Finite values may be negative (valuations of non-p-integral rationals).
/// infinity + x = infinity, and infinity compares greater than every finite
/// value.
class ExtInt {
public:
    ExtInt() : ExtInt(0L) {}
    ExtInt(long v) : inf_(false), v_(v) {}  // NOLINT: implicit by design
    static ExtInt infinity();

    bool is_infinite() const { return inf_; }
    /// Finite value; throws std::logic_error when infinite.
    long value() const;

    std::string str() const;  // decimal, or "inf"

    ExtInt operator+(const ExtInt& o) const;
    ExtInt operator+(long n) const { return *this + ExtInt(n); }
    ExtInt operator-(long n) const { return *this + ExtInt(-n); }

    friend bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
    friend bool operator<(const ExtInt& a, const ExtInt& b) {
        if (a.inf_) return false;
        return b.inf_ || a.v_ < b.v_;
    }
    friend bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
    friend bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const ExtInt& v);

private:
    bool inf_;
    long v_;
};

ExtInt min(const ExtInt& a, const ExtInt& b);

/// Exponent of the prime p in n; infinity for n = 0.
ExtInt nu_p(const Int& n, unsigned long p);
/// nu_p(num) - nu_p(den); total on Rational, infinity exactly at 0.
ExtInt nu_p(const Rational& q, unsigned long p);
/// Sum of base-p digits of n >= 0.  Throws on negative n.
long kappa_p(const Int& n, unsigned long p);

// p = 2 fast paths (bit scan / popcount).
ExtInt nu2(const Int& n);
ExtInt nu2(const Rational& q);
long kappa2(const Int& n);

/// nu2(n!) as n - kappa2(n).  Equals the Legendre sum of floor(n/2^i).
Int nu2_factorial(const Int& n);

/// 2-order of binomial(n, k) as kappa2(k) + kappa2(n-k) - kappa2(n).
/// Requires 0 <= k <= n.
long nu2_binomial(const Int& n, const Int& k);

/// nu2(n^i - (-1)^i) for odd n, i >= 1, by the split formula:
/// nu2(n+1) for odd i, nu2(n^2-1) + nu2(i) - 1 for even i.
/// Infinite only for n = 1, i even.
ExtInt nu2_power_pm(const Int& n, unsigned long i);

/// Evaluated digit-sum inequality for parts (i1, ..., is), i1 >= 1:
/// lhs = nu2(i1) + kappa2(i1) + ... + kappa2(is), rhs = nu2(i1+...+is) + 1.
struct DigitInequality {
    long lhs;
    long rhs;
    bool holds;  // lhs >= rhs
};
DigitInequality digit_inequality(const std::vector<Int>& parts);

/// nu_p(q) >= 0, i.e. q lies in the p-local integers.
bool is_p_integral(const Rational& q, unsigned long p);

/// a = b mod 2^s in the 2-local integers, i.e. nu2(a - b) >= s.
bool congruent_mod_2pow(const Rational& a, const Rational& b, long s);

}  // namespace lgenus

#endif
