#ifndef LGENUS_SERIES_HPP
#define LGENUS_SERIES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lgenus/rational.hpp"
#include "lgenus/valuation.hpp"

namespace lgenus {

class LaurentSeries;

/// Dense truncated formal power series over Rational.  A value of precision P
/// stores the exact coefficients of x^0..x^P; nothing is known beyond P and
/// reading past the precision throws (never a silent zero).  Values are
/// immutable after construction and all operations are pure.
///
/// Precision propagation: binary ring ops take the minimum of the operand
/// precisions; derivative drops it by one; compose(F, G) guarantees
/// min(prec(F) * ord(G), prec(G)); reversion preserves the input precision.
class PowerSeries {
public:
    /// Zero series of the given precision (>= 0).
    explicit PowerSeries(int precision);
    /// Coefficients c[0..n]; precision = n.
    explicit PowerSeries(std::vector<Rational> coeffs);

    static PowerSeries constant(const Rational& c, int precision);
    static PowerSeries identity(int precision);  // the series x

    int precision() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }

    /// Exact coefficient of x^i; throws std::out_of_range for i < 0 or
    /// i > precision.
    const Rational& coeff(int i) const;

    /// Index of the first nonzero stored coefficient; infinity when the
    /// series vanishes identically up to its precision.
    ExtInt order() const;

    PowerSeries truncated(int new_precision) const;  // new_precision <= precision
    PowerSeries derivative() const;
    PowerSeries scaled(const Rational& c) const;               // c * f
    PowerSeries with_argument_scaled(const Rational& c) const;  // f(c x)

    PowerSeries operator-() const;
    friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
    friend PowerSeries operator+(const PowerSeries& f, const Rational& c);
    friend PowerSeries operator-(const PowerSeries& f, const Rational& c);

    /// Strict equality: same precision and identical coefficients.
    friend bool operator==(const PowerSeries& f, const PowerSeries& g) {
        return f.c_ == g.c_;
    }
    friend bool operator!=(const PowerSeries& f, const PowerSeries& g) {
        return !(f == g);
    }

private:
    std::vector<Rational> c_;  // index i <-> coefficient of x^i
};

/// Formal Laurent series with finitely many negative-exponent terms, stored
/// densely on the exponent window [lowest_exponent, precision].  Coefficients
/// below the window are exact zeros; reading above the precision throws.
class LaurentSeries {
public:
    /// Coefficients for exponents low, low+1, ..., low + coeffs.size() - 1.
    LaurentSeries(int low, std::vector<Rational> coeffs);

    static LaurentSeries from(const PowerSeries& f);

    int lowest_exponent() const { return low_; }
    int precision() const { return low_ + static_cast<int>(c_.size()) - 1; }

    /// Coefficient of x^i: stored value on the window, 0 below it; throws
    /// std::out_of_range above the precision.
    Rational coeff(int i) const;

    ExtInt order() const;

    /// Coefficient of x^{-1} (0 when the window starts above -1; throws when
    /// the precision lies below -1).
    Rational residue() const;

    /// Value-equal copy whose leading zero coefficients are dropped.
    LaurentSeries trimmed() const;

    /// Power-series view; requires lowest_exponent >= 0.
    PowerSeries as_power_series() const;

    LaurentSeries derivative() const;
    LaurentSeries scaled(const Rational& c) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g);
    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);

private:
    int low_;
    std::vector<Rational> c_;
};

/// True when the two series agree on every exponent both of them determine.
bool agree(const PowerSeries& f, const PowerSeries& g);
bool agree(const LaurentSeries& f, const LaurentSeries& g);

/// Multiplicative inverse of a unit power series (g(0) != 0), same precision.
PowerSeries invert_unit(const PowerSeries& g);

/// Quotient f/g of unit denominator, as a power series (ord(g) = 0 required).
PowerSeries divide_unit(const PowerSeries& f, const PowerSeries& g);

/// f / x^r; the first r coefficients must vanish.
PowerSeries shifted_down(const PowerSeries& f, int r);

/// Exact quotient h with h * g = f up to the guaranteed precision;
/// lowest_exponent(h) = ord(f) - ord(g).  Throws when g vanishes identically
/// up to its precision.
LaurentSeries divide(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries divide(const PowerSeries& f, const PowerSeries& g);

/// Substitution F(G(y)) for G(0) = 0.
PowerSeries compose(const PowerSeries& F, const PowerSeries& G);
/// Laurent substitution; when F has negative exponents, additionally requires
/// G'(0) != 0 so that negative powers of G are Laurent series.
LaurentSeries compose(const LaurentSeries& F, const PowerSeries& G);

/// (Res_x F, Res_y (F o G) G') for G(0) = 0, G'(0) != 0.  The two components
/// are equal for every admissible pair; both are returned so callers can
/// check rather than assume.
std::pair<Rational, Rational> residue_change_of_variable(const LaurentSeries& F,
                                                         const PowerSeries& G);

/// Compositional inverse: the unique G with G(0) = 0 and F(G(y)) = y, for
/// F(0) = 0 and F'(0) != 0, computed by the triangular induction on the
/// coefficients of the powers of G.  Output precision equals the input's.
PowerSeries revert(const PowerSeries& F);
/// As above, certifying p-integrality throughout: requires p-integral input
/// coefficients and a p-unit linear coefficient, and checks that every output
/// coefficient is p-integral.
PowerSeries revert(const PowerSeries& F, unsigned long p);

/// The unique power series phi with phi(0) = 1 and phi^q = f, for f(0) = 1
/// and gcd(p, q) = 1, built as v(f - 1) where v is the reversion-derived
/// q-th root of 1 + x.  Certifies p-integrality.
PowerSeries qth_root(const PowerSeries& f, unsigned long q, unsigned long p);

/// f^{m/q} via (f^{1/q})^m, cross-checked against (f^m)^{1/q}; the two
/// evaluation orders must agree exactly.
PowerSeries rational_power(const PowerSeries& f, long m, unsigned long q,
                           unsigned long p);

/// f^l by binary exponentiation, truncated at the precision of f.
PowerSeries pow_int(const PowerSeries& f, const Int& l);

/// f^m for unit f, m possibly negative (inverts first).
PowerSeries pow_signed(const PowerSeries& f, const Int& m);

struct ValuationBoundViolation {
    int index;
    ExtInt actual;
    long bound;
};

/// Checks nu2(c_i) >= nu2(l) - nu2(i) for every coefficient c_i of f^l,
/// 1 <= i <= precision.  Requires 2-integral input and l >= 1; returns the
/// offending indices (empty list expected).
std::vector<ValuationBoundViolation> verify_valuation_bound(const PowerSeries& f,
                                                            const Int& l);

}  // namespace lgenus

#endif
