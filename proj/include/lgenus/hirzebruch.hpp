#ifndef LGENUS_HIRZEBRUCH_HPP
#define LGENUS_HIRZEBRUCH_HPP

#include <vector>

#include "lgenus/series.hpp"

namespace lgenus {

/// Bernoulli number beta_n of x/(e^x - 1), from the exact recurrence
/// sum_{j<=n} binomial(n+1, j) beta_j = 0.  Memoized.
Rational bernoulli(int n);

/// Classical positive Bernoulli number B_i = |beta_{2i}|, i >= 1.
Rational bernoulli_classical(int i);

class BernoulliTable {
public:
    explicit BernoulliTable(int n_max);
    const Rational& value(int n) const;
    int size() const { return static_cast<int>(values_.size()); }

private:
    std::vector<Rational> values_;
};

// The series builders below each construct their value along two independent
// routes and fail loudly if the routes disagree.  Results are cached per
// precision and shared read-only.

PowerSeries tanh_series(int precision);
PowerSeries tanh_series_bernoulli(int precision);   // closed-form coefficients
PowerSeries tanh_series_hyperbolic(int precision);  // sinh/cosh quotient

/// h(x) = x / tanh(x), the characteristic series of the L-genus.
PowerSeries h_series(int precision);
PowerSeries h_series_bernoulli(int precision);
PowerSeries h_series_division(int precision);

/// g(x) = (1/8)(h(3x)/h(x) - 1) = tanh^2(x) / (3 + tanh^2(x)).
PowerSeries g_series(int precision);
PowerSeries g_series_h_ratio(int precision);
PowerSeries g_series_tanh(int precision);

/// Reversion of tanh (the artanh series); cached.
PowerSeries artanh_series(int precision);

/// a_i = (h(x))_{2i};  b_i = (g(x))_{2i}.
Rational a_coeff(int i);
Rational b_coeff(int i);

/// Coefficient of x^{2i} in h(x)^l, 2i <= precision.
Rational a_power_coeff(const Int& l, int i, int precision);

/// A coefficient family for table dumps: a_i, b_i, or the x^{2i} coefficients
/// of h^l.
struct CoefficientFamily {
    enum class Kind { A, B, APower };
    Kind kind;
    Int power;                     // meaningful for APower only
    std::vector<Rational> values;  // index i (b starts at 1, values[0] = 0)

    static CoefficientFamily a(int i_max);
    static CoefficientFamily b(int i_max);
    static CoefficientFamily a_power(const Int& l, int i_max);
};

/// Coefficients (z^0..z^j) of the unique degree-j integer polynomial T_j with
/// T_j(t + 1/t - 2) = t^j + t^{-j} - 2.  The identity is re-verified by
/// Laurent substitution before returning; leading coefficient 1, zero
/// constant term.
std::vector<Int> adams_T_polynomial(int j);

/// Multipliers m_1..m_k of the twisting bundle; every m_j must be 2-integral
/// (odd denominator).
class BundleCoefficients {
public:
    BundleCoefficients(int k, std::vector<Rational> m);

    static BundleCoefficients zero(int k);
    static BundleCoefficients from_integers(const std::vector<long>& m);

    int k() const { return k_; }
    /// r = nu2(k).
    long r() const;
    const std::vector<Rational>& m() const { return m_; }
    const Rational& m_at(int j) const;  // 1-based
    bool all_integer() const;

private:
    int k_;
    std::vector<Rational> m_;
};

/// p_1 coefficient 8 * sum_j j^2 m_j.
Rational p1_of_zeta(const BundleCoefficients& zeta);

/// Total Pontrjagin class prod_j ((1 + 9 j^2 x^2)/(1 + j^2 x^2))^{m_j},
/// truncated; the x^2 coefficient is checked against p1_of_zeta.
PowerSeries pontrjagin_total(const BundleCoefficients& zeta, int precision);

/// L-class prod_j (1 + 8 g(j x))^{m_j}, cross-checked against the equal
/// product prod_j (h(3jx)/h(jx))^{m_j}.
PowerSeries l_class_of_zeta(const BundleCoefficients& zeta, int precision);

}  // namespace lgenus

#endif
