#include "lgenus/hirzebruch.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace lgenus {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_values;  // beta_0, beta_1, ...

void extend_bernoulli_locked(int n) {
    if (bernoulli_values.empty()) bernoulli_values.push_back(Rational(1L));
    // sum_{j<=n} binomial(n+1, j) beta_j = 0 for n >= 1.
    for (int m = static_cast<int>(bernoulli_values.size()); m <= n; ++m) {
        Rational acc;
        for (int j = 0; j < m; ++j) {
            if (bernoulli_values[static_cast<size_t>(j)].is_zero()) continue;
            acc += Rational(binomial(Int(m + 1), Int(j))) *
                   bernoulli_values[static_cast<size_t>(j)];
        }
        bernoulli_values.push_back(-acc / Rational(m + 1));
    }
}

using SeriesCache = std::map<int, PowerSeries>;

PowerSeries cache_or_build(SeriesCache& cache, std::mutex& mu, int precision,
                           PowerSeries (*build)(int)) {
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(precision);
        if (it != cache.end()) return it->second;
    }
    PowerSeries value = build(precision);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(precision, std::move(value)).first->second;
}

PowerSeries build_tanh(int precision) {
    PowerSeries closed = tanh_series_bernoulli(precision);
    if (closed != tanh_series_hyperbolic(precision))
        throw std::logic_error("tanh_series: Bernoulli and sinh/cosh routes disagree");
    return closed;
}

PowerSeries build_h(int precision) {
    PowerSeries closed = h_series_bernoulli(precision);
    if (closed != h_series_division(precision))
        throw std::logic_error("h_series: Bernoulli and division routes disagree");
    return closed;
}

PowerSeries build_g(int precision) {
    PowerSeries from_tanh = g_series_tanh(precision);
    if (from_tanh != g_series_h_ratio(precision))
        throw std::logic_error("g_series: tanh and h-ratio routes disagree");
    return from_tanh;
}

PowerSeries build_artanh(int precision) { return revert(tanh_series(precision), 2); }

}  // namespace

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_bernoulli_locked(n);
    return bernoulli_values[static_cast<size_t>(n)];
}

Rational bernoulli_classical(int i) {
    if (i < 1) throw std::invalid_argument("bernoulli_classical: index must be >= 1");
    return abs(bernoulli(2 * i));
}

BernoulliTable::BernoulliTable(int n_max) {
    if (n_max < 0) throw std::invalid_argument("BernoulliTable: negative size");
    values_.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) values_.push_back(bernoulli(n));
}

const Rational& BernoulliTable::value(int n) const {
    if (n < 0 || n >= size())
        throw std::out_of_range("BernoulliTable: index outside table");
    return values_[static_cast<size_t>(n)];
}

PowerSeries tanh_series_bernoulli(int precision) {
    if (precision < 0)
        throw std::invalid_argument("tanh_series: precision must be >= 0");
    std::vector<Rational> c(static_cast<size_t>(precision) + 1);
    for (int i = 1; 2 * i - 1 <= precision; ++i) {
        // (tanh x)_{2i-1} = 2^{2i} (2^{2i} - 1) beta_{2i} / (2i)!
        Int two_2i;
        mpz_ui_pow_ui(two_2i.get_mpz_t(), 2, static_cast<unsigned long>(2 * i));
        c[static_cast<size_t>(2 * i - 1)] =
            Rational(two_2i) * Rational(two_2i - 1) * bernoulli(2 * i) /
            Rational(factorial(static_cast<unsigned long>(2 * i)));
    }
    return PowerSeries(std::move(c));
}

PowerSeries tanh_series_hyperbolic(int precision) {
    std::vector<Rational> sh(static_cast<size_t>(precision) + 1);
    std::vector<Rational> ch(static_cast<size_t>(precision) + 1);
    for (int i = 0; i <= precision; ++i) {
        const Rational inv_fact =
            Rational(Int(1), factorial(static_cast<unsigned long>(i)));
        if (i % 2 == 1)
            sh[static_cast<size_t>(i)] = inv_fact;
        else
            ch[static_cast<size_t>(i)] = inv_fact;
    }
    return divide_unit(PowerSeries(std::move(sh)), PowerSeries(std::move(ch)));
}

PowerSeries tanh_series(int precision) {
    static std::mutex mu;
    static SeriesCache cache;
    return cache_or_build(cache, mu, precision, &build_tanh);
}

PowerSeries h_series_bernoulli(int precision) {
    std::vector<Rational> c(static_cast<size_t>(precision) + 1);
    for (int i = 0; 2 * i <= precision; ++i) {
        // a_i = 2^{2i} beta_{2i} / (2i)!  (equals 1 at i = 0)
        Int two_2i;
        mpz_ui_pow_ui(two_2i.get_mpz_t(), 2, static_cast<unsigned long>(2 * i));
        c[static_cast<size_t>(2 * i)] =
            Rational(two_2i) * bernoulli(2 * i) /
            Rational(factorial(static_cast<unsigned long>(2 * i)));
    }
    return PowerSeries(std::move(c));
}

PowerSeries h_series_division(int precision) {
    // h = x / tanh x = 1 / (tanh x / x)
    return invert_unit(shifted_down(tanh_series(precision + 1), 1));
}

PowerSeries h_series(int precision) {
    static std::mutex mu;
    static SeriesCache cache;
    return cache_or_build(cache, mu, precision, &build_h);
}

PowerSeries g_series_tanh(int precision) {
    const PowerSeries t = tanh_series(precision);
    const PowerSeries t2 = t * t;
    return divide_unit(t2, t2 + Rational(3L));
}

PowerSeries g_series_h_ratio(int precision) {
    const PowerSeries h = h_series(precision);
    const PowerSeries ratio = divide_unit(h.with_argument_scaled(Rational(3L)), h);
    return (ratio - Rational(1L)).scaled(Rational(1L, 8L));
}

PowerSeries g_series(int precision) {
    static std::mutex mu;
    static SeriesCache cache;
    return cache_or_build(cache, mu, precision, &build_g);
}

PowerSeries artanh_series(int precision) {
    static std::mutex mu;
    static SeriesCache cache;
    return cache_or_build(cache, mu, precision, &build_artanh);
}

Rational a_coeff(int i) {
    if (i < 0) throw std::invalid_argument("a_coeff: negative index");
    return h_series(2 * i).coeff(2 * i);
}

Rational b_coeff(int i) {
    if (i < 1) throw std::invalid_argument("b_coeff: index must be >= 1");
    return g_series(2 * i).coeff(2 * i);
}

Rational a_power_coeff(const Int& l, int i, int precision) {
    if (l < 1) throw std::invalid_argument("a_power_coeff: power must be >= 1");
    if (2 * i > precision)
        throw std::invalid_argument("a_power_coeff: precision exceeded");
    return pow_int(h_series(precision), l).coeff(2 * i);
}

CoefficientFamily CoefficientFamily::a(int i_max) {
    const PowerSeries h = h_series(2 * i_max);
    CoefficientFamily fam{Kind::A, Int(1), {}};
    for (int i = 0; i <= i_max; ++i) fam.values.push_back(h.coeff(2 * i));
    return fam;
}

CoefficientFamily CoefficientFamily::b(int i_max) {
    const PowerSeries g = g_series(2 * i_max);
    CoefficientFamily fam{Kind::B, Int(1), {}};
    for (int i = 0; i <= i_max; ++i) fam.values.push_back(g.coeff(2 * i));
    return fam;
}

CoefficientFamily CoefficientFamily::a_power(const Int& l, int i_max) {
    const PowerSeries hp = pow_int(h_series(2 * i_max), l);
    CoefficientFamily fam{Kind::APower, l, {}};
    for (int i = 0; i <= i_max; ++i) fam.values.push_back(hp.coeff(2 * i));
    return fam;
}

std::vector<Int> adams_T_polynomial(int j) {
    if (j < 1) throw std::invalid_argument("adams_T_polynomial: index must be >= 1");

    // Expand t^n + t^{-n} in w = t + 1/t:  p_0 = 2, p_1 = w,
    // p_{n+1} = w p_n - p_{n-1}.
    std::vector<Int> prev{Int(2)}, cur{Int(0), Int(1)};
    for (int n = 2; n <= j; ++n) {
        std::vector<Int> next(static_cast<size_t>(n) + 1);
        for (size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }

    // T_j(z) = p_j(z + 2) - 2, by Horner.
    std::vector<Int> t{cur.back()};
    for (int i = static_cast<int>(cur.size()) - 2; i >= 0; --i) {
        std::vector<Int> shifted(t.size() + 1);
        for (size_t s = 0; s < t.size(); ++s) {
            shifted[s + 1] += t[s];
            shifted[s] += 2 * t[s];
        }
        shifted[0] += cur[static_cast<size_t>(i)];
        t = std::move(shifted);
    }
    t[0] -= 2;

    if (t.size() != static_cast<size_t>(j) + 1 || t.back() != 1 || t[0] != 0)
        throw std::logic_error("adams_T_polynomial: malformed expansion");

    // Mandatory re-verification: substitute z = t + 1/t - 2 as a Laurent
    // polynomial and compare with t^j + t^{-j} - 2.
    const int window = 2 * j + 1;
    std::vector<Rational> base(static_cast<size_t>(window) + 2);
    base[0] = 1L;   // exponent -1
    base[1] = -2L;  // exponent 0
    base[2] = 1L;   // exponent 1
    const LaurentSeries z_of_t(-1, std::move(base));
    auto constant_at = [window](const Rational& c) {
        return LaurentSeries::from(PowerSeries::constant(c, window));
    };
    LaurentSeries acc = constant_at(Rational(t.back()));
    for (int i = j - 1; i >= 0; --i)
        acc = acc * z_of_t + constant_at(Rational(t[static_cast<size_t>(i)]));
    for (int e = -j; e <= j; ++e) {
        const Rational expected = (e == j || e == -j) ? Rational(1L)
                                  : (e == 0)          ? Rational(-2L)
                                                      : Rational(0L);
        if (acc.coeff(e) != expected)
            throw std::logic_error("adams_T_polynomial: substitution identity failed");
    }
    return t;
}

BundleCoefficients::BundleCoefficients(int k, std::vector<Rational> m)
    : k_(k), m_(std::move(m)) {
    if (k_ < 1) throw std::invalid_argument("BundleCoefficients: k must be >= 1");
    if (m_.size() != static_cast<size_t>(k_))
        throw std::invalid_argument("BundleCoefficients: need exactly k multipliers");
    for (const Rational& mj : m_)
        if (!is_p_integral(mj, 2))
            throw std::invalid_argument(
                "BundleCoefficients: multipliers must be 2-integral");
}

BundleCoefficients BundleCoefficients::zero(int k) {
    return BundleCoefficients(k, std::vector<Rational>(static_cast<size_t>(k)));
}

BundleCoefficients BundleCoefficients::from_integers(const std::vector<long>& m) {
    std::vector<Rational> r(m.begin(), m.end());
    return BundleCoefficients(static_cast<int>(m.size()), std::move(r));
}

long BundleCoefficients::r() const { return nu2(Int(k_)).value(); }

const Rational& BundleCoefficients::m_at(int j) const {
    if (j < 1 || j > k_)
        throw std::out_of_range("BundleCoefficients: multiplier index");
    return m_[static_cast<size_t>(j - 1)];
}

bool BundleCoefficients::all_integer() const {
    for (const Rational& mj : m_)
        if (!mj.is_integer()) return false;
    return true;
}

Rational p1_of_zeta(const BundleCoefficients& zeta) {
    Rational acc;
    for (int j = 1; j <= zeta.k(); ++j)
        acc += Rational(8L * j * j) * zeta.m_at(j);
    return acc;
}

namespace {

PowerSeries raise_to_multiplier(const PowerSeries& base, const Rational& mj) {
    if (mj.is_integer()) return pow_signed(base, mj.num());
    if (!mj.num().fits_slong_p())
        throw std::invalid_argument("multiplier numerator too large");
    return rational_power(base, mj.num().get_si(), mj.den().get_ui(), 2);
}

}  // namespace

PowerSeries pontrjagin_total(const BundleCoefficients& zeta, int precision) {
    if (precision < 2)
        throw std::invalid_argument("pontrjagin_total: precision must be >= 2");
    PowerSeries product = PowerSeries::constant(Rational(1L), precision);
    for (int j = 1; j <= zeta.k(); ++j) {
        if (zeta.m_at(j).is_zero()) continue;
        std::vector<Rational> nc(static_cast<size_t>(precision) + 1);
        std::vector<Rational> dc(static_cast<size_t>(precision) + 1);
        nc[0] = 1L;
        nc[2] = Rational(9L * j * j);
        dc[0] = 1L;
        dc[2] = Rational(1L * j * j);
        const PowerSeries base =
            divide_unit(PowerSeries(std::move(nc)), PowerSeries(std::move(dc)));
        product = product * raise_to_multiplier(base, zeta.m_at(j));
    }
    if (product.coeff(2) != p1_of_zeta(zeta))
        throw std::logic_error("pontrjagin_total: degree-2 coefficient mismatch");
    return product;
}

PowerSeries l_class_of_zeta(const BundleCoefficients& zeta, int precision) {
    const PowerSeries g = g_series(precision);
    const PowerSeries h = h_series(precision);
    PowerSeries via_g = PowerSeries::constant(Rational(1L), precision);
    PowerSeries via_h = PowerSeries::constant(Rational(1L), precision);
    for (int j = 1; j <= zeta.k(); ++j) {
        const Rational& mj = zeta.m_at(j);
        if (mj.is_zero()) continue;
        const PowerSeries base_g =
            g.with_argument_scaled(Rational(j)).scaled(Rational(8L)) + Rational(1L);
        const PowerSeries base_h =
            divide_unit(h.with_argument_scaled(Rational(3L * j)),
                        h.with_argument_scaled(Rational(1L * j)));
        via_g = via_g * raise_to_multiplier(base_g, mj);
        via_h = via_h * raise_to_multiplier(base_h, mj);
    }
    if (via_g != via_h)
        throw std::logic_error("l_class_of_zeta: product routes disagree");
    return via_g;
}

}  // namespace lgenus
