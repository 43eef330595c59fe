#include "lgenus/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lgenus {

namespace {

void require_precision(int precision) {
    if (precision < 0)
        throw std::invalid_argument("PowerSeries: precision must be >= 0");
}

}  // namespace

PowerSeries::PowerSeries(int precision) {
    require_precision(precision);
    c_.resize(static_cast<size_t>(precision) + 1);
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty())
        throw std::invalid_argument("PowerSeries: need at least the constant term");
}

PowerSeries PowerSeries::constant(const Rational& c, int precision) {
    PowerSeries f(precision);
    f.c_[0] = c;
    return f;
}

PowerSeries PowerSeries::identity(int precision) {
    if (precision < 1)
        throw std::invalid_argument("PowerSeries::identity: precision must be >= 1");
    PowerSeries f(precision);
    f.c_[1] = 1L;
    return f;
}

const Rational& PowerSeries::coeff(int i) const {
    if (i < 0 || i > precision())
        throw std::out_of_range("PowerSeries: coefficient index " + std::to_string(i) +
                                " outside guaranteed precision " +
                                std::to_string(precision()));
    return c_[static_cast<size_t>(i)];
}

ExtInt PowerSeries::order() const {
    for (int i = 0; i <= precision(); ++i)
        if (!c_[static_cast<size_t>(i)].is_zero()) return ExtInt(i);
    return ExtInt::infinity();
}

PowerSeries PowerSeries::truncated(int new_precision) const {
    if (new_precision < 0 || new_precision > precision())
        throw std::invalid_argument("PowerSeries::truncated: bad precision");
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_precision + 1));
}

PowerSeries PowerSeries::derivative() const {
    if (precision() == 0)
        throw std::invalid_argument("PowerSeries::derivative: nothing known past x^0");
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return PowerSeries(std::move(d));
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::with_argument_scaled(const Rational& c) const {
    std::vector<Rational> r(c_.size());
    Rational power = 1L;
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * power;
        power *= c;
    }
    return PowerSeries(std::move(r));
}

PowerSeries PowerSeries::operator-() const { return scaled(Rational(-1L)); }

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    const int p = std::min(f.precision(), g.precision());
    std::vector<Rational> r(static_cast<size_t>(p) + 1);
    for (int i = 0; i <= p; ++i) r[static_cast<size_t>(i)] = f.coeff(i) + g.coeff(i);
    return PowerSeries(std::move(r));
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    return f + (-g);
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    const int p = std::min(f.precision(), g.precision());
    std::vector<Rational> r(static_cast<size_t>(p) + 1);
    for (int i = 0; i <= p; ++i) {
        const Rational& fi = f.coeff(i);
        if (fi.is_zero()) continue;
        const int jmax = std::min(g.precision(), p - i);
        for (int j = 0; j <= jmax; ++j) {
            const Rational& gj = g.coeff(j);
            if (!gj.is_zero()) r[static_cast<size_t>(i + j)] += fi * gj;
        }
    }
    return PowerSeries(std::move(r));
}

PowerSeries operator+(const PowerSeries& f, const Rational& c) {
    std::vector<Rational> r = f.coefficients();
    r[0] += c;
    return PowerSeries(std::move(r));
}

PowerSeries operator-(const PowerSeries& f, const Rational& c) { return f + (-c); }

LaurentSeries::LaurentSeries(int low, std::vector<Rational> coeffs)
    : low_(low), c_(std::move(coeffs)) {
    if (c_.empty())
        throw std::invalid_argument("LaurentSeries: empty coefficient window");
}

LaurentSeries LaurentSeries::from(const PowerSeries& f) {
    return LaurentSeries(0, f.coefficients());
}

Rational LaurentSeries::coeff(int i) const {
    if (i > precision())
        throw std::out_of_range("LaurentSeries: coefficient index " + std::to_string(i) +
                                " outside guaranteed precision " +
                                std::to_string(precision()));
    if (i < low_) return Rational(0L);
    return c_[static_cast<size_t>(i - low_)];
}

ExtInt LaurentSeries::order() const {
    for (int i = low_; i <= precision(); ++i)
        if (!c_[static_cast<size_t>(i - low_)].is_zero()) return ExtInt(i);
    return ExtInt::infinity();
}

Rational LaurentSeries::residue() const { return coeff(-1); }

LaurentSeries LaurentSeries::trimmed() const {
    size_t first = 0;
    while (first + 1 < c_.size() && c_[first].is_zero()) ++first;
    return LaurentSeries(low_ + static_cast<int>(first),
                         std::vector<Rational>(c_.begin() + static_cast<long>(first), c_.end()));
}

PowerSeries LaurentSeries::as_power_series() const {
    const LaurentSeries t = trimmed();
    if (t.low_ < 0)
        throw std::logic_error("LaurentSeries: negative exponents present");
    std::vector<Rational> r(static_cast<size_t>(t.precision()) + 1);
    for (int i = t.low_; i <= t.precision(); ++i)
        r[static_cast<size_t>(i)] = t.c_[static_cast<size_t>(i - t.low_)];
    return PowerSeries(std::move(r));
}

LaurentSeries LaurentSeries::derivative() const {
    std::vector<Rational> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i)
        d[i] = c_[i] * Rational(low_ + static_cast<long>(i));
    return LaurentSeries(low_ - 1, std::move(d));
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return LaurentSeries(low_, std::move(r));
}

LaurentSeries LaurentSeries::operator-() const { return scaled(Rational(-1L)); }

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) {
    const int low = std::min(f.lowest_exponent(), g.lowest_exponent());
    const int prec = std::min(f.precision(), g.precision());
    if (prec < low)
        throw std::logic_error("LaurentSeries: sum has empty window");
    std::vector<Rational> r(static_cast<size_t>(prec - low) + 1);
    for (int i = low; i <= prec; ++i)
        r[static_cast<size_t>(i - low)] = f.coeff(i) + g.coeff(i);
    return LaurentSeries(low, std::move(r));
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) {
    return f + (-g);
}

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) {
    const int low = f.lowest_exponent() + g.lowest_exponent();
    const int prec = std::min(f.precision() + g.lowest_exponent(),
                              g.precision() + f.lowest_exponent());
    std::vector<Rational> r(static_cast<size_t>(prec - low) + 1);
    for (int i = f.lowest_exponent(); i <= f.precision(); ++i) {
        const Rational fi = f.coeff(i);
        if (fi.is_zero()) continue;
        const int jmax = std::min(g.precision(), prec - i);
        for (int j = g.lowest_exponent(); j <= jmax; ++j) {
            const Rational gj = g.coeff(j);
            if (!gj.is_zero()) r[static_cast<size_t>(i + j - low)] += fi * gj;
        }
    }
    return LaurentSeries(low, std::move(r));
}

bool agree(const PowerSeries& f, const PowerSeries& g) {
    const int p = std::min(f.precision(), g.precision());
    for (int i = 0; i <= p; ++i)
        if (f.coeff(i) != g.coeff(i)) return false;
    return true;
}

bool agree(const LaurentSeries& f, const LaurentSeries& g) {
    const int low = std::min(f.lowest_exponent(), g.lowest_exponent());
    const int prec = std::min(f.precision(), g.precision());
    for (int i = low; i <= prec; ++i)
        if (f.coeff(i) != g.coeff(i)) return false;
    return true;
}

PowerSeries invert_unit(const PowerSeries& g) {
    const Rational& g0 = g.coeff(0);
    if (g0.is_zero())
        throw std::invalid_argument("invert_unit: constant term vanishes");
    const int p = g.precision();
    std::vector<Rational> b(static_cast<size_t>(p) + 1);
    b[0] = Rational(1L) / g0;
    for (int n = 1; n <= p; ++n) {
        Rational acc;
        for (int i = 1; i <= n; ++i) {
            const Rational& gi = g.coeff(i);
            if (!gi.is_zero()) acc += gi * b[static_cast<size_t>(n - i)];
        }
        b[static_cast<size_t>(n)] = -acc / g0;
    }
    return PowerSeries(std::move(b));
}

PowerSeries divide_unit(const PowerSeries& f, const PowerSeries& g) {
    if (g.coeff(0).is_zero())
        throw std::invalid_argument("divide_unit: denominator is not a unit");
    const int p = std::min(f.precision(), g.precision());
    return f.truncated(p) * invert_unit(g.truncated(p));
}

PowerSeries shifted_down(const PowerSeries& f, int r) {
    if (r < 0 || r > f.precision())
        throw std::invalid_argument("shifted_down: bad shift");
    for (int i = 0; i < r; ++i)
        if (!f.coeff(i).is_zero())
            throw std::invalid_argument("shifted_down: low coefficients nonzero");
    return PowerSeries(std::vector<Rational>(f.coefficients().begin() + r,
                                             f.coefficients().end()));
}

LaurentSeries divide(const LaurentSeries& f, const LaurentSeries& g) {
    const ExtInt ord_g = g.order();
    if (ord_g.is_infinite())
        throw std::domain_error("divide: denominator vanishes up to its precision");
    const int eg = static_cast<int>(ord_g.value());
    const ExtInt ord_f = f.order();
    if (ord_f.is_infinite()) {
        // Zero up to what the quotient's precision can guarantee.
        return LaurentSeries(f.precision() - eg, {Rational(0L)});
    }
    const int ef = static_cast<int>(ord_f.value());
    const int m = std::min(f.precision() - ef, g.precision() - eg);
    std::vector<Rational> uf(static_cast<size_t>(m) + 1), ug(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        uf[static_cast<size_t>(i)] = f.coeff(ef + i);
        ug[static_cast<size_t>(i)] = g.coeff(eg + i);
    }
    const PowerSeries q = PowerSeries(std::move(uf)) * invert_unit(PowerSeries(std::move(ug)));
    return LaurentSeries(ef - eg, q.coefficients());
}

LaurentSeries divide(const PowerSeries& f, const PowerSeries& g) {
    return divide(LaurentSeries::from(f), LaurentSeries::from(g));
}

PowerSeries compose(const PowerSeries& F, const PowerSeries& G) {
    if (!G.coeff(0).is_zero())
        throw std::invalid_argument("compose: inner series must vanish at 0");
    const ExtInt d = G.order();
    if (d.is_infinite())
        return PowerSeries::constant(F.coeff(0), G.precision());
    const long w = std::min(static_cast<long>(F.precision()) * d.value(),
                            static_cast<long>(G.precision()));
    const PowerSeries g = G.truncated(static_cast<int>(w));
    PowerSeries acc = PowerSeries::constant(F.coeff(F.precision()), static_cast<int>(w));
    for (int i = F.precision() - 1; i >= 0; --i) acc = acc * g + F.coeff(i);
    return acc;
}

LaurentSeries compose(const LaurentSeries& F, const PowerSeries& G) {
    if (!G.coeff(0).is_zero())
        throw std::invalid_argument("compose: inner series must vanish at 0");
    if (F.lowest_exponent() >= 0)
        return LaurentSeries::from(compose(F.as_power_series(), G));
    if (G.precision() < 1 || G.coeff(1).is_zero())
        throw std::invalid_argument(
            "compose: Laurent numerator needs an inner series with G'(0) != 0");

    const int pg = G.precision();
    const LaurentSeries inv =
        divide(LaurentSeries::from(PowerSeries::constant(Rational(1L), pg)),
               LaurentSeries::from(G));
    auto constant_at = [pg](const Rational& c) {
        return LaurentSeries::from(PowerSeries::constant(c, pg));
    };

    const int depth = -F.lowest_exponent();
    LaurentSeries acc = constant_at(F.coeff(-depth));
    for (int e = depth - 1; e >= 1; --e) acc = acc * inv + constant_at(F.coeff(-e));
    LaurentSeries result = acc * inv;

    if (F.precision() >= 0) {
        std::vector<Rational> pos(static_cast<size_t>(F.precision()) + 1);
        for (int i = 0; i <= F.precision(); ++i) pos[static_cast<size_t>(i)] = F.coeff(i);
        result = result + LaurentSeries::from(compose(PowerSeries(std::move(pos)), G));
    }
    return result;
}

std::pair<Rational, Rational> residue_change_of_variable(const LaurentSeries& F,
                                                         const PowerSeries& G) {
    if (!G.coeff(0).is_zero() || G.precision() < 1 || G.coeff(1).is_zero())
        throw std::invalid_argument(
            "residue_change_of_variable: need G(0) = 0 and G'(0) != 0");
    const Rational lhs = F.residue();
    const LaurentSeries image = compose(F, G) * LaurentSeries::from(G.derivative());
    return {lhs, image.residue()};
}

namespace {

PowerSeries revert_impl(const PowerSeries& F, std::optional<unsigned long> p) {
    const int n = F.precision();
    if (n < 1) throw std::invalid_argument("revert: need precision >= 1");
    if (!F.coeff(0).is_zero())
        throw std::invalid_argument("revert: constant term must vanish");
    const Rational q1 = F.coeff(1);
    if (q1.is_zero())
        throw std::invalid_argument("revert: linear coefficient must be nonzero");
    if (p) {
        for (int i = 0; i <= n; ++i)
            if (!is_p_integral(F.coeff(i), *p))
                throw std::invalid_argument("revert: coefficients not p-integral");
        if (nu_p(q1, *p) != ExtInt(0))
            throw std::invalid_argument("revert: linear coefficient is not a p-unit");
    }

    // pw[i][j] = coefficient of y^j in G^i.  Column j of the powers with
    // i >= 2 only involves r_1..r_{j-1}, so the system is triangular in r_j.
    std::vector<std::vector<Rational>> pw(static_cast<size_t>(n) + 1,
                                          std::vector<Rational>(static_cast<size_t>(n) + 1));
    std::vector<Rational> r(static_cast<size_t>(n) + 1);
    r[1] = Rational(1L) / q1;
    pw[1][1] = r[1];
    for (int j = 2; j <= n; ++j) {
        for (int i = 2; i <= j; ++i) {
            Rational s;
            for (int t = i - 1; t <= j - 1; ++t) {
                const Rational& a = pw[static_cast<size_t>(i - 1)][static_cast<size_t>(t)];
                const Rational& b = r[static_cast<size_t>(j - t)];
                if (!a.is_zero() && !b.is_zero()) s += a * b;
            }
            pw[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
        Rational acc;
        for (int i = 2; i <= j; ++i) {
            const Rational& qi = F.coeff(i);
            if (!qi.is_zero())
                acc += qi * pw[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        r[static_cast<size_t>(j)] = -acc / q1;
        pw[1][static_cast<size_t>(j)] = r[static_cast<size_t>(j)];
    }

    if (p) {
        for (int j = 1; j <= n; ++j)
            if (!is_p_integral(r[static_cast<size_t>(j)], *p))
                throw std::logic_error("revert: certified reversion produced a "
                                       "non-p-integral coefficient");
    }
    return PowerSeries(std::move(r));
}

}  // namespace

PowerSeries revert(const PowerSeries& F) { return revert_impl(F, std::nullopt); }

PowerSeries revert(const PowerSeries& F, unsigned long p) {
    return revert_impl(F, p);
}

PowerSeries qth_root(const PowerSeries& f, unsigned long q, unsigned long p) {
    if (q == 0) throw std::invalid_argument("qth_root: q must be positive");
    if (f.coeff(0) != Rational(1L))
        throw std::invalid_argument("qth_root: constant term must be 1");
    if (std::gcd(q, p) != 1)
        throw std::invalid_argument("qth_root: q must be prime to p");
    for (int i = 0; i <= f.precision(); ++i)
        if (!is_p_integral(f.coeff(i), p))
            throw std::invalid_argument("qth_root: coefficients not p-integral");

    const int prec = f.precision();
    if (prec == 0) return PowerSeries::constant(Rational(1L), 0);
    // v(x) = (1+x)^{1/q} from the reversion of (1+x)^q - 1, then v(f - 1).
    const PowerSeries branch = pow_int(PowerSeries::identity(prec) + Rational(1L),
                                       Int(static_cast<long>(q))) -
                               Rational(1L);
    const PowerSeries v = revert(branch, p) + Rational(1L);
    return compose(v, f - Rational(1L));
}

PowerSeries rational_power(const PowerSeries& f, long m, unsigned long q,
                           unsigned long p) {
    const PowerSeries via_root = pow_signed(qth_root(f, q, p), Int(m));
    const PowerSeries via_power = qth_root(pow_signed(f, Int(m)), q, p);
    if (via_root != via_power)
        throw std::logic_error("rational_power: the two evaluation orders disagree");
    return via_root;
}

PowerSeries pow_int(const PowerSeries& f, const Int& l) {
    if (l < 0) throw std::invalid_argument("pow_int: exponent must be nonnegative");
    PowerSeries result = PowerSeries::constant(Rational(1L), f.precision());
    if (l == 0) return result;
    PowerSeries base = f;
    const mp_bitcnt_t bits = mpz_sizeinbase(l.get_mpz_t(), 2);
    for (mp_bitcnt_t b = 0; b < bits; ++b) {
        if (mpz_tstbit(l.get_mpz_t(), b)) result = result * base;
        if (b + 1 < bits) base = base * base;
    }
    return result;
}

PowerSeries pow_signed(const PowerSeries& f, const Int& m) {
    if (m >= 0) return pow_int(f, m);
    return pow_int(invert_unit(f), -m);
}

std::vector<ValuationBoundViolation> verify_valuation_bound(const PowerSeries& f,
                                                            const Int& l) {
    if (l < 1)
        throw std::invalid_argument("verify_valuation_bound: l must be >= 1");
    for (int i = 0; i <= f.precision(); ++i)
        if (!is_p_integral(f.coeff(i), 2))
            throw std::invalid_argument("verify_valuation_bound: input not 2-integral");
    const long nu_l = nu2(l).value();
    const PowerSeries g = pow_int(f, l);
    std::vector<ValuationBoundViolation> violations;
    for (int i = 1; i <= g.precision(); ++i) {
        const long bound = nu_l - nu2(Int(static_cast<long>(i))).value();
        const ExtInt actual = nu2(g.coeff(i));
        if (actual < ExtInt(bound))
            violations.push_back({i, actual, bound});
    }
    return violations;
}

}  // namespace lgenus
