#include "lgenus/indexcalc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lgenus {

namespace {

std::mutex hpow_mutex;
std::map<int, PowerSeries> hpow_cache;  // k -> h(x)^{2k+1} at precision 2k

PowerSeries h_power_for(int k) {
    {
        std::lock_guard<std::mutex> lock(hpow_mutex);
        auto it = hpow_cache.find(k);
        if (it != hpow_cache.end()) return it->second;
    }
    PowerSeries hp = pow_int(h_series(2 * k), Int(2 * k + 1));
    std::lock_guard<std::mutex> lock(hpow_mutex);
    return hpow_cache.emplace(k, std::move(hp)).first->second;
}

/// Coefficient of x^n in a*b without forming the full product.
Rational product_coefficient(const PowerSeries& a, const PowerSeries& b, int n) {
    Rational acc;
    for (int i = std::max(0, n - b.precision()); i <= std::min(n, a.precision()); ++i) {
        const Rational& ai = a.coeff(i);
        if (!ai.is_zero()) acc += ai * b.coeff(n - i);
    }
    return acc;
}

std::mutex cval_mutex;
std::map<std::pair<int, std::vector<int>>, Rational> cval_cache;

Rational c_direct_cached(int k, const std::vector<int>& sorted_tuple) {
    const auto key = std::make_pair(k, sorted_tuple);
    {
        std::lock_guard<std::mutex> lock(cval_mutex);
        auto it = cval_cache.find(key);
        if (it != cval_cache.end()) return it->second;
    }
    Rational value = c_value_direct(CSpec(k, sorted_tuple));
    std::lock_guard<std::mutex> lock(cval_mutex);
    return cval_cache.emplace(key, std::move(value)).first->second;
}

Rational sum_over_odd(const BundleCoefficients& zeta) {
    Rational acc;
    for (int j = 1; j <= zeta.k(); ++j)
        if (j % 2 == 1) acc += zeta.m_at(j);
    return acc;
}

Rational congruence_margin_value(const BundleCoefficients& zeta, const Rational& index) {
    return index - Rational(1L) -
           Rational(8L) * c_closed_form(1, zeta.k()) * sum_over_odd(zeta);
}

}  // namespace

CSpec::CSpec(int k_, std::vector<int> js_) : k(k_), js(std::move(js_)) {
    if (k < 1) throw std::invalid_argument("CSpec: k must be >= 1");
    if (js.empty()) throw std::invalid_argument("CSpec: at least one argument");
    for (int j : js)
        if (j < 1 || j > k)
            throw std::invalid_argument("CSpec: arguments must lie in 1..k");
    std::sort(js.begin(), js.end());
}

DSpec::DSpec(int k_, std::vector<int> multiplicities_)
    : k(k_), multiplicities(std::move(multiplicities_)) {
    if (k < 1) throw std::invalid_argument("DSpec: k must be >= 1");
    if (multiplicities.size() != static_cast<size_t>(k))
        throw std::invalid_argument("DSpec: need exactly k multiplicities");
    long total = 0;
    for (int i : multiplicities) {
        if (i < 0) throw std::invalid_argument("DSpec: negative multiplicity");
        total += i;
    }
    if (total < 1) throw std::invalid_argument("DSpec: at least one argument");
}

CSpec DSpec::expanded() const {
    std::vector<int> js;
    for (int j = 1; j <= k; ++j)
        for (int c = 0; c < multiplicities[static_cast<size_t>(j - 1)]; ++c)
            js.push_back(j);
    return CSpec(k, std::move(js));
}

Rational c_value_direct(const CSpec& spec, int precision) {
    const int k = spec.k;
    const int prec = precision < 0 ? 2 * k : precision;
    if (prec < 2 * k)
        throw std::invalid_argument("c_value_direct: precision below 2k");
    const PowerSeries g = g_series(prec);
    PowerSeries product =
        prec == 2 * k ? h_power_for(k) : pow_int(h_series(prec), Int(2 * k + 1));
    for (size_t t = 0; t + 1 < spec.js.size(); ++t)
        product = product * g.with_argument_scaled(Rational(spec.js[t]));
    return product_coefficient(
        product, g.with_argument_scaled(Rational(spec.js.back())), 2 * k);
}

Rational c_value_substitution(const CSpec& spec) {
    const int k = spec.k;
    const int prec = 4 * k + 6;
    const PowerSeries th = tanh_series(prec);
    const PowerSeries g = g_series(prec);
    PowerSeries numerator = PowerSeries::constant(Rational(1L), prec);
    for (int j : spec.js)
        numerator = numerator * g.with_argument_scaled(Rational(j));
    const LaurentSeries integrand_x =
        divide(LaurentSeries::from(numerator),
               LaurentSeries::from(pow_int(th, Int(2 * k + 1))));
    const PowerSeries artanh = artanh_series(prec);
    const LaurentSeries integrand_y =
        compose(integrand_x, artanh) * LaurentSeries::from(artanh.derivative());
    return integrand_y.residue();
}

Rational c_value(const CSpec& spec) {
    Rational direct = c_value_direct(spec);
    if (direct != c_value_substitution(spec))
        throw std::logic_error("c_value: direct and substitution routes disagree");
    return direct;
}

Rational c_closed_form(int s, int k) {
    if (s < 1 || s > k)
        throw std::invalid_argument("c_closed_form: need 1 <= s <= k");
    Int three_k, four_s;
    mpz_ui_pow_ui(three_k.get_mpz_t(), 3, static_cast<unsigned long>(k));
    mpz_ui_pow_ui(four_s.get_mpz_t(), 4, static_cast<unsigned long>(s));
    Int sum = 0;
    for (int i = 0; i <= s - 1; ++i) {
        Int three_pow, four_pow;
        mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(s - 1 - i));
        mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(i));
        sum += binomial(Int(k - s + i), Int(i)) * three_pow * four_pow;
    }
    const Int numerator = (k - s) % 2 == 0 ? Int(three_k + sum) : Int(three_k - sum);
    return Rational(numerator, Int(four_s * three_k));
}

Rational c_rational_function_coeff(int s, int k) {
    if (s < 1 || s > k)
        throw std::invalid_argument("c_rational_function_coeff: need 1 <= s <= k");
    // (1/((3+x)^s (1-x)))_{k-s} = sum_i (-1)^i binomial(s-1+i, i) / 3^{s+i}
    Rational acc;
    for (int i = 0; i <= k - s; ++i) {
        Int three_pow;
        mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(s + i));
        Rational term = Rational(binomial(Int(s - 1 + i), Int(i)), three_pow);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

Rational d_value(const DSpec& spec) { return c_value(spec.expanded()); }

Rational index_value_direct(const BundleCoefficients& zeta, int precision) {
    const int k = zeta.k();
    const int prec = precision < 0 ? 2 * k : precision;
    if (prec < 2 * k)
        throw std::invalid_argument("index_value_direct: precision below 2k");
    const PowerSeries hpow =
        prec == 2 * k ? h_power_for(k) : pow_int(h_series(prec), Int(2 * k + 1));
    return product_coefficient(l_class_of_zeta(zeta, prec), hpow, 2 * k);
}

namespace {

struct ExpansionWalk {
    const BundleCoefficients& zeta;
    int k;
    std::vector<int> counts;
    Rational total;

    void add_term(int s) {
        std::vector<int> tuple;
        for (int j = 1; j <= k; ++j)
            for (int c = 0; c < counts[static_cast<size_t>(j - 1)]; ++c)
                tuple.push_back(j);
        Rational coef = pow(Rational(8L), static_cast<unsigned long>(s));
        for (int j = 1; j <= k; ++j) {
            const int i = counts[static_cast<size_t>(j - 1)];
            if (i > 0)
                coef *= generalized_binomial(zeta.m_at(j),
                                             static_cast<unsigned long>(i));
        }
        total += coef * c_direct_cached(k, tuple);
    }

    void walk(int j, int s_used) {
        if (j > k) {
            if (s_used >= 2) add_term(s_used);
            return;
        }
        const Rational& mj = zeta.m_at(j);
        Rational binom = 1L;  // binomial(mj, i), updated incrementally
        for (int i = 0; s_used + i <= k; ++i) {
            if (i > 0) {
                binom *= (mj - Rational(i - 1)) / Rational(i);
                if (binom.is_zero()) break;  // integer mj >= 0 exhausted
            }
            counts[static_cast<size_t>(j - 1)] = i;
            walk(j + 1, s_used + i);
        }
        counts[static_cast<size_t>(j - 1)] = 0;
    }
};

}  // namespace

Rational index_value_expansion(const BundleCoefficients& zeta) {
    if (!zeta.all_integer())
        throw std::invalid_argument("index_value_expansion: integer multipliers only");
    const int k = zeta.k();
    Rational total = 1L;
    for (int j = 1; j <= k; ++j) {
        if (zeta.m_at(j).is_zero()) continue;
        total += Rational(8L) * zeta.m_at(j) * c_direct_cached(k, {j});
    }
    // s >= 2 terms; tuples of size > k cannot reach x^{2k}, so the sum is cut
    // at s = k exactly.
    ExpansionWalk walker{zeta, k, std::vector<int>(static_cast<size_t>(k)), Rational()};
    walker.walk(1, 0);
    return total + walker.total;
}

Rational index_value(const BundleCoefficients& zeta, int precision) {
    const Rational direct = index_value_direct(zeta, precision);
    if (zeta.all_integer()) {
        if (direct != index_value_expansion(zeta))
            throw std::logic_error("index_value: direct and expansion routes disagree");
    }
    return direct;
}

ExtInt index_congruence_margin(const BundleCoefficients& zeta) {
    if (!zeta.all_integer())
        throw std::invalid_argument("index_congruence_margin: integer multipliers only");
    return nu2(congruence_margin_value(zeta, index_value(zeta)));
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::IndexNotOne: return "INDEX_NOT_ONE";
        case Verdict::DivisibleBy16Confirmed: return "DIVISIBLE_BY_16_CONFIRMED";
        case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

IndexReport divisibility_verdict(const BundleCoefficients& zeta) {
    IndexReport report;
    report.k = zeta.k();
    report.r = zeta.r();
    report.m = zeta.m();
    report.index = index_value_direct(zeta);
    Rational linear;
    for (int j = 1; j <= zeta.k(); ++j)
        if (!zeta.m_at(j).is_zero())
            linear += zeta.m_at(j) * c_direct_cached(zeta.k(), {j});
    report.linear_term = linear;
    report.congruence_margin = nu2(congruence_margin_value(zeta, report.index));
    if (report.index != Rational(1L)) {
        report.verdict = Verdict::IndexNotOne;
        return report;
    }
    const bool odd_sum_even = nu2(sum_over_odd(zeta)) >= ExtInt(1);
    const bool p1_divisible = nu2(p1_of_zeta(zeta)) >= ExtInt(4);
    report.verdict = (odd_sum_even && p1_divisible) ? Verdict::DivisibleBy16Confirmed
                                                    : Verdict::Violation;
    return report;
}

namespace {

void collect_tuples(int k, int s_max, int min_j, std::vector<int>& tuple,
                    const PowerSeries& partial, const PowerSeries& hpow,
                    const std::vector<PowerSeries>& g_at,
                    std::map<std::vector<int>, Rational>& out) {
    for (int j = min_j; j <= k; ++j) {
        const PowerSeries next = partial * g_at[static_cast<size_t>(j)];
        tuple.push_back(j);
        out[tuple] = product_coefficient(next, hpow, 2 * k);
        if (static_cast<int>(tuple.size()) < s_max)
            collect_tuples(k, s_max, j, tuple, next, hpow, g_at, out);
        tuple.pop_back();
    }
}

void collect_odd_rests(int k, int size, int min_j, std::vector<int>& rest,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(rest.size()) == size) {
        out.push_back(rest);
        return;
    }
    for (int j = min_j; j <= k; j += 2) {
        rest.push_back(j);
        collect_odd_rests(k, size, j, rest, out);
        rest.pop_back();
    }
}

}  // namespace

std::vector<PropositionViolation> verify_valuation_propositions(int k, int s_max) {
    if (k < 1) throw std::invalid_argument("verify_valuation_propositions: k >= 1");
    if (s_max < 2)
        throw std::invalid_argument("verify_valuation_propositions: s_max >= 2");
    const long r = nu2(Int(k)).value();
    const int prec = 2 * k;
    const PowerSeries g = g_series(prec);
    const PowerSeries hpow = h_power_for(k);
    std::vector<PowerSeries> g_at;
    g_at.reserve(static_cast<size_t>(k) + 1);
    for (int j = 0; j <= k; ++j)
        g_at.push_back(g.with_argument_scaled(Rational(j)));

    std::map<std::vector<int>, Rational> cvals;
    {
        std::vector<int> tuple;
        collect_tuples(k, s_max, 1, tuple,
                       PowerSeries::constant(Rational(1L), prec), hpow, g_at, cvals);
    }

    std::vector<PropositionViolation> violations;
    auto check = [&](const char* rule, const std::vector<int>& tuple,
                     const std::vector<int>& tuple2, const ExtInt& actual,
                     long bound, bool equality) {
        const bool ok = equality ? actual == ExtInt(bound) : actual >= ExtInt(bound);
        if (!ok)
            violations.push_back({rule, k, tuple, tuple2, actual, bound, equality});
    };

    for (const auto& [tuple, value] : cvals) {
        const int s = static_cast<int>(tuple.size());
        const ExtInt v = nu2(value);
        const bool has_even =
            std::any_of(tuple.begin(), tuple.end(), [](int j) { return j % 2 == 0; });
        if (s == 1) {
            if (!has_even)
                check("odd-order-equality", tuple, {}, v, r, true);
            else
                check("even-order-bound", tuple, {}, v, r + 1, false);
        } else {
            check("product-lower-bound", tuple, {}, v, r + 2 - 2 * s, false);
            if (has_even) check("even-entry-bound", tuple, {}, v, r + 2 - s, false);
        }
    }

    // Difference rule over all-odd tuples sharing all but one slot.
    for (int s = 1; s <= s_max; ++s) {
        std::vector<std::vector<int>> rests;
        {
            std::vector<int> rest;
            collect_odd_rests(k, s - 1, 1, rest, rests);
        }
        for (const auto& rest : rests) {
            for (int j = 1; j <= k; j += 2) {
                for (int j2 = j + 2; j2 <= k; j2 += 2) {
                    std::vector<int> t1 = rest, t2 = rest;
                    t1.push_back(j);
                    t2.push_back(j2);
                    std::sort(t1.begin(), t1.end());
                    std::sort(t2.begin(), t2.end());
                    check("odd-difference-bound", t1, t2,
                          nu2(cvals.at(t1) - cvals.at(t2)), r + 3 - s, false);
                }
            }
        }
    }
    return violations;
}

SearchResult solution_search(int k, int box, long budget) {
    if (k < 1) throw std::invalid_argument("solution_search: k must be >= 1");
    if (box < 0) throw std::invalid_argument("solution_search: box must be >= 0");
    SearchResult result{{}, true, 0};
    std::vector<long> m(static_cast<size_t>(k), -box);
    bool done = false;
    while (!done) {
        if (result.candidates_checked >= budget) {
            result.complete = false;
            break;
        }
        const BundleCoefficients zeta = BundleCoefficients::from_integers(m);
        if (index_value_direct(zeta) == Rational(1L))
            result.solutions.push_back(divisibility_verdict(zeta));
        ++result.candidates_checked;
        // lexicographic odometer over [-box, box]^k
        int pos = 0;
        for (;;) {
            if (pos == k) {
                done = true;
                break;
            }
            if (m[static_cast<size_t>(pos)] < box) {
                ++m[static_cast<size_t>(pos)];
                break;
            }
            m[static_cast<size_t>(pos)] = -box;
            ++pos;
        }
    }
    return result;
}

}  // namespace lgenus
