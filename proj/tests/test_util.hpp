#ifndef LGENUS_TEST_UTIL_HPP
#define LGENUS_TEST_UTIL_HPP

#include <vector>

#include "lgenus/rng.hpp"
#include "lgenus/series.hpp"

namespace lgenus::testutil {

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline PowerSeries ps(std::vector<Rational> coeffs) {
    return PowerSeries(std::move(coeffs));
}

/// Random series with small coefficients; den_mode 0 = integers,
/// 1 = odd denominators (2-integral), 2 = arbitrary small denominators.
inline PowerSeries random_series(SplitMix64& rng, int precision, int den_mode) {
    std::vector<Rational> c(static_cast<size_t>(precision) + 1);
    for (auto& coeff : c) {
        const long num = rng.range(-9, 9);
        const long den = den_mode == 0   ? 1
                         : den_mode == 1 ? 2 * rng.range(0, 4) + 1
                                         : rng.range(1, 9);
        coeff = Rational(num, den);
    }
    return PowerSeries(std::move(c));
}

}  // namespace lgenus::testutil

#endif
