#include "lgenus/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace lgenus {

namespace {

void require_nonzero_den(int sign) {
    if (sign == 0) throw std::domain_error("Rational: zero denominator");
}

}  // namespace

Rational::Rational(long num, long den) {
    require_nonzero_den(den == 0 ? 0 : 1);
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const Int& num, const Int& den) {
    require_nonzero_den(sgn(den));
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(s)));
        }
        Int num(std::string(s.substr(0, slash)));
        Int den(std::string(s.substr(slash + 1)));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational::parse: malformed rational '" +
                                    std::string(s) + "'");
    }
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned long e) {
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rational(num, den);
}

Rational generalized_binomial(const Rational& alpha, unsigned long i) {
    Rational result = 1L;
    for (unsigned long w = 0; w < i; ++w) {
        result *= (alpha - Rational(static_cast<long>(w))) /
                  Rational(static_cast<long>(i - w));
    }
    return result;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n || n < 0)
        throw std::invalid_argument("binomial: need 0 <= k <= n");
    if (!k.fits_ulong_p())
        throw std::invalid_argument("binomial: k too large");
    Int r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k.get_ui());
    return r;
}

}  // namespace lgenus
