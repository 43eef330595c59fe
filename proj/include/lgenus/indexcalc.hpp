#ifndef LGENUS_INDEXCALC_HPP
#define LGENUS_INDEXCALC_HPP

#include <string>
#include <vector>

#include "lgenus/hirzebruch.hpp"

namespace lgenus {

/// Argument tuple of the coefficient functional
/// C(j_1..j_s) = (g(j_1 x) ... g(j_s x) h(x)^{2k+1})_{2k}.
/// Entries are kept sorted; 1 <= j_t <= k.
struct CSpec {
    int k;
    std::vector<int> js;

    CSpec(int k_, std::vector<int> js_);
    int s() const { return static_cast<int>(js.size()); }
};

/// Multiplicity form: D(i_1..i_k) groups equal arguments, i_j = number of
/// copies of j.  Requires sum i_j >= 1.
struct DSpec {
    int k;
    std::vector<int> multiplicities;

    DSpec(int k_, std::vector<int> multiplicities_);
    CSpec expanded() const;
};

/// Direct route: expand the series product and read the x^{2k} coefficient.
/// precision < 0 selects the policy default 2k; smaller values are rejected.
Rational c_value_direct(const CSpec& spec, int precision = -1);

/// Substitution route y = tanh x: the integrand
/// prod g(j_t x) / tanh^{2k+1} x as a Laurent series, composed with the
/// reversion of tanh, times the derivative, then the formal residue.
Rational c_value_substitution(const CSpec& spec);

/// Both routes; throws if they disagree.
Rational c_value(const CSpec& spec);

/// Closed form of C(1,...,1) (s ones):
/// (3^k + (-1)^{k-s} sum_i binomial(k-s+i, i) 3^{s-1-i} 4^i) / (4^s 3^k).
Rational c_closed_form(int s, int k);

/// Third route for the all-ones value: coefficient of x^{k-s} in
/// 1/((3+x)^s (1-x)) by the negative-binomial expansion.
Rational c_rational_function_coeff(int s, int k);

Rational d_value(const DSpec& spec);

/// Signature route: (L(zeta) h^{2k+1})_{2k}.  Any 2-integral m.
/// precision < 0 selects the policy default 2k.
Rational index_value_direct(const BundleCoefficients& zeta, int precision = -1);

/// Expansion route: 1 + 8 sum m_j C(j) + sum_{2<=s<=k} 8^s sum over
/// multiplicity vectors of prod binomial(m_j, i_j) D(i_1..i_k).
/// Integer m only (the s-sum is cut at k where D vanishes identically).
Rational index_value_expansion(const BundleCoefficients& zeta);

/// Both routes for integer m (must agree); direct route otherwise.
Rational index_value(const BundleCoefficients& zeta, int precision = -1);

/// nu2(index - 1 - 8 C(1) sum_{odd j} m_j); integer m required.  Contract:
/// at least nu2(k) + 4.
ExtInt index_congruence_margin(const BundleCoefficients& zeta);

enum class Verdict {
    IndexNotOne,
    DivisibleBy16Confirmed,
    Violation,
};

const char* to_string(Verdict v);

struct IndexReport {
    int k;
    long r;
    std::vector<Rational> m;
    Rational index;
    Rational linear_term;    // sum m_j C(j)
    ExtInt congruence_margin;
    Verdict verdict;
};

/// Full verdict: INDEX_NOT_ONE when the index differs from 1; otherwise the
/// parity of sum_{odd j} m_j and 16 | p_1 are checked and any failure is a
/// VIOLATION (which would refute the underlying divisibility statement).
IndexReport divisibility_verdict(const BundleCoefficients& zeta);

struct PropositionViolation {
    std::string rule;
    int k;
    std::vector<int> tuple;
    std::vector<int> tuple2;  // second tuple for difference rules
    ExtInt actual;
    long bound;
    bool equality_required;
};

/// Sweeps every tuple (j_1 <= ... <= j_s), j_t <= k, s <= s_max and checks
/// the applicable 2-order facts:
///   - s = 1, odd j:  nu2(C(j)) = nu2(k) exactly;
///   - s = 1, even j: nu2(C(j)) >= nu2(k) + 1;
///   - s >= 2:        nu2(C(tuple)) >= nu2(k) + 2 - 2s;
///   - s >= 1, tuple containing an even entry: nu2(C) >= nu2(k) + 2 - s;
///   - all-odd tuples differing in one slot: nu2(difference) >= nu2(k)+3-s.
/// Returns the violating tuples (empty list expected).
std::vector<PropositionViolation> verify_valuation_propositions(int k, int s_max);

struct SearchResult {
    std::vector<IndexReport> solutions;  // index exactly 1, with verdicts
    bool complete;
    long candidates_checked;
};

/// Enumerates integer vectors m in [-box, box]^k, keeps those of index
/// exactly 1 and feeds each to divisibility_verdict.  Stops after `budget`
/// candidates and flags the result partial.
SearchResult solution_search(int k, int box, long budget = 2000000);

}  // namespace lgenus

#endif
