// lgenus command line tool: series table dumps, lemma sweeps, index
// evaluation and verdicts, and small solution searches.  Reports are exact
// (rationals as "num/den" strings, never floats) and byte-deterministic for a
// fixed configuration, including the --jobs setting.

#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgenus/indexcalc.hpp"
#include "lgenus/rng.hpp"

using json = nlohmann::ordered_json;
using namespace lgenus;

namespace {

struct Config {
    std::string command;
    std::string lemma = "all";
    int i_max = 128;
    int k_max = 16;
    int s_max = 2;
    int box = 3;
    int k = 1;
    int precision = 0;  // 0 = per-task default
    std::vector<std::string> m;
    std::string format = "json";
    std::string out = "-";
    int jobs = 1;
    std::uint64_t seed = 20240816;
};

template <class Fn>
void parallel_for(long n, int jobs, const Fn& fn) {
    if (n <= 0) return;
    jobs = static_cast<int>(std::min<long>(std::max(jobs, 1), n));
    if (jobs == 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    std::mutex err_mutex;
    std::string error;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            try {
                for (long i; (i = next.fetch_add(1)) < n;) fn(i);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (error.empty()) error = e.what();
                next.store(n);
            }
        });
    }
    for (auto& th : pool) th.join();
    if (!error.empty()) throw std::runtime_error(error);
}

struct Instance {
    std::string id;
    std::string value;
    std::string nu2;
    std::string bound;
    bool pass = true;
};

struct LemmaOutcome {
    std::string name;
    long checked = 0;
    bool emit_records = true;  // bulk kernel sweeps only report failures
    std::vector<Instance> records;
    long violations = 0;
};

void push(LemmaOutcome& out, Instance inst) {
    ++out.checked;
    if (!inst.pass) ++out.violations;
    if (out.emit_records || !inst.pass) out.records.push_back(std::move(inst));
}

std::string fmt_tuple(const std::vector<int>& js) {
    std::string s = "(";
    for (size_t i = 0; i < js.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(js[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// lemma sweeps

LemmaOutcome run_factorial_order(const Config& cfg) {
    LemmaOutcome out{"factorial-order"};
    out.emit_records = false;
    const long n_max = std::min<long>(8L * cfg.i_max, 1L << 16);
    for (long n = 0; n <= n_max; ++n) {
        // Legendre oracle: sum of floor(n/2^i)
        Int legendre = 0;
        for (long q = n / 2; q > 0; q /= 2) legendre += q;
        const bool ok = nu2_factorial(Int(n)) == legendre;
        push(out, {"n=" + std::to_string(n), "", "", "", ok});
    }
    return out;
}

LemmaOutcome run_binomial_order(const Config& cfg) {
    LemmaOutcome out{"binomial-order"};
    out.emit_records = false;
    const long n_max = std::min<long>(2L * cfg.i_max, 512);
    for (long n = 0; n <= n_max; ++n) {
        for (long kk = 0; kk <= n; ++kk) {
            const Int b = binomial(Int(n), Int(kk));
            const long formula = nu2_binomial(Int(n), Int(kk));
            bool ok = ExtInt(formula) == nu2(b);
            // parity criterion: binomial even iff some binary digit of k
            // exceeds the matching digit of n
            const bool digit_excess = (kk & ~n) != 0;
            ok = ok && ((formula > 0) == digit_excess);
            push(out, {"n=" + std::to_string(n) + " k=" + std::to_string(kk),
                       "", std::to_string(formula), "", ok});
        }
    }
    return out;
}

LemmaOutcome run_power_order(const Config&) {
    LemmaOutcome out{"power-order"};
    out.emit_records = false;
    for (long n = 1; n <= 99; n += 2) {
        Int power = 1;
        for (unsigned long i = 1; i <= 64; ++i) {
            power *= n;
            const Int direct = i % 2 == 0 ? Int(power - 1) : Int(power + 1);
            const bool ok = nu2_power_pm(Int(n), i) == nu2(direct);
            push(out, {"n=" + std::to_string(n) + " i=" + std::to_string(i),
                       "", nu2_power_pm(Int(n), i).str(), "", ok});
        }
    }
    return out;
}

LemmaOutcome run_digit_inequality(const Config& cfg) {
    LemmaOutcome out{"digit-inequality"};
    out.emit_records = false;
    const long cases = 10000;
    std::vector<bool> ok(cases);
    parallel_for(cases, cfg.jobs, [&](long i) {
        SplitMix64 rng = item_rng(cfg.seed, static_cast<std::uint64_t>(i));
        const long parts = rng.range(1, 6);
        std::vector<Int> tuple;
        tuple.push_back(Int(rng.range(1, 1000000)));
        for (long t = 1; t < parts; ++t) tuple.push_back(Int(rng.range(0, 1000000)));
        ok[static_cast<size_t>(i)] = digit_inequality(tuple).holds;
    });
    for (long i = 0; i < cases; ++i)
        push(out, {"case=" + std::to_string(i), "", "", "", ok[static_cast<size_t>(i)]});
    return out;
}

LemmaOutcome run_a_valuation(const Config& cfg) {
    LemmaOutcome out{"a-valuation"};
    const CoefficientFamily fam = CoefficientFamily::a(cfg.i_max);
    for (int i = 1; i <= cfg.i_max; ++i) {
        const Rational& ai = fam.values[static_cast<size_t>(i)];
        const long bound = kappa2(Int(i)) - 1;
        const ExtInt v = nu2(ai);
        push(out, {"i=" + std::to_string(i), ai.str(), v.str(),
                   std::to_string(bound), v == ExtInt(bound)});
    }
    return out;
}

LemmaOutcome run_b_valuation(const Config& cfg) {
    LemmaOutcome out{"b-valuation"};
    const CoefficientFamily fam = CoefficientFamily::b(cfg.i_max);
    for (int i = 1; i <= cfg.i_max; ++i) {
        const Rational& bi = fam.values[static_cast<size_t>(i)];
        const long bound = kappa2(Int(i)) - 1;
        const ExtInt v = nu2(bi);
        push(out, {"i=" + std::to_string(i), bi.str(), v.str(),
                   std::to_string(bound), v == ExtInt(bound)});
    }
    return out;
}

LemmaOutcome run_u_normalization(const Config& cfg) {
    LemmaOutcome out{"u-normalization"};
    const int j_max = std::min(cfg.i_max, 96);
    const CoefficientFamily a = CoefficientFamily::a(j_max);
    const CoefficientFamily b = CoefficientFamily::b(j_max);
    for (int j = 1; j <= j_max; ++j) {
        // u_j = f^{(2j)}(0) / 2^{2j-1} = c_j (2j)! / 2^{2j-1}
        const Rational scale =
            Rational(factorial(static_cast<unsigned long>(2 * j))) /
            Rational(Int(1) << (2 * j - 1));
        const Rational uh = a.values[static_cast<size_t>(j)] * scale;
        const Rational ug = b.values[static_cast<size_t>(j)] * scale;
        const bool ok_h = j == 1 ? uh == Rational(1L, 3L)
                                 : congruent_mod_2pow(uh, Rational(1L), 2);
        push(out, {"h j=" + std::to_string(j), uh.str(), nu2(uh).str(), "", ok_h});
        const bool ok_g = congruent_mod_2pow(ug, Rational(3L), 2);
        push(out, {"g j=" + std::to_string(j), ug.str(), nu2(ug).str(), "", ok_g});
    }
    return out;
}

LemmaOutcome run_t_polynomial(const Config& cfg) {
    LemmaOutcome out{"t-polynomial"};
    const int j_max = std::max(2 * cfg.k_max, 32);
    for (int j = 1; j <= j_max; ++j) {
        bool ok = true;
        try {
            // adams_T_polynomial re-verifies the defining identity internally
            const std::vector<Int> t = adams_T_polynomial(j);
            ok = t.back() == 1 && t.front() == 0;
        } catch (const std::logic_error&) {
            ok = false;
        }
        push(out, {"j=" + std::to_string(j), "", "", "", ok});
    }
    return out;
}

LemmaOutcome run_valuation_bound(const Config& cfg) {
    LemmaOutcome out{"valuation-bound"};
    for (int k = 1; k <= cfg.k_max; ++k) {
        const auto violations = verify_valuation_bound(h_series(2 * k), Int(2 * k));
        push(out, {"f=h l=" + std::to_string(2 * k), "",
                   std::to_string(violations.size()), "", violations.empty()});
    }
    return out;
}

PowerSeries random_series(SplitMix64& rng, int precision, bool integral,
                          bool two_integral) {
    std::vector<Rational> c(static_cast<size_t>(precision) + 1);
    for (auto& coeff : c) {
        const long num = rng.range(-9, 9);
        long den = 1;
        if (!integral) den = two_integral ? 2 * rng.range(0, 4) + 1 : rng.range(1, 9);
        coeff = Rational(num, den);
    }
    return PowerSeries(std::move(c));
}

LemmaOutcome run_reversion(const Config& cfg) {
    LemmaOutcome out{"reversion"};
    out.emit_records = false;
    const long cases = 200;
    std::vector<bool> ok(cases);
    parallel_for(cases, cfg.jobs, [&](long i) {
        SplitMix64 rng = item_rng(cfg.seed ^ 0x1, static_cast<std::uint64_t>(i));
        const int prec = static_cast<int>(rng.range(4, 12));
        PowerSeries f = random_series(rng, prec, false, true);
        std::vector<Rational> c = f.coefficients();
        c[0] = 0L;
        c[1] = Rational(2 * rng.range(-4, 4) + 1, 2 * rng.range(0, 4) + 1);  // 2-unit
        f = PowerSeries(std::move(c));
        const PowerSeries g = revert(f, 2);
        ok[static_cast<size_t>(i)] = compose(f, g) == PowerSeries::identity(prec) &&
                                     compose(g, f) == PowerSeries::identity(prec);
    });
    for (long i = 0; i < cases; ++i)
        push(out, {"case=" + std::to_string(i), "", "", "", ok[static_cast<size_t>(i)]});
    return out;
}

LemmaOutcome run_qth_root(const Config& cfg) {
    LemmaOutcome out{"qth-root"};
    out.emit_records = false;
    const long cases = 200;
    std::vector<bool> ok(cases);
    parallel_for(cases, cfg.jobs, [&](long i) {
        SplitMix64 rng = item_rng(cfg.seed ^ 0x2, static_cast<std::uint64_t>(i));
        const int prec = static_cast<int>(rng.range(4, 10));
        const unsigned long q = static_cast<unsigned long>(2 * rng.range(0, 3) + 1);
        PowerSeries f = random_series(rng, prec, false, true);
        std::vector<Rational> c = f.coefficients();
        c[0] = 1L;
        f = PowerSeries(std::move(c));
        const PowerSeries root = qth_root(f, q, 2);
        bool good = pow_int(root, Int(static_cast<long>(q))) == f;
        // uniqueness: recovering phi from phi^q
        good = good && qth_root(pow_int(f, Int(static_cast<long>(q))), q, 2) == f;
        ok[static_cast<size_t>(i)] = good;
    });
    for (long i = 0; i < cases; ++i)
        push(out, {"case=" + std::to_string(i), "", "", "", ok[static_cast<size_t>(i)]});
    return out;
}

LemmaOutcome run_residue_invariance(const Config& cfg) {
    LemmaOutcome out{"residue-invariance"};
    out.emit_records = false;
    const long cases = 200;
    std::vector<bool> ok(cases);
    parallel_for(cases, cfg.jobs, [&](long i) {
        SplitMix64 rng = item_rng(cfg.seed ^ 0x3, static_cast<std::uint64_t>(i));
        const int low = static_cast<int>(rng.range(-4, -1));
        const int fprec = static_cast<int>(rng.range(2, 6));
        std::vector<Rational> fc(static_cast<size_t>(fprec - low) + 1);
        for (auto& coeff : fc) coeff = Rational(rng.range(-9, 9), rng.range(1, 9));
        const LaurentSeries F(low, std::move(fc));
        const int gprec = static_cast<int>(rng.range(12, 16));
        PowerSeries G = random_series(rng, gprec, false, false);
        std::vector<Rational> gc = G.coefficients();
        gc[0] = 0L;
        gc[1] = Rational(rng.range(1, 9), rng.range(1, 9));
        G = PowerSeries(std::move(gc));
        const auto [lhs, rhs] = residue_change_of_variable(F, G);
        ok[static_cast<size_t>(i)] = lhs == rhs;
    });
    for (long i = 0; i < cases; ++i)
        push(out, {"case=" + std::to_string(i), "", "", "", ok[static_cast<size_t>(i)]});
    return out;
}

LemmaOutcome run_frobenius(const Config& cfg) {
    LemmaOutcome out{"frobenius"};
    out.emit_records = false;
    const long cases = 150;
    std::vector<bool> ok(cases);
    parallel_for(cases, cfg.jobs, [&](long i) {
        SplitMix64 rng = item_rng(cfg.seed ^ 0x4, static_cast<std::uint64_t>(i));
        const int mm = static_cast<int>(rng.range(0, 4));
        const int nn = static_cast<int>(rng.range(0, 4 - mm));
        const int prec = static_cast<int>(rng.range(4, 8));
        const PowerSeries f = random_series(rng, prec, true, true);
        const PowerSeries lhs = pow_int(f, Int(1) << (mm + nn));
        std::vector<Rational> spread(static_cast<size_t>(prec) + 1);
        for (int e = 0; e <= prec; ++e) {
            if (static_cast<long>(e) * (1L << mm) > prec) break;
            spread[static_cast<size_t>(e * (1 << mm))] =
                pow(f.coeff(e), 1UL << mm);
        }
        const PowerSeries rhs = pow_int(PowerSeries(std::move(spread)), Int(1) << nn);
        bool good = true;
        for (int e = 0; e <= prec && good; ++e)
            good = congruent_mod_2pow(lhs.coeff(e), rhs.coeff(e), nn + 1);
        ok[static_cast<size_t>(i)] = good;
    });
    for (long i = 0; i < cases; ++i)
        push(out, {"case=" + std::to_string(i), "", "", "", ok[static_cast<size_t>(i)]});
    return out;
}

LemmaOutcome run_c_routes(const Config& cfg) {
    LemmaOutcome out{"c-routes"};
    // all-ones tuples: direct extraction vs closed form vs rational function
    for (int k = 1; k <= std::min(cfg.k_max, 20); ++k) {
        for (int s = 1; s <= k; ++s) {
            const Rational direct = c_value_direct(CSpec(k, std::vector<int>(s, 1)));
            const bool ok = direct == c_closed_form(s, k) &&
                            direct == c_rational_function_coeff(s, k);
            push(out, {"ones k=" + std::to_string(k) + " s=" + std::to_string(s),
                       direct.str(), nu2(direct).str(), "", ok});
        }
    }
    // general tuples: direct vs tanh-substitution residue route
    const int k_cap = std::min(cfg.k_max, 8);
    const int s_cap = std::min(cfg.s_max, 3);
    for (int k = 1; k <= k_cap; ++k) {
        std::vector<std::vector<int>> tuples;
        std::vector<int> tuple;
        auto rec = [&](auto&& self, int min_j) -> void {
            for (int j = min_j; j <= k; ++j) {
                tuple.push_back(j);
                tuples.push_back(tuple);
                if (static_cast<int>(tuple.size()) < s_cap) self(self, j);
                tuple.pop_back();
            }
        };
        rec(rec, 1);
        std::vector<Instance> results(tuples.size());
        parallel_for(static_cast<long>(tuples.size()), cfg.jobs, [&](long i) {
            const auto& js = tuples[static_cast<size_t>(i)];
            const Rational direct = c_value_direct(CSpec(k, js));
            const bool ok = direct == c_value_substitution(CSpec(k, js));
            results[static_cast<size_t>(i)] =
                Instance{"k=" + std::to_string(k) + " j=" + fmt_tuple(js),
                         direct.str(), nu2(direct).str(), "", ok};
        });
        for (auto& inst : results) push(out, std::move(inst));
    }
    return out;
}

LemmaOutcome run_c1_corollary(const Config& cfg) {
    LemmaOutcome out{"c1-corollary"};
    for (int k = 1; k <= std::max(cfg.k_max, 64); ++k) {
        const Rational c1 = c_closed_form(1, k);
        const long r = nu2(Int(k)).value();
        bool ok = nu2(c1) == ExtInt(r);
        if (k <= std::min(cfg.k_max, 20)) ok = ok && c_value_direct(CSpec(k, {1})) == c1;
        push(out, {"k=" + std::to_string(k), c1.str(), nu2(c1).str(),
                   std::to_string(r), ok});
    }
    return out;
}

LemmaOutcome run_c_propositions(const Config& cfg, bool default_recipe) {
    LemmaOutcome out{"c-propositions"};
    std::vector<std::pair<int, int>> grid;  // (k, s_max)
    if (default_recipe) {
        for (int k = 1; k <= cfg.k_max; ++k)
            grid.emplace_back(k, k <= 12 ? 3 : 2);
    } else {
        for (int k = 1; k <= cfg.k_max; ++k)
            grid.emplace_back(k, std::max(cfg.s_max, 2));
    }
    std::vector<std::vector<PropositionViolation>> found(grid.size());
    std::vector<long> counted(grid.size());
    parallel_for(static_cast<long>(grid.size()), cfg.jobs, [&](long i) {
        const auto [k, s_max] = grid[static_cast<size_t>(i)];
        found[static_cast<size_t>(i)] = verify_valuation_propositions(k, s_max);
        counted[static_cast<size_t>(i)] = 1;
    });
    for (size_t i = 0; i < grid.size(); ++i) {
        for (const auto& v : found[i]) {
            push(out, {v.rule + " k=" + std::to_string(v.k) + " j=" + fmt_tuple(v.tuple) +
                           (v.tuple2.empty() ? "" : " j'=" + fmt_tuple(v.tuple2)),
                       "", v.actual.str(), std::to_string(v.bound), false});
        }
        push(out, {"k=" + std::to_string(grid[i].first) +
                       " s<=" + std::to_string(grid[i].second),
                   "", "", "", found[i].empty()});
    }
    return out;
}

LemmaOutcome run_index_congruence(const Config& cfg) {
    LemmaOutcome out{"index-congruence"};
    const long per_k = 50;
    for (int k = 1; k <= std::min(cfg.k_max, 8); ++k) {
        const long r = nu2(Int(k)).value();
        std::vector<Instance> results(per_k);
        parallel_for(per_k, cfg.jobs, [&](long i) {
            SplitMix64 rng = item_rng(cfg.seed ^ (0x100 + static_cast<std::uint64_t>(k)),
                                      static_cast<std::uint64_t>(i));
            std::vector<long> m(static_cast<size_t>(k));
            for (auto& v : m) v = rng.range(-4, 4);
            const auto zeta = BundleCoefficients::from_integers(m);
            const ExtInt margin = index_congruence_margin(zeta);
            std::string id = "k=" + std::to_string(k) + " m=(";
            for (size_t t = 0; t < m.size(); ++t)
                id += (t ? "," : "") + std::to_string(m[t]);
            id += ")";
            results[static_cast<size_t>(i)] =
                Instance{id, "", margin.str(), std::to_string(r + 4),
                         margin >= ExtInt(r + 4)};
        });
        for (auto& inst : results) push(out, std::move(inst));
    }
    return out;
}

using Runner = LemmaOutcome (*)(const Config&);

const std::vector<std::pair<std::string, Runner>>& lemma_registry() {
    static const std::vector<std::pair<std::string, Runner>> registry = {
        {"factorial-order", run_factorial_order},
        {"binomial-order", run_binomial_order},
        {"power-order", run_power_order},
        {"digit-inequality", run_digit_inequality},
        {"a-valuation", run_a_valuation},
        {"b-valuation", run_b_valuation},
        {"u-normalization", run_u_normalization},
        {"t-polynomial", run_t_polynomial},
        {"valuation-bound", run_valuation_bound},
        {"reversion", run_reversion},
        {"qth-root", run_qth_root},
        {"residue-invariance", run_residue_invariance},
        {"frobenius", run_frobenius},
        {"c-routes", run_c_routes},
        {"c1-corollary", run_c1_corollary},
        {"index-congruence", run_index_congruence},
    };
    return registry;
}

// ---------------------------------------------------------------------------
// report emission

json instance_json(const Instance& inst) {
    json rec;
    rec["id"] = inst.id;
    if (!inst.value.empty()) rec["value"] = inst.value;
    if (!inst.nu2.empty()) rec["nu2"] = inst.nu2;
    if (!inst.bound.empty()) rec["bound"] = inst.bound;
    rec["pass"] = inst.pass;
    return rec;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string outcomes_to_csv(const std::vector<LemmaOutcome>& outcomes) {
    std::ostringstream os;
    os << "lemma,id,value,nu2,bound,pass\n";
    for (const auto& outcome : outcomes)
        for (const auto& rec : outcome.records)
            os << outcome.name << ',' << csv_escape(rec.id) << ',' << rec.value << ','
               << rec.nu2 << ',' << rec.bound << ',' << (rec.pass ? "true" : "false")
               << '\n';
    return os.str();
}

json report_config(const Config& cfg) {
    json c;
    c["lemma"] = cfg.lemma;
    c["i_max"] = cfg.i_max;
    c["k_max"] = cfg.k_max;
    c["s_max"] = cfg.s_max;
    c["box"] = cfg.box;
    c["k"] = cfg.k;
    c["precision"] = cfg.precision;
    c["seed"] = cfg.seed;
    // jobs is deliberately not embedded: the report content is independent
    // of the worker count
    return c;
}

int write_output(const Config& cfg, const std::string& payload) {
    if (cfg.out == "-") {
        std::cout << payload;
        return 0;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        std::cerr << "lgenus: cannot open output path '" << cfg.out << "'\n";
        return 2;
    }
    file << payload;
    return file.good() ? 0 : 2;
}

json index_report_json(const IndexReport& report) {
    json r;
    r["k"] = report.k;
    r["r"] = report.r;
    json m = json::array();
    for (const auto& mj : report.m) m.push_back(mj.str());
    r["m"] = m;
    r["index"] = report.index.str();
    r["linear_term"] = report.linear_term.str();
    r["congruence_margin"] = report.congruence_margin.str();
    r["verdict"] = to_string(report.verdict);
    return r;
}

// ---------------------------------------------------------------------------
// commands

json series_as_json(const PowerSeries& f) {
    json arr = json::array();
    for (const Rational& c : f.coefficients()) arr.push_back(c.str());
    return arr;
}

int cmd_dump_series(const Config& cfg) {
    const CoefficientFamily a = CoefficientFamily::a(cfg.i_max);
    const CoefficientFamily b = CoefficientFamily::b(cfg.i_max);
    std::string payload;
    if (cfg.format == "json") {
        json doc;
        doc["i_max"] = cfg.i_max;
        for (const auto* fam : {&a, &b}) {
            json arr = json::array();
            for (int i = 0; i <= cfg.i_max; ++i) {
                const Rational& v = fam->values[static_cast<size_t>(i)];
                json rec;
                rec["i"] = i;
                rec["value"] = v.str();
                rec["nu2"] = nu2(v).str();
                rec["kappa2"] = kappa2(Int(i));
                arr.push_back(rec);
            }
            doc[fam == &a ? "a" : "b"] = arr;
        }
        // raw coefficient arrays, index = exponent
        const int prec = cfg.precision > 0 ? cfg.precision : 2 * cfg.i_max;
        json raw;
        raw["tanh"] = series_as_json(tanh_series(prec));
        raw["h"] = series_as_json(h_series(prec));
        raw["g"] = series_as_json(g_series(prec));
        doc["series"] = raw;
        payload = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "family,i,value,nu2,kappa2\n";
        for (const auto* fam : {&a, &b}) {
            for (int i = 0; i <= cfg.i_max; ++i) {
                const Rational& v = fam->values[static_cast<size_t>(i)];
                os << (fam == &a ? 'a' : 'b') << ',' << i << ',' << v.str() << ','
                   << nu2(v).str() << ',' << kappa2(Int(i)) << '\n';
            }
        }
        payload = os.str();
    }
    return write_output(cfg, payload);
}

int cmd_verify(const Config& cfg) {
    std::vector<LemmaOutcome> outcomes;
    if (cfg.lemma == "all") {
        for (const auto& [name, runner] : lemma_registry()) {
            if (name == "c-propositions") continue;  // placed below with recipe bounds
            outcomes.push_back(runner(cfg));
        }
        outcomes.push_back(run_c_propositions(cfg, /*default_recipe=*/true));
    } else if (cfg.lemma == "c-propositions") {
        outcomes.push_back(run_c_propositions(cfg, /*default_recipe=*/false));
    } else {
        const auto& registry = lemma_registry();
        auto it = std::find_if(registry.begin(), registry.end(),
                               [&](const auto& entry) { return entry.first == cfg.lemma; });
        if (it == registry.end()) {
            std::cerr << "lgenus: unknown lemma '" << cfg.lemma << "'\n";
            return 2;
        }
        outcomes.push_back(it->second(cfg));
    }

    long checked = 0, violations = 0;
    for (const auto& outcome : outcomes) {
        checked += outcome.checked;
        violations += outcome.violations;
        std::cout << (outcome.violations == 0 ? "PASS" : "FAIL") << "  " << outcome.name
                  << "  (" << outcome.checked << " checked, " << outcome.violations
                  << " violations)\n";
    }

    std::string payload;
    if (cfg.format == "json") {
        json doc;
        doc["command"] = "verify";
        doc["config"] = report_config(cfg);
        json sections = json::array();
        for (const auto& outcome : outcomes) {
            json section;
            section["lemma"] = outcome.name;
            section["checked"] = outcome.checked;
            section["violations"] = outcome.violations;
            json recs = json::array();
            for (const auto& rec : outcome.records) recs.push_back(instance_json(rec));
            section[outcome.emit_records ? "records" : "failures"] = recs;
            sections.push_back(section);
        }
        doc["sections"] = sections;
        doc["total_checked"] = checked;
        doc["total_violations"] = violations;
        doc["pass"] = violations == 0;
        payload = doc.dump(2) + "\n";
    } else {
        payload = outcomes_to_csv(outcomes);
    }
    if (cfg.out != "-" || cfg.format != "json") {
        // keep stdout readable when the report goes to a file; a json report
        // to stdout replaces the summary-only view
        const int rc = write_output(cfg, payload);
        if (rc != 0) return rc;
    } else {
        std::cout << payload;
    }
    return violations == 0 ? 0 : 1;
}

int cmd_index(const Config& cfg) {
    if (cfg.m.size() != static_cast<size_t>(cfg.k)) {
        std::cerr << "lgenus: --m must supply exactly k multipliers\n";
        return 2;
    }
    std::vector<Rational> m;
    for (const auto& s : cfg.m) m.push_back(Rational::parse(s));
    const BundleCoefficients zeta(cfg.k, std::move(m));
    const int precision = cfg.precision > 0 ? cfg.precision : -1;
    // index_value cross-checks the expansion route for integer multipliers
    const Rational idx = index_value(zeta, precision);
    IndexReport report = divisibility_verdict(zeta);
    report.index = idx;

    std::cout << "index = " << idx.str() << "\n";
    std::cout << "p1 = " << p1_of_zeta(zeta).str() << "\n";
    std::cout << "congruence_margin = " << report.congruence_margin.str() << "\n";
    std::cout << "verdict = " << to_string(report.verdict) << "\n";

    json doc;
    doc["command"] = "index";
    doc["config"] = report_config(cfg);
    doc["report"] = index_report_json(report);
    const std::string payload = doc.dump(2) + "\n";
    if (cfg.out != "-") {
        const int rc = write_output(cfg, payload);
        if (rc != 0) return rc;
    }
    return report.verdict == Verdict::Violation ? 1 : 0;
}

int cmd_search(const Config& cfg) {
    const SearchResult result = solution_search(cfg.k, cfg.box);
    bool violation = false;
    std::cout << "candidates = " << result.candidates_checked
              << (result.complete ? " (complete)" : " (partial)") << "\n";
    for (const auto& sol : result.solutions) {
        std::cout << "solution m=(";
        for (size_t i = 0; i < sol.m.size(); ++i)
            std::cout << (i ? "," : "") << sol.m[i].str();
        std::cout << ") verdict=" << to_string(sol.verdict) << "\n";
        violation = violation || sol.verdict == Verdict::Violation;
    }

    json doc;
    doc["command"] = "search";
    doc["config"] = report_config(cfg);
    doc["candidates"] = result.candidates_checked;
    doc["complete"] = result.complete;
    json sols = json::array();
    for (const auto& sol : result.solutions) sols.push_back(index_report_json(sol));
    doc["solutions"] = sols;
    const std::string payload = doc.dump(2) + "\n";
    if (cfg.out != "-") {
        const int rc = write_output(cfg, payload);
        if (rc != 0) return rc;
    }
    return violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Exact 2-adic verification of Hirzebruch index divisibility"};
    app.set_config("--config");
    app.allow_config_extras(false);

    app.add_option("--command", cfg.command,
                   "dump-series | verify | index | search");
    app.add_option("--lemma", cfg.lemma, "verify: lemma sweep name, or 'all'");
    app.add_option("--i-max", cfg.i_max, "coefficient sweep bound")->check(CLI::PositiveNumber);
    app.add_option("--k-max", cfg.k_max, "dimension sweep bound")->check(CLI::PositiveNumber);
    app.add_option("--s-max", cfg.s_max, "tuple size bound")->check(CLI::PositiveNumber);
    app.add_option("--box", cfg.box, "search box radius")->check(CLI::NonNegativeNumber);
    app.add_option("--k", cfg.k, "dimension parameter (complex dimension 2k)")
        ->check(CLI::PositiveNumber);
    app.add_option("--m", cfg.m, "comma-separated multipliers m_1..m_k")->delimiter(',');
    app.add_option("--precision", cfg.precision, "series precision override")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", cfg.out, "report path, '-' for stdout");
    app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "seed for randomized sweeps");

    const std::pair<const char*, const char*> commands[] = {
        {"dump-series", "emit a_i/b_i tables and raw series coefficients"},
        {"verify", "run lemma sweeps and report violations"},
        {"index", "exact index, p1 and verdict for one multiplier vector"},
        {"search", "enumerate integer vectors with index exactly 1"},
    };
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // 0 covers --help; everything else is usage
    }

    for (const CLI::App* sub : app.get_subcommands()) {
        if (!cfg.command.empty() && cfg.command != sub->get_name()) {
            std::cerr << "lgenus: --command '" << cfg.command
                      << "' conflicts with subcommand '" << sub->get_name() << "'\n";
            return 2;
        }
        cfg.command = sub->get_name();
    }

    try {
        if (cfg.command == "dump-series") return cmd_dump_series(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "index") return cmd_index(cfg);
        if (cfg.command == "search") return cmd_search(cfg);
        std::cerr << "lgenus: no command given (use --command or a subcommand; "
                     "--help lists options)\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "lgenus: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lgenus: internal check failed: " << e.what() << "\n";
        return 1;
    }
}
