#include "asqf/cli.hpp"

#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asqf/circulant.hpp"
#include "asqf/curves.hpp"
#include "asqf/formats.hpp"
#include "asqf/quadform.hpp"
#include "asqf/selftest.hpp"
#include "asqf/util.hpp"

#ifndef ASQF_FIXTURES_DIR
#define ASQF_FIXTURES_DIR "fixtures"
#endif

namespace asqf {
namespace {

using ordered_json = nlohmann::ordered_json;

// Item counts above this are refused outright; the per-field enumeration
// budget already gates each item's work, this only bounds the result
// buffer itself.
constexpr uint64_t kMaxSearchItems = 4000000;

int neg1_pow(uint64_t e) { return (e & 1) ? -1 : 1; }

uint32_t v2(uint32_t x) {
    uint32_t v = 0;
    while (x && (x & 1) == 0) { x >>= 1; ++v; }
    return v;
}

std::string dump(const ordered_json& j, bool pretty) {
    return pretty ? j.dump(2) : j.dump();
}

ordered_json run_meta(const RunConfig& cfg) {
    return ordered_json{{"budget", cfg.budget}, {"seed", cfg.seed}};
}

ordered_json class_json(const QuadClass& c) {
    return ordered_json{{"r", c.r}, {"epsilon", c.epsilon}};
}

LinPoly parse_nonzero_ell(const Ctx& K, const std::string& text) {
    LinPoly ell = parse_linpoly(K, text);
    if (ell.is_zero())
        throw Error(ErrorKind::InvalidInput, "ell = 0 is rejected at the command level");
    return ell;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    Ctx K = field_from_spec(parse_field_spec(cfg.field), cfg.budget);
    LinPoly ell = parse_nonzero_ell(K, cfg.ell);

    std::vector<std::pair<std::string, QuadClass>> got;
    got.emplace_back("diag", classify_via_diag(ell));
    got.emplace_back("dickson", classify_via_dickson(ell));

    bool brute_skipped = false;
    std::vector<uint64_t> observed;
    try {
        auto bf = classify_via_bruteforce(ell);
        got.emplace_back("bruteforce", bf.first);
        observed = std::move(bf.second);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        brute_skipped = true;
    }

    LinPoly L = symmetrize(ell);
    bool circ_applies = !L.is_zero();
    if (circ_applies)
        for (const auto& c : L.a) circ_applies = circ_applies && K->is_in_base_field(c);
    if (circ_applies) got.emplace_back("circulant", circ_classify(L, circ_ell_info(ell)));

    const QuadClass& ref = got.front().second;
    bool agree = true;
    for (const auto& [name, cls] : got) agree = agree && cls.same_class(ref);

    std::vector<uint64_t> predicted = root_count_distribution(*K, ref.r, ref.epsilon);
    if (!observed.empty() && observed != predicted) agree = false;

    ordered_json rec;
    rec["command"] = "classify";
    rec["field"] = field_spec_text(*K);
    rec["ell"] = linpoly_text(ell);
    rec["r"] = ref.r;
    rec["epsilon"] = ref.epsilon;
    rec["degenerate"] = ref.degenerate;
    rec["agree"] = agree;
    ordered_json methods;
    for (const auto& [name, cls] : got) methods[name] = class_json(cls);
    rec["methods"] = methods;
    if (brute_skipped) rec["bruteforce"] = "skipped (budget)";
    ordered_json nl;
    for (size_t i = 0; i < predicted.size(); ++i) nl[std::to_string(i)] = predicted[i];
    rec["n_lambda"] = nl;
    rec["run"] = run_meta(cfg);
    out << dump(rec, cfg.pretty) << "\n";
    return agree ? 0 : 3;
}

void put_curve_fields(ordered_json& rec, const FieldCtx& K, const LinPoly& ell,
                      const CurveReport& rep) {
    rec["field"] = field_spec_text(K);
    rec["ell"] = linpoly_text(ell);
    rec["k"] = rep.k;
    rec["m"] = rep.m;
    rec["genus"] = rep.genus;
    rec["hw_lower"] = rep.hw_lower;
    rec["hw_upper"] = rep.hw_upper;
    rec["N"] = rep.N;
    rec["verdict"] = to_string(rep.verdict);
    rec["class"] = class_json(rep.cls);
}

// Attaches oracle_N, or the explicit skip marker when the enumeration does
// not fit the budget. Returns false on a count mismatch.
bool attach_oracle(ordered_json& rec, const LinPoly& ell, uint32_t k, uint64_t n_formula) {
    try {
        uint64_t bn = point_count_bruteforce(ell, k);
        rec["oracle_N"] = bn;
        return bn == n_formula;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        rec["oracle"] = "skipped (budget)";
        return true;
    }
}

int cmd_curve(const RunConfig& cfg, std::ostream& out) {
    Ctx K = field_from_spec(parse_field_spec(cfg.field), cfg.budget);
    LinPoly ell = parse_nonzero_ell(K, cfg.ell);
    CurveReport rep = point_count(ell, cfg.k);

    ordered_json rec;
    rec["command"] = "curve";
    put_curve_fields(rec, *K, ell, rep);

    bool ok = true;
    if (cfg.oracle) {
        uint64_t bn = point_count_bruteforce(ell, cfg.k);
        rec["oracle_N"] = bn;
        ok = (bn == rep.N);
    } else if (rep.verdict != Verdict::Neither) {
        ok = attach_oracle(rec, ell, cfg.k, rep.N);
    }
    rec["run"] = run_meta(cfg);
    out << dump(rec, cfg.pretty) << "\n";
    return ok ? 0 : 3;
}

int cmd_field_info(const RunConfig& cfg, std::ostream& out) {
    Ctx K = field_from_spec(parse_field_spec(cfg.field), cfg.budget);
    ordered_json rec;
    rec["command"] = "field-info";
    rec["field"] = field_spec_text(*K);
    rec["p"] = K->p;
    rec["s"] = K->s;
    rec["n"] = K->n;
    rec["q"] = K->q;
    rec["order"] = K->order;
    rec["run"] = run_meta(cfg);
    out << dump(rec, cfg.pretty) << "\n";
    return 0;
}

int cmd_selftest(const SelftestConfig& sc, std::ostream& out) {
    std::vector<SuiteResult> results = run_acceptance_suites(sc);
    bool any_fail = false;
    for (size_t i = 0; i < results.size(); ++i) {
        const SuiteResult& r = results[i];
        out << (i + 1) << ". " << r.name << ": " << r.status;
        if (!r.detail.empty()) out << " (" << r.detail << ")";
        out << "\n";
        any_fail = any_fail || r.status == "FAIL";
    }
    out << (any_fail ? "FAIL" : "OK") << "\n";
    return any_fail ? 1 : 0;
}

} // namespace

std::vector<std::string> search_lines(const RunConfig& cfg) {
    Ctx K = field_from_spec(parse_field_spec(cfg.field), cfg.budget);
    const FieldCtx& F = *K;

    ordered_json meta;
    meta["command"] = "search";
    meta["family"] = cfg.family;
    meta["field"] = field_spec_text(F);
    if (cfg.family == "thm-binomial") {
        meta["m"] = cfg.m;
        meta["l"] = cfg.l;
    }
    meta["k"] = cfg.k;
    meta["run"] = run_meta(cfg);

    std::vector<std::string> lines;
    lines.push_back(dump(meta, cfg.pretty));

    auto curve_rec = [&](const LinPoly& ell, const CurveReport& rep, ordered_json params) {
        ordered_json rec;
        rec["params"] = std::move(params);
        put_curve_fields(rec, F, ell, rep);
        if (!attach_oracle(rec, ell, rep.k, rep.N))
            throw Error(ErrorKind::InternalCheckFailed,
                        "oracle count disagrees with the formula route");
        return dump(rec, cfg.pretty);
    };

    auto warn_rec = [&](ordered_json params) {
        ordered_json rec;
        rec["warning"] = "skipped: budget exceeded";
        rec["params"] = std::move(params);
        return dump(rec, cfg.pretty);
    };

    uint64_t count = 0;
    std::function<std::string(size_t)> item;

    if (cfg.family == "rank2") {
        if (F.n % 2 == 0) {
            F.check_enumeration_budget();
            const uint64_t dspan = F.q - 1, aspan = F.order - 1;
            count = dspan * dspan * aspan * aspan;
            item = [&F, &curve_rec, &warn_rec, K, dspan, aspan](size_t idx) -> std::string {
                uint64_t i = idx;
                uint16_t d1 = uint16_t(1 + i % dspan);
                i /= dspan;
                uint16_t d2 = uint16_t(1 + i % dspan);
                i /= dspan;
                FFElem a1 = F.element_from_index(1 + i % aspan);
                i /= aspan;
                FFElem a2 = F.element_from_index(1 + i);
                ordered_json params{{"d1", d1},
                                    {"d2", d2},
                                    {"alpha1", a1.to_string()},
                                    {"alpha2", a2.to_string()}};
                try {
                    auto built = rank2_build(K, d1, d2, a1, a2);
                    return curve_rec(built.first, built.second, std::move(params));
                } catch (const Error& e) {
                    switch (e.kind()) {
                        case ErrorKind::CancellationConditionFails:
                        case ErrorKind::AlphasDependent: return std::string();
                        case ErrorKind::BudgetExceeded: return warn_rec(std::move(params));
                        default: throw;
                    }
                }
            };
        }
    } else if (cfg.family == "trinomial") {
        if (F.n <= 4)
            throw Error(ErrorKind::InvalidInput, "the trinomial family needs n > 4");
        const uint64_t aspan = F.q - 1, qspan = F.q;
        count = aspan * qspan * qspan;
        item = [&F, &cfg, &curve_rec, &warn_rec, K, aspan, qspan](size_t idx) -> std::string {
            uint64_t i = idx;
            uint16_t a = uint16_t(1 + i % aspan);
            i /= aspan;
            uint16_t b = uint16_t(i % qspan);
            i /= qspan;
            uint16_t c = uint16_t(i);
            ordered_json params{{"a", a}, {"b", b}, {"c", c}};
            try {
                family_trinomial_test(K, a, b, c);
                LinPoly ell = make_linpoly(K, {F.from_fq(c), F.from_fq(F.fq.mul(2, b)),
                                               F.from_fq(F.fq.mul(2, a))});
                CurveReport rep = point_count(ell, cfg.k);
                if (rep.verdict == Verdict::Neither) return std::string();
                return curve_rec(ell, rep, std::move(params));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::BudgetExceeded) return warn_rec(std::move(params));
                throw;
            }
        };
    } else if (cfg.family == "prop-binomial") {
        if (F.n < 4)
            throw Error(ErrorKind::InvalidInput, "the prop-binomial family needs n >= 4");
        F.check_enumeration_budget();
        const uint64_t aspan = F.order - 1;
        count = aspan * aspan;
        item = [&F, &cfg, &curve_rec, &warn_rec, K, aspan](size_t idx) -> std::string {
            FFElem a = F.element_from_index(1 + uint64_t(idx) % aspan);
            FFElem b = F.element_from_index(1 + uint64_t(idx) / aspan);
            ordered_json params{{"a", a.to_string()}, {"b", b.to_string()}};
            try {
                bool crit = prop_kernel2_test(a, b);
                LinPoly ell = make_linpoly(K, {b, F.add(a, a)});
                CurveReport rep = point_count(ell, cfg.k);
                if ((rep.cls.r == int(F.n) - 2) != crit)
                    throw Error(ErrorKind::InternalCheckFailed,
                                "kernel criterion disagrees with the classifier rank");
                int want = neg1_pow(uint64_t(F.q + 1) / 2 * (F.n - 1)) *
                           F.fq.eta(F.norm_scalar(a));
                if (crit && rep.cls.epsilon != want)
                    throw Error(ErrorKind::InternalCheckFailed,
                                "norm formula disagrees with the classifier epsilon");
                if (rep.verdict == Verdict::Neither) return std::string();
                return curve_rec(ell, rep, std::move(params));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::BudgetExceeded) return warn_rec(std::move(params));
                throw;
            }
        };
    } else if (cfg.family == "thm-binomial") {
        const uint32_t m = cfg.m, l = cfg.l;
        if (!(0 < l && l < m && 2 * m < F.n))
            throw Error(ErrorKind::ParameterOrderViolated, "need 0 < l < m < n/2");
        if (F.n % (m + l) == 0 && F.n % (m - l) == 0) {
            F.check_enumeration_budget();
            const uint32_t d = std::gcd(m, m - l);
            const uint32_t e = std::lcm(m + l, m - l);
            const uint64_t ne = F.n / e;
            const bool branch1 = v2(l) >= v2(m - l);
            uint64_t qd = 1, qml = 1;
            for (uint32_t i = 0; i < d; ++i) qd *= F.q;
            for (uint32_t i = 0; i < m - l; ++i) qml *= F.q;
            const uint64_t e1 = branch1 ? 0 : (qml - 1) / (qd + 1);
            const uint64_t g2 = branch1 ? 0 : std::gcd(ne, qd + 1);

            LinPoly frob_ml = sub(linpoly_monomial(K, F.one(), m - l),
                                  linpoly_monomial(K, F.one(), 0));
            std::vector<FFElem> deltas;
            for (const FFElem& dlt : kernel_basis(frob_ml).elements()) {
                if (dlt.is_zero()) continue;
                bool ok = branch1 ? (ne % F.p == 0)
                                  : (F.pow(dlt, e1 * g2) == F.one() &&
                                     (F.pow(dlt, e1) != F.one() || ne % F.p == 0));
                if (ok) deltas.push_back(dlt);
            }
            const uint64_t gspan = F.order - 1;
            count = gspan * deltas.size();
            item = [&F, &cfg, &curve_rec, &warn_rec, K, m, l, branch1, deltas,
                    gspan](size_t idx) -> std::string {
                FFElem gamma = F.element_from_index(1 + uint64_t(idx) % gspan);
                const FFElem& delta = deltas[size_t(uint64_t(idx) / gspan)];
                FFElem a = F.mul(F.mul(F.frobenius(gamma, m), gamma), delta);
                FFElem b = F.neg(F.mul(F.mul(F.frobenius(gamma, l), gamma), delta));
                ordered_json params{{"gamma", gamma.to_string()}, {"delta", delta.to_string()}};
                try {
                    LinPoly ell = add(linpoly_monomial(K, a, m), linpoly_monomial(K, b, l));
                    if (kernel_basis(symmetrize(ell)).dim() != 2 * size_t(m))
                        throw Error(ErrorKind::InternalCheckFailed,
                                    "constructed binomial misses the predicted kernel");
                    if (branch1) subfield_epsilon(gamma, delta, m, l);
                    CurveReport rep = point_count(ell, cfg.k);
                    if (rep.verdict == Verdict::Neither) return std::string();
                    return curve_rec(ell, rep, std::move(params));
                } catch (const Error& e2) {
                    if (e2.kind() == ErrorKind::BudgetExceeded)
                        return warn_rec(std::move(params));
                    throw;
                }
            };
        }
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown family: " + cfg.family);
    }

    if (count > kMaxSearchItems)
        throw Error(ErrorKind::BudgetExceeded, "search space has " + std::to_string(count) +
                                                   " items, above the supported cap");
    if (count > 0) {
        std::vector<std::string> recs = parallel_map<std::string>(size_t(count), cfg.threads, item);
        for (std::string& r : recs)
            if (!r.empty()) lines.push_back(std::move(r));
    }
    return lines;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quadratic forms Tr(x l(x)) on F_{q^n} and the curves y^(q^k) - y = x l(x)"};
    app.name("asqf");
    app.require_subcommand(1);

    RunConfig cfg;
    uint64_t max_qn = 0;
    std::string fixtures = ASQF_FIXTURES_DIR;

    auto add_common = [&cfg](CLI::App* c, bool field_required) {
        auto* f = c->add_option("--field", cfg.field,
                                "field spec, e.g. \"p=3 s=1 n=4\" (base/top optional)");
        if (field_required) f->required();
        c->add_option("--budget", cfg.budget, "enumeration budget, elements of F_{q^n}")
            ->envname("ASQF_BUDGET")
            ->capture_default_str();
        c->add_option("--seed", cfg.seed, "PRNG seed, echoed into the output")
            ->capture_default_str();
        c->add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
        auto* pp = c->add_flag("--pretty", cfg.pretty, "indent JSON output");
        c->add_flag("--json", "compact JSON output (the default)")->excludes(pp);
    };

    CLI::App* c_classify = app.add_subcommand("classify", "rank and sign of Tr(x l(x))");
    add_common(c_classify, true);
    c_classify->add_option("--ell", cfg.ell, "coefficients of l, low q-power first")->required();

    CLI::App* c_curve =
        app.add_subcommand("curve", "point count and verdict of y^(q^k) - y = x l(x)");
    add_common(c_curve, true);
    c_curve->add_option("--ell", cfg.ell, "coefficients of l, low q-power first")->required();
    c_curve->add_option("--k", cfg.k, "left-hand exponent q^k; k must divide n")
        ->capture_default_str();
    c_curve->add_flag("--oracle", cfg.oracle, "force the brute-force cross-check");

    CLI::App* c_search =
        app.add_subcommand("search", "sweep a family, emit the maximal/minimal hits");
    add_common(c_search, true);
    c_search->add_option("--family", cfg.family, "rank2 | trinomial | prop-binomial | thm-binomial")
        ->required();
    c_search->add_option("--k", cfg.k, "left-hand exponent q^k")->capture_default_str();
    c_search->add_option("--m", cfg.m, "upper q-degree (thm-binomial)")->capture_default_str();
    c_search->add_option("--l", cfg.l, "lower q-degree (thm-binomial)")->capture_default_str();

    CLI::App* c_selftest = app.add_subcommand("selftest", "run the oracle-agreement suites");
    add_common(c_selftest, false);
    c_selftest->add_option("--max-qn", max_qn,
                           "skip suites needing a field larger than this (0 = no cap)");
    c_selftest->add_option("--fixtures", fixtures, "directory of golden fixture files")
        ->capture_default_str();

    CLI::App* c_info = app.add_subcommand("field-info", "construct a field, print its parameters");
    add_common(c_info, true);

    try {
        std::vector<const char*> argv;
        argv.push_back("asqf");
        for (const std::string& a : args) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (c_classify->parsed()) return cmd_classify(cfg, out);
        if (c_curve->parsed()) return cmd_curve(cfg, out);
        if (c_search->parsed()) {
            for (const std::string& line : search_lines(cfg)) out << line << "\n";
            return 0;
        }
        if (c_selftest->parsed()) {
            SelftestConfig sc;
            sc.max_qn = max_qn;
            sc.budget = cfg.budget;
            sc.fixtures_dir = fixtures;
            return cmd_selftest(sc, out);
        }
        if (c_info->parsed()) return cmd_field_info(cfg, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        bool internal = e.kind() == ErrorKind::InternalCheckFailed ||
                        e.kind() == ErrorKind::NoConsistentClass;
        return internal ? 3 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace asqf
