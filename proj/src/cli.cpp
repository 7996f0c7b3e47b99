#include "artinlab/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "artinlab/census.hpp"
#include "artinlab/discriminants.hpp"
#include "artinlab/errors.hpp"
#include "artinlab/heuristics.hpp"
#include "artinlab/mkopt.hpp"
#include "artinlab/primroot.hpp"
#include "artinlab/quadchar.hpp"
#include "artinlab/report.hpp"
#include "artinlab/sieve.hpp"
#include "artinlab/tuple.hpp"

namespace artinlab::cli {

namespace {

using json = nlohmann::json;

// Accepts plain integers and exact scientific forms such as 1e6.
const CLI::Validator kCount(
    [](std::string& s) -> std::string {
        if (s.find_first_of("eE") == std::string::npos) return {};
        try {
            std::size_t pos = 0;
            const long double v = std::stold(s, &pos);
            if (pos != s.size() || v < 0 || v != std::floor(v) || v > 1.8e19L) return "expected a nonnegative integer";
            s = std::to_string(static_cast<unsigned long long>(v));
        } catch (const std::exception&) {
            return "expected a number";
        }
        return {};
    },
    "INT", "count");

std::string join(const std::vector<i64>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string join_u(const std::vector<u64>& v, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

json count_row_predicted(const CountReport& r) { return r.predicted_available ? json(r.predicted) : json(nullptr); }

json warnings(const CountReport& r) {
    std::string s;
    for (std::size_t i = 0; i < r.warnings.size(); ++i) s += (i ? "; " : "") + r.warnings[i];
    return s;
}

struct Globals {
    std::string format = "csv";
    std::string out;
    int threads = 0;
    bool deterministic = false;
    bool quiet = false;
    u64 window = u64{1} << 20;
};

class Runner {
public:
    Runner(std::ostream& err) : err_(err) {}

    CensusOptions census(const std::string& label) const {
        CensusOptions o;
        o.window = globals.window;
        o.parallel = !globals.deterministic;
        o.threads = globals.threads;
        if (!globals.quiet) {
            auto last = std::make_shared<int>(-1);
            std::ostream* err = &err_;
            o.progress = [last, err, label](std::size_t done, std::size_t total) {
                const int decile = total ? static_cast<int>(done * 10 / total) : 10;
                if (decile != *last && total > 1) {
                    *last = decile;
                    *err << "[artinlab] " << label << ": " << decile * 10 << "% (" << done << "/" << total << ")\n";
                }
            };
        }
        return o;
    }

    Globals globals;
    std::ostream& err_;
};

void collect_params(const CLI::App* sub, Report& report) {
    for (const CLI::Option* opt : sub->get_options()) {
        const std::string name = opt->get_single_name();
        if (name == "help" || name.empty()) continue;
        std::string value;
        if (opt->get_expected_max() == 0) {
            value = opt->count() > 0 ? "true" : "false";
        } else if (opt->count() > 0) {
            const auto& res = opt->results();
            for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
        } else {
            value = opt->get_default_str();
            if (value.size() >= 2 && value.front() == '[' && value.back() == ']') value = value.substr(1, value.size() - 2);
            if (value == "{}") value.clear();
        }
        report.params.emplace_back(name, value);
    }
}

PolynomialF optimal_F(unsigned k, unsigned degree, double tolerance) {
    const auto problem = assemble_forms(k, symmetric_basis(k, degree));
    const auto result = maximize_ratio(problem, tolerance);
    PolynomialF F(k);
    for (std::size_t i = 0; i < problem.basis.size(); ++i) F = F + problem.basis[i].scaled(result.coefficients[i]);
    return F;
}

int exit_for(const std::exception& e, std::ostream& err) {
    err << "artinlab: " << e.what() << '\n';
    if (dynamic_cast<const InvariantViolation*>(&e)) return Invariant;
    if (dynamic_cast<const ResourceError*>(&e)) return Resource;
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const InsufficientData*>(&e) ||
        dynamic_cast<const ConstructionFailure*>(&e) || dynamic_cast<const DegenerateDistribution*>(&e) ||
        dynamic_cast<const ExcludedPoint*>(&e) || dynamic_cast<const std::out_of_range*>(&e))
        return Usage;
    return Invariant;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Runner runner(err);
    Globals& G = runner.globals;

    CLI::App app{"Primitive-root census and Maynard-Tao sieve toolkit", "artinlab"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "Read defaults from a key = value file");
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--format", G.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
    app.add_option("--out", G.out, "Write the report to this file instead of standard output");
    app.add_option("--threads", G.threads, "Worker threads (0 = all cores)")->envname("ARTINLAB_THREADS")->check(CLI::NonNegativeNumber);
    app.add_flag("--deterministic", G.deterministic, "Run censuses on the serial reference path");
    app.add_flag("--quiet", G.quiet, "Suppress progress lines on standard error");
    app.add_option("--window", G.window, "Census window length")->transform(kCount)->check(CLI::PositiveNumber);

    Report report;
    std::map<const CLI::App*, std::function<void()>> bodies;
    auto bind = [&](CLI::App* sub, std::function<void()> body) { bodies[sub] = std::move(body); };

    // pr-enumerate
    i64 g = 2;
    u64 from = 2, to = 0, x = 0;
    bool exclude_small = false;
    {
        auto* s = app.add_subcommand("pr-enumerate", "Primes in [from, to) with g as a primitive root");
        s->add_option("--g", g)->required();
        s->add_option("--from", from)->transform(kCount);
        s->add_option("--to", to)->transform(kCount)->required();
        s->add_flag("--exclude-small", exclude_small, "Drop p = 2 and p | 2g");
        bind(s, [&] {
            PrimrootOptions o{runner.census("pr-enumerate"), exclude_small};
            report.columns = {"p"};
            for (u64 p : enumerate_pr_primes(g, from, to, o)) report.add_row({p});
        });
    }

    // classify
    u64 single_p = 0;
    {
        auto* s = app.add_subcommand("classify", "Primitive root / least q with p in P_q");
        s->add_option("--g", g)->required();
        s->add_option("--p", single_p, "Classify a single prime")->transform(kCount);
        s->add_option("--from", from)->transform(kCount);
        s->add_option("--to", to, "Classify every prime in [from, to)")->transform(kCount);
        bind(s, [&] {
            report.columns = {"p", "status", "q"};
            auto row = [&](u64 p) {
                const auto c = classify(g, p);
                report.add_row({p, to_string(c.status), c.status == PrStatus::InPq ? json(c.q) : json(nullptr)});
            };
            if (single_p) {
                if (!is_prime(single_p)) throw std::invalid_argument("classify: p must be prime");
                row(single_p);
            } else {
                if (to == 0) throw std::invalid_argument("classify: give --p or --to");
                for (u64 p : primes_in_range_parallel(from, to, runner.census("classify"))) row(p);
            }
        });
    }

    // gaps
    unsigned m = 2;
    bool histogram = false;
    {
        auto* s = app.add_subcommand("gaps", "Spans of m consecutive primitive-root primes up to x");
        s->add_option("--g", g)->required();
        s->add_option("--x", x)->transform(kCount)->required();
        s->add_option("--m", m);
        s->add_flag("--histogram", histogram, "Emit the span histogram instead of the summary");
        s->add_flag("--exclude-small", exclude_small);
        bind(s, [&] {
            const auto r = gap_stats(g, x, m, PrimrootOptions{runner.census("gaps"), exclude_small});
            if (histogram) {
                report.columns = {"span", "count"};
                for (const auto& [span, count] : r.histogram) report.add_row({span, count});
            } else {
                report.columns = {"g", "x", "m", "primes", "min_gap", "attained_at"};
                report.add_row({r.g, r.x, r.m, r.primes_found, r.min_gap, r.attained_at});
            }
        });
    }

    // runs
    {
        auto* s = app.add_subcommand("runs", "First run of m consecutive primes all with g as primitive root");
        s->add_option("--g", g)->required();
        s->add_option("--x", x)->transform(kCount)->required();
        s->add_option("--m", m);
        s->add_flag("--exclude-small", exclude_small);
        bind(s, [&] {
            const auto r = consecutive_run(g, x, m, PrimrootOptions{runner.census("runs"), exclude_small});
            report.columns = {"g", "x", "m", "found", "primes"};
            report.add_row({g, x, m, r.has_value(), r ? json(join_u(*r)) : json(nullptr)});
        });
    }

    // density
    {
        auto* s = app.add_subcommand("density", "Share of primes up to x with g as primitive root");
        s->add_option("--g", g)->required();
        s->add_option("--x", x)->transform(kCount)->required();
        bind(s, [&] {
            const auto r = artin_density(g, x, runner.census("density"));
            report.columns = {"g", "x", "observed", "density", "predicted", "ratio", "artin_constant", "warning"};
            report.add_row({g, x, r.observed, r.density, count_row_predicted(r),
                            r.predicted_available ? json(r.ratio) : json(nullptr), artin_constant(), warnings(r)});
        });
    }

    // hooley
    std::vector<u64> qs{2, 3, 5};
    {
        auto* s = app.add_subcommand("hooley", "Counts of P_q^(0) against li(x)/(q(q-1))");
        s->add_option("--g", g)->required();
        s->add_option("--q", qs, "Primes q")->delimiter(',');
        s->add_option("--x", x)->transform(kCount)->required();
        bind(s, [&] {
            report.columns = {"g", "q", "x", "observed", "predicted", "ratio", "warning"};
            for (u64 q : qs) {
                const auto r = hooley_count_check(g, q, x, runner.census("hooley"));
                report.add_row({g, q, x, r.observed, r.predicted, r.ratio, warnings(r)});
            }
        });
    }

    // twin
    {
        auto* s = app.add_subcommand("twin", "Twin primes with 2 a primitive root of both");
        s->add_option("--x", x)->transform(kCount)->required();
        bind(s, [&] {
            const auto r = twin_pr_count(x, runner.census("twin"));
            const auto S = singular_series(1000000);
            report.columns = {"x", "observed", "predicted", "ratio", "singular_series", "warning"};
            report.add_row({x, r.observed, r.predicted, r.ratio, S.value, warnings(r)});
        });
    }

    // tail
    u64 L = 10;
    {
        auto* s = app.add_subcommand("tail", "Primes p <= x with ord_p(g) <= L");
        s->add_option("--g", g)->required();
        s->add_option("--x", x)->transform(kCount)->required();
        s->add_option("--L", L);
        bind(s, [&] {
            const u64 count = order_tail_census(g, x, L, runner.census("tail"));
            json bound = nullptr;
            try {
                bound = order_tail_bound(g, L);
            } catch (const ResourceError&) {
            }
            report.columns = {"g", "x", "L", "count", "omega_bound"};
            report.add_row({g, x, L, count, bound});
        });
    }

    // weil-check
    u64 p_min = 3, p_max = 1000, literal_cutoff = 50;
    std::vector<unsigned> degrees{2, 3};
    {
        auto* s = app.add_subcommand("weil-check", "Character sums of all monic polynomials against (d-1) sqrt(p)");
        s->add_option("--p-min", p_min)->transform(kCount);
        s->add_option("--p-max", p_max)->transform(kCount);
        s->add_option("--degrees", degrees)->delimiter(',');
        s->add_option("--literal-cutoff", literal_cutoff);
        bind(s, [&] {
            report.columns = {"p", "degree", "polynomials", "squares", "max_abs_sum", "bound", "violations"};
            const auto primes = primes_in_range(std::max<u64>(p_min, 3), p_max + 1);
            CensusOptions progress = runner.census("weil-check");
            std::size_t done = 0;
            u64 violations = 0;
            for (u64 p : primes) {
                for (unsigned d : degrees) {
                    const auto r = weil_sweep(p, d, literal_cutoff);
                    violations += r.violations;
                    report.add_row({r.p, r.degree, r.polynomials, r.squares, r.max_abs_sum, r.bound, r.violations});
                }
                detail::report_progress(progress, ++done, primes.size());
            }
            if (violations) throw InvariantViolation("weil-check: " + std::to_string(violations) + " polynomials exceed the bound");
        });
    }

    // quadcount
    std::vector<i64> offsets{0, 2, 6};
    bool summary = false;
    {
        auto* s = app.add_subcommand("quadcount", "Residue/nonresidue sign-pattern counts against p/2^k - (k-1) sqrt(p) - k");
        s->add_option("--p", single_p, "A single odd prime")->transform(kCount);
        s->add_option("--p-max", p_max)->transform(kCount);
        s->add_option("--offsets", offsets)->delimiter(',');
        s->add_flag("--summary", summary, "One row per offset set instead of one per (p, pattern)");
        bind(s, [&] {
            const std::size_t k = offsets.size();
            std::vector<u64> primes;
            if (single_p) {
                if (single_p < 3 || !is_prime(single_p)) throw std::invalid_argument("quadcount: p must be an odd prime");
                primes = {single_p};
            } else {
                primes = primes_in_range(3, p_max + 1);
            }
            if (summary)
                report.columns = {"offsets", "primes", "patterns", "violations", "min_slack"};
            else
                report.columns = {"p", "offsets", "signs", "count", "lower_bound"};
            u64 used = 0, patterns = 0, violations = 0;
            double min_slack = INFINITY;
            for (u64 p : primes) {
                std::vector<bool> seen(p, false);
                bool distinct = true;
                for (i64 h : offsets) {
                    const u64 r = reduce_mod(h, p);
                    if (seen[r]) distinct = false;
                    seen[r] = true;
                }
                if (!distinct) continue;
                ++used;
                const auto counts = count_all_sign_patterns(p, offsets);
                const double bound = sign_pattern_lower_bound(p, k);
                for (std::size_t mask = 0; mask < counts.size(); ++mask) {
                    ++patterns;
                    const double slack = static_cast<double>(counts[mask]) - bound;
                    min_slack = std::min(min_slack, slack);
                    if (slack < 0) ++violations;
                    if (!summary) {
                        std::string signs;
                        for (std::size_t i = 0; i < k; ++i) signs += (mask >> i & 1) ? '-' : '+';
                        report.add_row({p, join(offsets), signs, counts[mask], bound});
                    }
                }
            }
            if (summary) report.add_row({join(offsets), used, patterns, violations, patterns ? json(min_slack) : json(nullptr)});
            if (violations) throw InvariantViolation("quadcount: " + std::to_string(violations) + " patterns below the lower bound");
        });
    }

    // tuple
    unsigned k = 2;
    std::optional<u64> K_override;
    std::vector<i64> tuple_offsets;
    {
        auto* s = app.add_subcommand("tuple", "Build {0, K!, ..., (k-1)K!} or check a given tuple");
        s->add_option("--k", k);
        s->add_option("--K", K_override, "Threshold override");
        s->add_option("--offsets", tuple_offsets, "Check these offsets instead")->delimiter(',');
        bind(s, [&] {
            report.columns = {"k", "K", "offsets", "admissible", "largest_difference_prime"};
            TupleH t;
            if (!tuple_offsets.empty()) {
                auto sorted = tuple_offsets;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                    throw std::invalid_argument("tuple: offsets must be distinct");
                t.offsets = sorted;
            } else {
                t = paper_tuple(k, K_override);
            }
            report.add_row({t.k(), t.K ? json(*t.K) : json(nullptr), join(t.offsets), is_admissible(t.offsets),
                            largest_difference_prime(t)});
        });
    }

    // nu
    u64 K = 16, z = 5;
    bool exclude_non_tuple = false, verify = false;
    {
        auto* s = app.add_subcommand("nu", "Pre-sieving class nu mod W");
        s->add_option("--g", g)->required();
        s->add_option("--k", k);
        s->add_option("--K", K);
        s->add_option("--z", z);
        s->add_option("--offsets", tuple_offsets, "Tuple offsets (default {0, K!, ..., (k-1)K!})")->delimiter(',');
        s->add_flag("--exclude-non-tuple", exclude_non_tuple);
        s->add_flag("--verify", verify, "Recheck the certificate; exit 1 on failure");
        bind(s, [&] {
            const TupleH t = tuple_offsets.empty() ? paper_tuple(k, K) : make_tuple(tuple_offsets);
            const auto cert = choose_nu(g, t, K, z, NuOptions{exclude_non_tuple});
            const auto checks = verify ? verify_nu(cert) : cert.checks;
            std::string composite;
            for (const auto& c : cert.composite_classes)
                composite += (composite.empty() ? "" : " ") + std::to_string(c.prime) + ":" + std::to_string(c.h);
            report.columns = {"g", "g0", "factors", "case", "offsets", "W", "nu", "nu1", "nu2",
                              "coprime_to_W", "shifted_coprime", "kronecker_minus_one", "composite_classes"};
            report.add_row({g, cert.g0, join(cert.factorization.factors), to_string(cert.factorization.case_tag),
                            join(t.offsets), cert.W(), cert.nu.residue, cert.nu1, cert.nu2, checks.coprime_to_W,
                            checks.shifted_coprime, checks.kronecker_minus_one, composite});
            if (verify && !checks.all()) throw InvariantViolation("nu: certificate fails verification");
        });
    }

    // sieve-demo
    u64 N = 100000, tuple_K = 4;
    double theta = 0.2, tolerance = 1e-10;
    unsigned sieve_degree = 1, degree = 3;
    {
        auto* s = app.add_subcommand("sieve-demo", "Weighted sums S1, S2, S2~ over [N, 2N)");
        s->add_option("--g", g);
        s->add_option("--k", k);
        s->add_option("--N", N)->transform(kCount);
        s->add_option("--theta", theta);
        s->add_option("--z", z);
        s->add_option("--K", K, "Threshold passed to the nu construction");
        s->add_option("--tuple-K", tuple_K, "K override for the tuple {0, K!, ...}");
        s->add_option("--degree", sieve_degree, "Basis degree of the optimized F");
        bind(s, [&] {
            const TupleH t = paper_tuple(k, std::max<u64>(tuple_K, k));
            const auto cert = choose_nu(g, t, K, z);
            const PolynomialF F = optimal_F(k, sieve_degree, tolerance);
            const auto params = make_sieve_params(N, theta, cert.nu, F, t);
            const auto table = lambda_weights(params, t);
            SieveOptions so;
            so.census = runner.census("sieve-demo");
            so.presieve_z = z;
            const auto sums = compute_sums(g, params, t, table, N, 2 * N, so);
            report.columns = {"N", "R", "W", "nu", "offsets", "terms", "lambda_entries", "S1", "S2", "S2_tilde",
                              "EX", "EY", "predicted_S1", "predicted_S2"};
            report.add_row({N, params.R, params.W, cert.nu.residue, join(t.offsets), sums.terms, table.entries.size(),
                            sums.S1, sums.S2, sums.S2_tilde, sums.expectations_defined ? json(sums.EX) : json(nullptr),
                            sums.expectations_defined ? json(sums.EY) : json(nullptr), sums.predicted_S1,
                            sums.predicted_S2});
        });
    }

    // mk
    {
        auto* s = app.add_subcommand("mk", "Certified lower bound for M_k over a symmetric basis");
        s->add_option("--k", k)->required();
        s->add_option("--degree", degree);
        s->add_option("--tolerance", tolerance);
        bind(s, [&] {
            const auto problem = assemble_forms(k, symmetric_basis(k, degree));
            const auto r = maximize_ratio(problem, tolerance);
            const auto check = mk_lower_bound_check(k, r.lower_bound);
            report.columns = {"k", "degree", "basis_size", "lower_bound", "residual", "certified",
                              "asymptotic_bound", "bound_applicable"};
            report.add_row({k, degree, problem.basis.size(), r.lower_bound, r.residual, r.certified.get_str(),
                            check.applicable ? json(check.bound) : json(nullptr), check.applicable});
        });
    }

    // required-k
    unsigned target_m = 2, k_max = 5;
    {
        auto* s = app.add_subcommand("required-k", "Least k with ceil(theta M_k) > m - 1 among certified M_k");
        s->add_option("--m", target_m)->required();
        s->add_option("--theta", theta);
        s->add_option("--k-max", k_max);
        s->add_option("--degree", degree);
        bind(s, [&] {
            std::map<unsigned, double> table;
            for (unsigned kk = 1; kk <= k_max; ++kk)
                table[kk] = maximize_ratio(assemble_forms(kk, symmetric_basis(kk, degree)), tolerance).lower_bound;
            const auto r = required_k_for_m(target_m, theta, table);
            report.columns = {"m", "theta", "k_max", "k", "mk"};
            report.add_row({target_m, theta, k_max, r ? json(*r) : json(nullptr), r ? json(table[*r]) : json(nullptr)});
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help / --version
            std::ostringstream help;
            app.exit(e, help, help);
            out << help.str();
            return Ok;
        }
        std::ostringstream msg;
        app.exit(e, msg, msg);
        err << msg.str();
        return Usage;
    }

    try {
        if (G.threads > 0) set_thread_count(G.threads);
        const CLI::App* sub = app.get_subcommands().front();
        report.command = sub->get_name();
        collect_params(sub, report);
        report.params.emplace_back("deterministic", G.deterministic ? "true" : "false");
        report.params.emplace_back("window", std::to_string(G.window));
        bodies.at(sub)();
        const std::string text = render(report, parse_format(G.format), kVersion);
        if (G.out.empty()) {
            out << text;
        } else {
            std::ofstream file(G.out, std::ios::binary);
            if (!file) throw std::invalid_argument("cannot open output file " + G.out);
            file << text;
        }
        return Ok;
    } catch (const std::exception& e) {
        return exit_for(e, err);
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"artinlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace artinlab::cli
