#include "knotcv/cli.hpp"

#include "knotcv/criterion.hpp"
#include "knotcv/family.hpp"
#include "knotcv/numeric.hpp"
#include "knotcv/twobridge.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace knotcv::cli {

namespace {

using nlohmann::ordered_json;

constexpr double kResidualTolerance = 1e-9;
constexpr double kMatrixTolerance = 1e-8;

// ---- argument helpers ----

struct Range {
    int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
    auto pos = s.find("..");
    Range r;
    try {
        if (pos == std::string::npos) {
            r.lo = r.hi = std::stoi(s);
        } else {
            r.lo = std::stoi(s.substr(0, pos));
            r.hi = std::stoi(s.substr(pos + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n", "expected an integer or A..B range: " + s);
    }
    if (r.lo > r.hi) throw CLI::ValidationError("--n", "empty range: " + s);
    return r;
}

int default_jobs() {
    if (const char* env = std::getenv("KNOTCV_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

// ---- JSON serialization ----

ordered_json verdict_json(const IrreducibilityVerdict& v) {
    ordered_json j;
    j["status"] = v.irreducible() ? "irreducible" : "reducible";
    j["method"] = v.method;
    j["witness"] = v.witness ? ordered_json(v.witness->str("q")) : ordered_json(nullptr);
    ordered_json primes = ordered_json::array();
    for (const auto& p : v.primes) {
        ordered_json row;
        row["prime"] = p.prime;
        row["degrees"] = p.degrees;
        primes.push_back(row);
    }
    j["primes"] = primes;
    j["lift_prime"] = v.lift_prime;
    j["lift_exponent"] = v.lift_exponent;
    j["subsets_tested"] = v.subsets_tested;
    return j;
}

ordered_json genericity_json(const GenericityReport& g) {
    ordered_json j;
    j["trace_field_degree"] = g.trace_field_degree;
    j["cusp_equals_trace_assumed"] = g.cusp_equals_trace_assumed;
    j["justification"] = g.justification;
    j["generic"] = g.generic;
    return j;
}

ordered_json report_json(const CommensurabilityReport& r, int prime_count) {
    ordered_json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["hyperbolic"] = r.hyperbolic;
    j["hyperbolic_reason"] = r.hyperbolic_reason;
    j["fibered"] = to_string(r.fibered);
    j["fibered_reason"] = r.fibered_reason;
    j["degree_total"] = r.degree_total ? ordered_json(*r.degree_total) : ordered_json(nullptr);
    j["degree_slice"] = r.degree_slice ? ordered_json(*r.degree_slice) : ordered_json(nullptr);
    j["degrees_equal"] = r.degrees_equal;
    j["diagonal"] = r.diagonal.str("x");
    j["diagonal_monic"] = r.diagonal_monic;
    j["slice_verdict"] = r.slice_verdict ? verdict_json(*r.slice_verdict) : ordered_json(nullptr);
    j["genericity"] = r.genericity ? genericity_json(*r.genericity) : ordered_json(nullptr);
    j["conclusion"] = r.conclusion == CommensurabilityReport::Conclusion::NotCommensurableToFibered
                          ? "not-commensurable-to-fibered"
                          : "criterion-inapplicable";
    j["inapplicable_reasons"] = r.inapplicable_reasons;
    j["prime_count"] = prime_count;
    return j;
}

// ---- riley ----

int cmd_riley(const std::string& family, int n, const std::string& at,
              const std::string& format, std::ostream& out, std::ostream& err) {
    const Family* f = find_family(family);
    if (!f) {
        err << "unknown family: " << family << "\n";
        return 2;
    }
    LaurentPoly p = riley_poly(*f, n);
    if (!at.empty()) {
        auto eq = at.find('=');
        if (eq == std::string::npos) {
            err << "--at expects var=integer, got: " << at << "\n";
            return 2;
        }
        std::string var = at.substr(0, eq);
        if (mq_context().index_of(var) < 0) {
            err << "unknown variable in --at: " << var << "\n";
            return 2;
        }
        Int value;
        try {
            value = Int(at.substr(eq + 1));
        } catch (const std::exception&) {
            err << "--at expects an integer value, got: " << at << "\n";
            return 2;
        }
        p = p.substitute({{var, LaurentPoly::constant(mq_context(), value)}}, mq_context());
    }
    if (format == "json") {
        ordered_json j;
        j["family"] = family;
        j["n"] = n;
        if (!at.empty()) j["at"] = at;
        j["polynomial"] = p.str();
        out << j.dump() << "\n";
    } else {
        out << p.str() << "\n";
    }
    return 0;
}

// ---- check ----

int cmd_check(const std::string& family, const Range& range, int prime_count, int jobs,
              const std::string& format, std::ostream& out, std::ostream& err) {
    const Family* f = find_family(family);
    if (!f) {
        err << "unknown family: " << family << "\n";
        return 2;
    }
    const int count = range.hi - range.lo + 1;
    std::vector<std::optional<CommensurabilityReport>> reports(static_cast<std::size_t>(count));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));

    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            try {
                reports[static_cast<std::size_t>(i)] =
                    check_commensurability(*f, range.lo + i, prime_count);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (int i = 0; i < count; ++i) {
        if (!errors[static_cast<std::size_t>(i)]) continue;
        try {
            std::rethrow_exception(errors[static_cast<std::size_t>(i)]);
        } catch (const resource_limit_error& e) {
            err << "resource limit at n=" << (range.lo + i) << ": " << e.what() << "\n";
            return 3;
        } catch (const std::exception& e) {
            err << "error at n=" << (range.lo + i) << ": " << e.what() << "\n";
            return 1;
        }
    }

    bool ok = true;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (int i = 0; i < count; ++i)
            arr.push_back(report_json(*reports[static_cast<std::size_t>(i)], prime_count));
        out << arr.dump(2) << "\n";
    } else {
        out << std::left << std::setw(6) << "n" << std::setw(12) << "deg(r_n)" << std::setw(12)
            << "deg(slice)" << std::setw(8) << "monic" << std::setw(14) << "slice" << std::setw(32)
            << "conclusion" << "notes" << "\n";
    }
    for (int i = 0; i < count; ++i) {
        const auto& r = *reports[static_cast<std::size_t>(i)];
        bool applicable = r.hyperbolic && r.fibered == TriState::No;
        bool concluded =
            r.conclusion == CommensurabilityReport::Conclusion::NotCommensurableToFibered;
        if (applicable && !concluded) ok = false;
        if (format != "json") {
            std::string slice = r.slice_verdict
                                    ? (r.slice_verdict->irreducible() ? "irreducible" : "reducible")
                                    : "-";
            std::string notes;
            for (const auto& s : r.inapplicable_reasons) {
                if (!notes.empty()) notes += "; ";
                notes += s;
            }
            out << std::left << std::setw(6) << r.n << std::setw(12)
                << (r.degree_total ? std::to_string(*r.degree_total) : "-") << std::setw(12)
                << (r.degree_slice ? std::to_string(*r.degree_slice) : "-") << std::setw(8)
                << (r.diagonal_monic ? "yes" : "no") << std::setw(14) << slice << std::setw(32)
                << (concluded ? "not-commensurable-to-fibered" : "criterion-inapplicable") << notes
                << "\n";
        }
    }
    return ok ? 0 : 1;
}

// ---- verify ----

struct SuiteResult {
    bool pass = true;
    double max_residual = 0;
    int checked = 0;
    std::string failure;     // description of first failure
    std::string reproducer;  // minimal re-run command
};

void fail(SuiteResult& r, const std::string& what, const std::string& repro) {
    if (r.pass) {
        r.pass = false;
        r.failure = what;
        r.reproducer = repro;
    }
}

SuiteResult suite_substitution(const Range& range) {
    SuiteResult res;
    for (const Family* f : {&twist_family(), &j3_family()}) {
        for (int n = range.lo; n <= range.hi; ++n) {
            ++res.checked;
            if (!(char_poly(*f, n).to_mq() == riley_poly(*f, n)))
                fail(res,
                     "r_n(x,z) substitution mismatch for " + f->name() + " n=" + std::to_string(n),
                     "verify substitution --n " + std::to_string(n) + ".." + std::to_string(n));
        }
    }
    return res;
}

SuiteResult suite_diagonal(const Range& range) {
    SuiteResult res;
    for (int n = range.lo; n <= range.hi; ++n) {
        ++res.checked;
        UniPoly expected(std::vector<Int>{Int(-(2L * n - 1)), Int(static_cast<long>(n))});
        std::string repro = "verify diagonal --n " + std::to_string(n) + ".." + std::to_string(n);
        if (!(diagonal_poly(twist_family(), n) == expected))
            fail(res, "twist diagonal is not n*x - (2n-1) at n=" + std::to_string(n), repro);
        if (n < 0) {
            UniPoly d = diagonal_poly(j3_family(), n);
            if (d.degree() != -n || d.leading() != 2)
                fail(res, "j3 diagonal leading term is not 2x^-n at n=" + std::to_string(n), repro);
        }
    }
    return res;
}

SuiteResult suite_identities(const Range& range) {
    SuiteResult res;
    LaurentPoly m = LaurentPoly::variable(mq_context(), "m");
    LaurentPoly minv = LaurentPoly::monomial(mq_context(), 1, {-1, 0});
    LaurentPoly mdiff = m - minv;
    for (const Family* f : {&twist_family(), &j3_family()}) {
        Mat2<LaurentPoly> w = eval_word(f->word(), Family::meridian_a(), Family::meridian_b());
        for (int n = range.lo; n <= range.hi; ++n) {
            ++res.checked;
            std::string repro =
                "verify identities --n " + std::to_string(n) + ".." + std::to_string(n);
            if (n >= -8 && n <= 8) {
                Mat2<LaurentPoly> wn = matrix_power_recursive(w, n);
                if (!(riley_poly(*f, n) == mdiff * wn.e12 + wn.e22))
                    fail(res,
                         "R_n != (m - 1/m) w12 + w22 for " + f->name() + " n=" + std::to_string(n),
                         repro);
            }
            // R_n(m, (m - 1/m)^2) = 1 on the locus where rho(b) = rho(a)
            LaurentPoly q_locus = mdiff * mdiff;
            LaurentPoly at_locus = riley_poly(*f, n).substitute({{"q", q_locus}}, mq_context());
            if (!at_locus.is_one())
                fail(res,
                     "R_n(m,(m-1/m)^2) != 1 for " + f->name() + " n=" + std::to_string(n), repro);
            if (f->name() == "j3") {
                auto v = entry_identities_j3(n);
                if (!v.swapped_w21_form || !v.entry_relation)
                    fail(res, "j3 parabolic entry identities fail at n=" + std::to_string(n), repro);
            }
        }
    }
    return res;
}

SuiteResult suite_cusp(const Range& range, double tolerance) {
    SuiteResult res;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (n >= 0) continue;
        for (const auto& c : verify_cusp_relation(n)) {
            ++res.checked;
            res.max_residual = std::max(res.max_residual, c.residual);
            if (c.residual > tolerance)
                fail(res, "cusp relation residual " + std::to_string(c.residual) + " at n=" +
                              std::to_string(n),
                     "verify cusp --n " + std::to_string(n) + ".." + std::to_string(n));
        }
    }
    return res;
}

SuiteResult suite_holonomy(const Range& range, double tolerance) {
    SuiteResult res;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (n >= 0) continue;
        RootSet roots = find_roots(reducible_slice(j3_family(), n));
        for (const auto& q : roots.roots) {
            ++res.checked;
            auto wn = j3_power_numeric(n, q);
            std::complex<double> alpha = 2.0 * wn.e11 * wn.e12;
            auto lam = longitude_holonomy(n, q);
            double dev = std::max({std::abs(lam.e11 + 1.0), std::abs(lam.e12 - (alpha + 2.0 * n)),
                                   std::abs(lam.e21), std::abs(lam.e22 + 1.0)});
            res.max_residual = std::max(res.max_residual, dev);
            if (dev > tolerance)
                fail(res,
                     "longitude holonomy deviates by " + std::to_string(dev) + " at n=" +
                         std::to_string(n),
                     "verify holonomy --n " + std::to_string(n) + ".." + std::to_string(n));
        }
    }
    return res;
}

SuiteResult suite_fractions(const Range& range) {
    SuiteResult res;
    for (int n = range.lo; n <= range.hi; ++n) {
        if (n == 0) continue;
        ++res.checked;
        std::string repro = "verify fractions --n " + std::to_string(n) + ".." + std::to_string(n);
        try {
            auto [f1, f2] = j3_fraction(n);
            if (!fractions_equivalent(f1, f2))
                fail(res, "fractions not equivalent at n=" + std::to_string(n), repro);
        } catch (const error& e) {
            fail(res, e.what(), repro);
        }
    }
    return res;
}

int cmd_verify(const std::string& suite, const Range& range, double tolerance,
               double matrix_tolerance, const std::string& format, std::ostream& out,
               std::ostream& err) {
    SuiteResult res;
    bool numeric_suite = false;
    if (suite == "substitution") {
        res = suite_substitution(range);
    } else if (suite == "diagonal") {
        res = suite_diagonal(range);
    } else if (suite == "identities") {
        res = suite_identities(range);
    } else if (suite == "cusp") {
        res = suite_cusp(range, tolerance);
        numeric_suite = true;
    } else if (suite == "holonomy") {
        res = suite_holonomy(range, matrix_tolerance);
        numeric_suite = true;
    } else if (suite == "fractions") {
        res = suite_fractions(range);
    } else {
        err << "unknown suite: " << suite
            << " (expected substitution|diagonal|identities|cusp|holonomy|fractions)\n";
        return 2;
    }

    if (format == "json") {
        ordered_json j;
        j["suite"] = suite;
        j["range"] = {range.lo, range.hi};
        j["checked"] = res.checked;
        j["pass"] = res.pass;
        if (numeric_suite) {
            j["max_residual"] = res.max_residual;
            j["tolerance"] = suite == "holonomy" ? matrix_tolerance : tolerance;
        }
        if (!res.pass) {
            j["failure"] = res.failure;
            j["reproducer"] = res.reproducer;
        }
        out << j.dump() << "\n";
    } else if (res.pass) {
        out << suite << ": pass (" << res.checked << " checks";
        if (numeric_suite) out << ", max residual " << res.max_residual;
        out << ")\n";
    } else {
        out << suite << ": FAIL - " << res.failure << "\n";
        out << "reproduce: " << res.reproducer << "\n";
    }
    return res.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"character-variety polynomial toolkit for twist knots and J(3,2n)"};
    app.require_subcommand(1);

    std::string family = "twist", n_spec, at, format = "text", suite;
    int n = 0, prime_count = 8, jobs = default_jobs();
    double tolerance = kResidualTolerance, matrix_tolerance = kMatrixTolerance;

    auto* riley = app.add_subcommand("riley", "print R_n(m, q)");
    riley->add_option("--family", family, "twist or j3")->required();
    riley->add_option("--n", n, "index n")->required();
    riley->add_option("--at", at, "evaluate at var=value, e.g. m=1");
    riley->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* check = app.add_subcommand("check", "run the commensurability criterion over a range");
    check->add_option("--family", family, "twist or j3")->required();
    check->add_option("--n", n_spec, "index range A..B")->required();
    check->add_option("--primes", prime_count, "primes in the factor-degree sieve");
    check->add_option("--jobs", jobs, "parallel width (default: KNOTCV_JOBS or 1)");
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "run an invariant suite");
    verify->add_option("suite", suite, "substitution|diagonal|identities|cusp|holonomy|fractions")
        ->required();
    verify->add_option("--n", n_spec, "index range A..B")->required();
    verify->add_option("--tolerance", tolerance, "numeric residual tolerance");
    verify->add_option("--matrix-tolerance", matrix_tolerance, "entrywise matrix tolerance");
    verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (riley->parsed()) return cmd_riley(family, n, at, format, out, err);
        if (check->parsed()) return cmd_check(family, parse_range(n_spec), prime_count, jobs,
                                              format, out, err);
        if (verify->parsed())
            return cmd_verify(suite, parse_range(n_spec), tolerance, matrix_tolerance, format, out,
                              err);
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const resource_limit_error& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace knotcv::cli
