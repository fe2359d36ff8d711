#include "torcat/cli.hpp"
#include "torcat/tor.hpp"

namespace torcat {

namespace {

int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw InvalidInput(std::string("missing required parameter ") + flag);
    return *v;
}

VerifyCheck compare_tables(std::string name, const std::vector<std::int64_t>& expected,
                           const std::vector<std::int64_t>& actual) {
    VerifyCheck check;
    check.name = std::move(name);
    for (std::size_t deg = 0; deg < expected.size(); ++deg) {
        VerifyCheck::Row row;
        row.degree = static_cast<int>(deg);
        row.expected = expected[deg];
        row.actual = deg < actual.size() ? actual[deg] : 0;
        if (row.expected != row.actual) check.match = false;
        check.rows.push_back(row);
    }
    return check;
}

/// bar homology of the previous tower stage against the series of the next.
VerifyCheck tower_step_check(const std::string& name, const TensorAlgebra& prev,
                             const TensorAlgebra& next, int total_cap,
                             std::int64_t nnz_limit) {
    const auto ranks = bar_homology(materialize(prev, total_cap), total_cap, {nnz_limit});
    const auto expected = algebra_series(next, total_cap);
    return compare_tables(name, expected.coefficients, ranks.by_total);
}

VerifyCheck product_check(const std::string& name, const PoincareSeries& whole,
                          const std::vector<PoincareSeries>& factors) {
    PoincareSeries prod = one_series(whole.cap);
    for (const auto& f : factors) prod = series_mul(prod, f);
    return compare_tables(name, whole.coefficients, prod.coefficients);
}

void append_thh_n_Z_modp_checks(std::vector<VerifyCheck>& checks, int n, int p, int T,
                                std::int64_t limit) {
    if (n >= 2)
        checks.push_back(tower_step_check(
            "x-tower: bar homology of stage " + std::to_string(n - 1) + " vs stage " +
                std::to_string(n) + " series",
            b_tower(2 * p, n - 1, p, T, "x"), b_tower(2 * p, n, p, T, "x"), T, limit));
    checks.push_back(tower_step_check(
        "y-tower: bar homology of stage " + std::to_string(n) + " vs stage " +
            std::to_string(n + 1) + " series",
        b_tower(2 * p - 2, n, p, T, "y"), b_tower(2 * p - 2, n + 1, p, T, "y"), T, limit));
    checks.push_back(product_check(
        "series equals the product of the x- and y-tower series",
        algebra_series(thh_n_Z_modp(n, p, T).algebra, T),
        {algebra_series(b_tower(2 * p, n, p, T, "x"), T),
         algebra_series(b_tower(2 * p - 2, n + 1, p, T, "y"), T)}));
}

void append_shukla_checks(std::vector<VerifyCheck>& checks, int n, int p, int T,
                          std::int64_t limit, const std::string& label) {
    if (n < 1)
        throw InvalidInput("stage 0 is the tower seed; nothing to verify against");
    checks.push_back(tower_step_check(
        "Shukla tower: bar homology of stage " + std::to_string(n - 1) + " vs stage " +
            std::to_string(n) + " series",
        shukla_n(n - 1, T, p, label).algebra, shukla_n(n, T, p, label).algebra, T, limit));
}

}  // namespace

VerifyReport verify_entry(const RunConfig& cfg) {
    VerifyReport report;
    report.entry = cfg.entry;
    const int cap = need(cfg.cap, "--cap");
    if (cap < 1) throw InvalidInput("--cap must be >= 1");
    const int T = cfg.total_cap ? *cfg.total_cap : cap;
    if (T < 1 || T > cap)
        throw InvalidInput("--total-cap must lie in [1, --cap]");
    report.total_cap = T;
    const std::int64_t limit = cfg.nnz_limit;

    if (cfg.entry == "thh_n_fp") {
        const int n = need(cfg.n, "--n"), p = need(cfg.p, "--p");
        if (n < 2)
            throw InvalidInput("stage 1 is the tower seed F_p[mu]; nothing to verify against");
        report.checks.push_back(tower_step_check(
            "mu-tower: bar homology of stage " + std::to_string(n - 1) + " vs stage " +
                std::to_string(n) + " series",
            b_tower(2, n - 1, p, T, "mu"), b_tower(2, n, p, T, "mu"), T, limit));
    } else if (cfg.entry == "shukla_n") {
        append_shukla_checks(report.checks, need(cfg.n, "--n"), need(cfg.p, "--p"), T, limit,
                             "tau1");
    } else if (cfg.entry == "thh_n_Z_modp") {
        append_thh_n_Z_modp_checks(report.checks, need(cfg.n, "--n"), need(cfg.p, "--p"), T,
                                   limit);
    } else if (cfg.entry == "thh_n_zpm_zp") {
        const int n = need(cfg.n, "--n"), p = need(cfg.p, "--p"), m = need(cfg.m, "--m");
        append_thh_n_Z_modp_checks(report.checks, n, p, T, limit);
        append_shukla_checks(report.checks, n, p, T, limit, "tau1");
        report.checks.push_back(product_check(
            "series equals THH^[n](Z; Z/p) series times the Shukla stage series",
            algebra_series(thh_n_zpm_zp(n, p, m, T).algebra, T),
            {algebra_series(thh_n_Z_modp(n, p, T).algebra, T),
             algebra_series(shukla_n(n, T, p).algebra, T)}));
    } else if (cfg.entry == "shukla_over_zpm") {
        const int p = need(cfg.p, "--p"), m = need(cfg.m, "--m");
        append_shukla_checks(report.checks, 2, p, T, limit, "tau1");
        append_shukla_checks(report.checks, 1, p, T, limit, "tau1");
        report.checks.push_back(product_check(
            "series equals the product of the stage-2 and stage-1 Shukla series",
            algebra_series(shukla_over_zpm(m, p, T).algebra, T),
            {algebra_series(shukla_n(2, T, p).algebra, T),
             algebra_series(shukla_n(1, T, p).algebra, T)}));
    } else if (cfg.entry == "hh_n_truncated" || cfg.entry == "thh_n_truncated") {
        const int n = need(cfg.n, "--n"), p = need(cfg.p, "--p"), m = need(cfg.m, "--m");
        const int x_deg = cfg.x_deg ? *cfg.x_deg : 2;
        if (n == 1) {
            const auto ranks = hochschild_small_complex(
                p, m, x_deg,
                cfg.reduced ? HochschildCoefficients::Reduced : HochschildCoefficients::Full,
                T);
            const auto expected =
                algebra_series(hh_n_truncated(1, p, m, x_deg, cfg.reduced, T).algebra, T);
            report.checks.push_back(
                compare_tables("small Hochschild complex vs stage-1 series",
                               expected.coefficients, ranks.by_total));
        } else {
            report.checks.push_back(tower_step_check(
                "truncated tower: bar homology of stage " + std::to_string(n - 1) +
                    " vs stage " + std::to_string(n) + " series",
                bpp_tower(m, x_deg, n - 1, p, T, "x"), bpp_tower(m, x_deg, n, p, T, "x"), T,
                limit));
        }
        if (cfg.entry == "thh_n_truncated") {
            if (n >= 2)
                report.checks.push_back(tower_step_check(
                    "mu-tower: bar homology of stage " + std::to_string(n - 1) +
                        " vs stage " + std::to_string(n) + " series",
                    b_tower(2, n - 1, p, T, "mu"), b_tower(2, n, p, T, "mu"), T, limit));
            report.checks.push_back(product_check(
                "series equals THH^[n](F_p) series times the HH^[n] series",
                algebra_series(thh_n_truncated(n, p, m, x_deg, cfg.reduced, T).algebra, T),
                {algebra_series(thh_n_fp(n, p, T).algebra, T),
                 algebra_series(hh_n_truncated(n, p, m, x_deg, cfg.reduced, T).algebra, T)}));
        }
    } else if (cfg.entry == "tate_tor") {
        const int d = need(cfg.d, "--d"), r = need(cfg.r, "--r");
        const int p = need(cfg.p, "--p"), m = need(cfg.m, "--m");
        if (d != 1 || r != 1)
            throw InvalidInput(
                "the periodic-resolution oracle covers the principal case d = 1, r = 1 only");
        const auto ranks = tor_over_zpm(p, m, T);
        const auto expected = algebra_series(tate_tor(1, 1, T).algebra, T);
        report.checks.push_back(
            compare_tables("Lambda(T_1) (x) Gamma(S_1) homological counts vs the periodic "
                           "resolution of Z/p over Z/p^m",
                           expected.coefficients, ranks.by_total));
    } else {
        throw InvalidInput("no oracle path for entry '" + cfg.entry +
                           "' (its non-tower factors are caller-supplied)");
    }

    for (const auto& check : report.checks)
        if (!check.match) report.match = false;
    return report;
}

}  // namespace torcat
