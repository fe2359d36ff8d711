#include "torcat/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "torcat/json_io.hpp"

namespace torcat {

namespace {

int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw InvalidInput(std::string("missing required parameter ") + flag);
    return *v;
}

std::string join_coefficients(const PoincareSeries& s) {
    std::string out;
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.coefficients[i]);
    }
    return out;
}

std::string kind_label(const BlockAlgebra& b) {
    if (b.kind == BlockAlgebra::Kind::Truncated)
        return "truncated(m=" + std::to_string(b.truncation) + ")";
    return to_string(b.kind);
}

void render_generator_table(const TensorAlgebra& A, std::ostream& out) {
    std::size_t name_width = 4;
    for (const auto& b : A.blocks) name_width = std::max(name_width, b.generator.name().size());
    out << "  " << std::left << std::setw(static_cast<int>(name_width) + 2) << "name"
        << std::setw(22) << "kind" << "degree\n";
    for (const auto& b : A.blocks)
        out << "  " << std::left << std::setw(static_cast<int>(name_width) + 2)
            << b.generator.name() << std::setw(22) << kind_label(b) << b.generator.degree
            << "\n";
    if (A.blocks.empty()) out << "  (no generators below the cap)\n";
}

std::string latex_base_name(const std::string& base) {
    // tau1, tau1(...) -> \tau_1, \tau_1^{(...)}
    if (base.rfind("tau1", 0) == 0) {
        std::string rest = base.substr(4);
        if (rest.empty()) return "\\tau_1";
        if (rest.front() == '(' && rest.back() == ')')
            return "\\tau_1^{" + rest + "}";
    }
    if (base == "mu") return "\\mu";
    if (base == "omega") return "\\omega";
    // single letter with a numeric tail: x1 -> x_{1}
    if (!base.empty() && std::isalpha(static_cast<unsigned char>(base.front()))) {
        const std::string tail = base.substr(1);
        if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
            return std::string(1, base.front()) + "_{" + tail + "}";
    }
    return base;
}

}  // namespace

std::string latex_generator_name(const GradedGenerator& g) {
    std::string out;
    for (const auto& p : g.prefixes) {
        switch (p.kind) {
            case Prefix::Kind::Eps: out += "\\varepsilon "; break;
            case Prefix::Kind::Rho: out += "\\varrho^{" + std::to_string(p.index) + "} "; break;
            case Prefix::Kind::Phi: out += "\\varphi^{" + std::to_string(p.index) + "} "; break;
        }
    }
    out += latex_base_name(g.base);
    return out;
}

namespace {

void render_latex(const CatalogResult& r, const PoincareSeries& series, std::ostream& out) {
    out << "% " << r.entry << ": " << r.provenance << "\n";
    if (!r.multiplicity.empty()) out << "% multiplicity: " << r.multiplicity << "\n";
    out << "\\begin{tabular}{lll}\n"
        << "generator & kind & degree \\\\ \\hline\n";
    for (const auto& b : r.algebra.blocks)
        out << "$" << latex_generator_name(b.generator) << "$ & " << kind_label(b) << " & $"
            << b.generator.degree << "$ \\\\\n";
    out << "\\end{tabular}\n";
    out << "% Poincare series: $";
    bool first = true;
    for (int deg = 0; deg <= series.cap; ++deg) {
        const auto c = series.coefficients[static_cast<std::size_t>(deg)];
        if (c == 0) continue;
        if (!first) out << " + ";
        if (deg == 0)
            out << c;
        else if (c == 1)
            out << "t^{" << deg << "}";
        else
            out << c << "t^{" << deg << "}";
        first = false;
    }
    if (first) out << "0";
    out << " + O(t^{" << series.cap + 1 << "})$\n";
}

}  // namespace

PoincareSeries load_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open series file '" + path + "'");
    const std::string text((std::istreambuf_iterator<char>(in)),
                           std::istreambuf_iterator<char>());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        const std::size_t pos = std::min(err.byte, text.size());
        const std::size_t line = 1 + std::count(text.begin(), text.begin() + pos, '\n');
        throw InvalidInput("malformed series file '" + path + "' at line " +
                           std::to_string(line) + ": " + err.what());
    }
    try {
        return series_from_json(j);
    } catch (const InvalidInput& err) {
        throw InvalidInput("series file '" + path + "': " + err.what());
    }
}

std::string emit_series_json(const PoincareSeries& s) { return to_json(s).dump(2) + "\n"; }

CatalogResult compute_entry(const RunConfig& cfg) {
    const int cap = need(cfg.cap, "--cap");
    if (cap < 1) throw InvalidInput("--cap must be >= 1");
    const auto& id = cfg.entry;
    if (id == "thh_n_fp") return thh_n_fp(need(cfg.n, "--n"), need(cfg.p, "--p"), cap);
    if (id == "thh_n_Z_modp") return thh_n_Z_modp(need(cfg.n, "--n"), need(cfg.p, "--p"), cap);
    if (id == "shukla_n") return shukla_n(need(cfg.n, "--n"), cap, need(cfg.p, "--p"));
    if (id == "thh_n_zpm_zp")
        return thh_n_zpm_zp(need(cfg.n, "--n"), need(cfg.p, "--p"), need(cfg.m, "--m"), cap);
    if (id == "shukla_over_zpm")
        return shukla_over_zpm(need(cfg.m, "--m"), need(cfg.p, "--p"), cap);
    if (id == "hh_n_truncated")
        return hh_n_truncated(need(cfg.n, "--n"), need(cfg.p, "--p"), need(cfg.m, "--m"),
                              cfg.x_deg ? *cfg.x_deg : 2, cfg.reduced, cap);
    if (id == "thh_n_truncated")
        return thh_n_truncated(need(cfg.n, "--n"), need(cfg.p, "--p"), need(cfg.m, "--m"),
                               cfg.x_deg ? *cfg.x_deg : 2, cfg.reduced, cap);
    if (id == "tate_tor") return tate_tor(need(cfg.d, "--d"), need(cfg.r, "--r"), cap);
    if (id == "thh_weak_split") {
        if (cfg.series_file.empty())
            throw InvalidInput("thh_weak_split needs --series-file (the THH(R; R/m) series)");
        CatalogResult r;
        r.entry = "thh_weak_split";
        r.provenance = entry_provenance(r.entry);
        r.algebra = make_algebra(0, cap, {});
        r.series = thh_weak_split(load_series(cfg.series_file), need(cfg.r, "--r"), cap);
        r.multiplicity = "caller-supplied THH(R; R/m) series folded into 'series'";
        return r;
    }
    if (id == "thh_number_ring_quotient") {
        if (cfg.series_file.empty())
            throw InvalidInput(
                "thh_number_ring_quotient needs --series-file (the THH^[n](O_K; O_K/p_i) "
                "series)");
        return thh_number_ring_quotient(need(cfg.n, "--n"), need(cfg.p, "--p"),
                                        need(cfg.e, "--e"), load_series(cfg.series_file), cap);
    }
    if (id == "thh_function_field")
        return thh_function_field(need(cfg.d, "--d"), need(cfg.p, "--p"), cap);
    throw InvalidInput("unknown entry '" + id + "' (run `torcat list` for the catalog)");
}

namespace {

void render_verify(const VerifyReport& report, RunConfig::Format format, std::ostream& out) {
    if (format == RunConfig::Format::Json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : report.checks) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : c.rows)
                rows.push_back(nlohmann::json{{"degree", row.degree},
                                              {"expected", row.expected},
                                              {"actual", row.actual}});
            checks.push_back(
                nlohmann::json{{"name", c.name}, {"match", c.match}, {"degrees", rows}});
        }
        out << nlohmann::json{{"entry", report.entry},
                              {"total_cap", report.total_cap},
                              {"match", report.match},
                              {"checks", checks}}
                   .dump(2)
            << "\n";
        return;
    }
    out << "verify " << report.entry << " (total degrees 0.." << report.total_cap << ")\n";
    for (const auto& c : report.checks) {
        out << "check: " << c.name << "\n";
        for (const auto& row : c.rows)
            if (row.expected != row.actual)
                out << "  degree " << row.degree << ": expected " << row.expected << ", got "
                    << row.actual << "  <-- MISMATCH\n";
        out << (c.match ? "  ok\n" : "  FAILED\n");
    }
    out << (report.match
                ? "MATCH at all degrees <= " + std::to_string(report.total_cap) + "\n"
                : "MISMATCH\n");
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case RunConfig::Command::List: {
                if (cfg.format == RunConfig::Format::Json) {
                    nlohmann::json entries = nlohmann::json::array();
                    for (const auto& id : catalog_entries())
                        entries.push_back(nlohmann::json{{"entry", id},
                                                         {"provenance", entry_provenance(id)}});
                    out << entries.dump(2) << "\n";
                } else {
                    for (const auto& id : catalog_entries())
                        out << id << "\n    " << entry_provenance(id) << "\n";
                }
                return 0;
            }
            case RunConfig::Command::Compute: {
                const CatalogResult r = compute_entry(cfg);
                const PoincareSeries series = result_series(r, r.algebra.cap);
                if (cfg.format == RunConfig::Format::Json) {
                    out << to_json(r).dump(2) << "\n";
                } else if (cfg.format == RunConfig::Format::Latex) {
                    render_latex(r, series, out);
                } else {
                    out << "entry: " << r.entry << "\n";
                    out << "provenance: " << r.provenance << "\n";
                    if (!r.multiplicity.empty()) out << "multiplicity: " << r.multiplicity << "\n";
                    out << "characteristic: " << r.algebra.characteristic
                        << "  cap: " << r.algebra.cap << "\n";
                    render_generator_table(r.algebra, out);
                    out << "series: " << join_coefficients(series) << "\n";
                    if (r.reduced_route) {
                        out << "reduced route (quotient-ring coefficients):\n";
                        render_generator_table(*r.reduced_route, out);
                    }
                }
                return 0;
            }
            case RunConfig::Command::Series: {
                const CatalogResult r = compute_entry(cfg);
                const PoincareSeries series = result_series(r, r.algebra.cap);
                if (cfg.format == RunConfig::Format::Json)
                    out << emit_series_json(series);
                else
                    out << join_coefficients(series) << "\n";
                return 0;
            }
            case RunConfig::Command::Generators: {
                const CatalogResult r = compute_entry(cfg);
                if (cfg.format == RunConfig::Format::Json) {
                    out << to_json(r.algebra).dump(2) << "\n";
                } else if (cfg.format == RunConfig::Format::Latex) {
                    render_latex(r, result_series(r, r.algebra.cap), out);
                } else {
                    render_generator_table(r.algebra, out);
                }
                return 0;
            }
            case RunConfig::Command::Verify: {
                const VerifyReport report = verify_entry(cfg);
                render_verify(report, cfg.format, out);
                return report.match ? 0 : 2;
            }
        }
        throw InvalidInput("unknown command");
    } catch (const InvalidInput& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    } catch (const MemoryGuardError& ex) {
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace torcat
