#pragma once

// Command-line front end, kept as a library so the test suites can drive it
// directly: configuration, catalog dispatch, the engine-vs-oracle verify
// harness, and the table / json / latex renderers.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torcat/catalog.hpp"
#include "torcat/oracle.hpp"

namespace torcat {

struct RunConfig {
    enum class Command { Compute, Series, Generators, Verify, List };
    Command command = Command::List;
    std::string entry;

    std::optional<int> n, p, m, d, r, e, x_deg, cap, total_cap;
    bool reduced = false;

    enum class Format { Table, Json, Latex };
    Format format = Format::Table;

    std::string series_file;  // caller-supplied series, when an entry needs one
    std::int64_t nnz_limit = 2'000'000;
};

/// Exit codes: 0 success / verified, 1 usage or precondition error,
/// 2 verification mismatch.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Builds the configured catalog entry (loads the series file when the entry
/// takes a caller-supplied factor).
CatalogResult compute_entry(const RunConfig& cfg);

PoincareSeries load_series(const std::string& path);
std::string emit_series_json(const PoincareSeries& s);

/// One oracle-vs-engine comparison; rows cover every degree up to the cap.
struct VerifyCheck {
    std::string name;
    bool match = true;
    struct Row {
        int degree = 0;
        std::int64_t expected = 0;
        std::int64_t actual = 0;
    };
    std::vector<Row> rows;
};

struct VerifyReport {
    std::string entry;
    int total_cap = 0;
    bool match = true;
    std::vector<VerifyCheck> checks;
};

/// Runs the oracle paths that apply to the entry: the bar complex of the
/// previous tower stage for tower entries, the small Hochschild complex for
/// hh_n_truncated at n = 1, the periodic resolution for tate_tor(1,1), plus
/// factor-product identities for composite entries. Throws InvalidInput for
/// entries with no oracle path (caller-supplied factors).
VerifyReport verify_entry(const RunConfig& cfg);

std::string latex_generator_name(const GradedGenerator& g);

}  // namespace torcat
