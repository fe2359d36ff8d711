#include "torcat/catalog.hpp"

#include <map>

#include "torcat/tor.hpp"

namespace torcat {

namespace {

void require_prime(int p) {
    if (!is_prime(p)) throw InvalidInput("p must be prime, got " + std::to_string(p));
}

const std::map<std::string, std::string>& provenance_map() {
    static const std::map<std::string, std::string> tags = {
        {"thh_n_fp", "THH^[n](F_p): iterated Tor tower on F_p[mu], |mu| = 2"},
        {"thh_n_Z_modp",
         "THH^[n](Z; Z/p): tower on x (|x| = 2p) (x) (n+1)-stage tower on y (|y| = 2p-2)"},
        {"shukla_n", "Sh^[n](quotient by a regular element in (p)^2; coefficients F_p): "
                     "iterated Tor tower on Lambda(tau_1), |tau_1| = 1"},
        {"thh_n_zpm_zp",
         "THH^[n](Z/p^m; Z/p): THH^[n](Z; Z/p) (x) n-th Shukla tower, m >= 2"},
        {"shukla_over_zpm",
         "Sh(Z/p^m; Z/p)-algebra: stage-2 Shukla tower (x) stage-1 Shukla tower"},
        {"hh_n_truncated",
         "HH^[n](F_p[x]/x^m): tower B''_n, with the F_p[x]/x^m factor when full"},
        {"thh_n_truncated", "THH^[n](F_p[x]/x^m): THH^[n](F_p) (x) HH^[n](F_p[x]/x^m)"},
        {"tate_tor",
         "Tor over a regular quotient: Lambda(T_1..T_d) (x) Gamma(S_1..S_r), |T| = 1, |S| = 2"},
        {"thh_weak_split", "THH(R/(a_1..a_r); R/m): THH(R; R/m) series (x) Gamma(S_1..S_r)"},
        {"thh_number_ring_quotient",
         "THH^[n](O_K/p; O_K/p_i): residue THH series (x) n-th Shukla tower; quotient-ring "
         "route O_K/p_i[x]/x^e exposed as reduced_route"},
        {"thh_function_field",
         "THH(L), L a function field over F_p: free over L on F_p[mu_2] (x) Lambda(eps x_i)"},
    };
    return tags;
}

}  // namespace

PoincareSeries result_series(const CatalogResult& r, int cap) {
    if (r.series) return truncate_series(*r.series, cap);
    return algebra_series(r.algebra, cap);
}

std::vector<std::string> catalog_entries() {
    std::vector<std::string> out;
    for (const auto& [id, tag] : provenance_map()) out.push_back(id);
    return out;
}

std::string entry_provenance(const std::string& entry) {
    auto it = provenance_map().find(entry);
    if (it == provenance_map().end()) throw InvalidInput("unknown entry '" + entry + "'");
    return it->second;
}

CatalogResult thh_n_fp(int n, int p, int cap) {
    require_prime(p);
    if (n < 1) throw InvalidInput("thh_n_fp requires n >= 1");
    CatalogResult r;
    r.entry = "thh_n_fp";
    r.provenance = entry_provenance(r.entry);
    r.algebra = b_tower(2, n, p, cap, "mu");
    return r;
}

CatalogResult thh_n_Z_modp(int n, int p, int cap) {
    require_prime(p);
    if (n < 1) throw InvalidInput("thh_n_Z_modp requires n >= 1");
    CatalogResult r;
    r.entry = "thh_n_Z_modp";
    r.provenance = entry_provenance(r.entry);
    r.algebra = tensor(b_tower(2 * p, n, p, cap, "x"), b_tower(2 * p - 2, n + 1, p, cap, "y"));
    return r;
}

CatalogResult shukla_n(int n, int cap, int p, const std::string& label) {
    require_prime(p);
    if (n < 0) throw InvalidInput("shukla_n requires n >= 0");
    CatalogResult r;
    r.entry = "shukla_n";
    r.provenance = entry_provenance(r.entry);
    auto seed = make_algebra(p, cap, {make_exterior(make_generator(label, 1))});
    r.algebra = iterate_tor(seed, n);
    return r;
}

CatalogResult thh_n_zpm_zp(int n, int p, int m, int cap) {
    require_prime(p);
    if (n < 1) throw InvalidInput("thh_n_zpm_zp requires n >= 1");
    if (m < 2)
        throw InvalidInput("thh_n_zpm_zp requires m >= 2 (p^m must lie in (p)^2)");
    CatalogResult r;
    r.entry = "thh_n_zpm_zp";
    r.provenance = entry_provenance(r.entry);
    const std::string label = "tau1(" + std::to_string(p) + "^" + std::to_string(m) + ")";
    r.algebra = tensor(thh_n_Z_modp(n, p, cap).algebra, shukla_n(n, cap, p, label).algebra);
    return r;
}

CatalogResult shukla_over_zpm(int m, int p, int cap) {
    require_prime(p);
    if (m < 2) throw InvalidInput("shukla_over_zpm requires m >= 2");
    CatalogResult r;
    r.entry = "shukla_over_zpm";
    r.provenance = entry_provenance(r.entry);
    const std::string pm = "tau1(" + std::to_string(p) + "^" + std::to_string(m) + ")";
    const std::string pl = "tau1(" + std::to_string(p) + ")";
    r.algebra = tensor(shukla_n(2, cap, p, pm).algebra, shukla_n(1, cap, p, pl).algebra);
    return r;
}

CatalogResult hh_n_truncated(int n, int p, int m, int x_deg, bool reduced, int cap) {
    require_prime(p);
    if (n < 1) throw InvalidInput("hh_n_truncated requires n >= 1");
    if (m < 2) throw InvalidInput("hh_n_truncated requires m >= 2");
    if (x_deg < 2 || x_deg % 2 != 0) throw InvalidInput("|x| must be even and positive");
    if (!reduced && m % p != 0)
        throw InvalidInput(
            "full coefficients require p | m; when gcd(p, m) = 1 multiplication by m is "
            "invertible and the ranks come from the kernel/cokernel of x^(m-1) instead "
            "(hochschild_small_complex full)");
    CatalogResult r;
    r.entry = "hh_n_truncated";
    r.provenance = entry_provenance(r.entry);
    TensorAlgebra tower = bpp_tower(m, x_deg, n, p, cap, "x");
    if (reduced) {
        r.algebra = tower;
    } else {
        auto coeffs = make_algebra(p, cap, {make_truncated(m, make_generator("x", x_deg))});
        r.algebra = tensor(coeffs, tower);
        r.multiplicity = "free over F_" + std::to_string(p) + "[x]/x^" + std::to_string(m) +
                         " (carried as the leading truncated block)";
    }
    return r;
}

CatalogResult thh_n_truncated(int n, int p, int m, int x_deg, bool reduced, int cap) {
    CatalogResult hh = hh_n_truncated(n, p, m, x_deg, reduced, cap);
    CatalogResult r;
    r.entry = "thh_n_truncated";
    r.provenance = entry_provenance(r.entry);
    r.algebra = tensor(thh_n_fp(n, p, cap).algebra, hh.algebra);
    r.multiplicity = hh.multiplicity;
    return r;
}

CatalogResult tate_tor(int d, int r_count, int cap) {
    if (d < 0 || r_count < 0) throw InvalidInput("tate_tor requires d, r >= 0");
    std::vector<BlockAlgebra> blocks;
    for (int i = 1; i <= d; ++i)
        blocks.push_back(make_exterior(make_generator("T" + std::to_string(i), 1)));
    for (int j = 1; j <= r_count; ++j)
        blocks.push_back(make_divided_power(make_generator("S" + std::to_string(j), 2)));
    CatalogResult r;
    r.entry = "tate_tor";
    r.provenance = entry_provenance(r.entry);
    r.algebra = make_algebra(0, cap, std::move(blocks));
    return r;
}

PoincareSeries thh_weak_split(const PoincareSeries& thh_r_series, int r, int cap) {
    if (r < 0) throw InvalidInput("thh_weak_split requires r >= 0");
    if (thh_r_series.cap != cap)
        throw InvalidInput("cap mismatch: input series has cap " +
                           std::to_string(thh_r_series.cap) + ", requested " +
                           std::to_string(cap));
    PoincareSeries out = thh_r_series;
    const auto gamma2 = block_series(make_divided_power(make_generator("S", 2)), 0, cap);
    for (int j = 0; j < r; ++j) out = series_mul(out, gamma2);
    return out;
}

CatalogResult thh_number_ring_quotient(int n, int p, int e,
                                       const PoincareSeries& residue_series, int cap) {
    require_prime(p);
    if (n < 1) throw InvalidInput("thh_number_ring_quotient requires n >= 1");
    if (e < 2)
        throw InvalidInput(
            "ramification index e = 1 rejected: the splitting needs the uniformizer power "
            "to lie in the square of the maximal ideal");
    if (residue_series.cap != cap)
        throw InvalidInput("cap mismatch: residue series has cap " +
                           std::to_string(residue_series.cap) + ", requested " +
                           std::to_string(cap));
    CatalogResult r;
    r.entry = "thh_number_ring_quotient";
    r.provenance = entry_provenance(r.entry);
    const std::string label = "tau1(pi^" + std::to_string(e) + ")";
    r.algebra = shukla_n(n, cap, p, label).algebra;
    r.series = series_mul(residue_series, algebra_series(r.algebra, cap));
    r.multiplicity = "free over the caller-supplied THH^[" + std::to_string(n) +
                     "](O_K; O_K/p_i); its series is folded into 'series'";
    r.reduced_route = hh_n_truncated(n, p, e, 2, /*reduced=*/true, cap).algebra;
    return r;
}

CatalogResult thh_function_field(int d, int p, int cap) {
    require_prime(p);
    if (d < 0) throw InvalidInput("thh_function_field requires d >= 0");
    std::vector<BlockAlgebra> exts;
    for (int i = 1; i <= d; ++i) {
        auto xi = make_generator("x" + std::to_string(i), 0);
        exts.push_back(make_exterior(apply_prefix(xi, {Prefix::Kind::Eps, 0}, 1)));
    }
    CatalogResult r;
    r.entry = "thh_function_field";
    r.provenance = entry_provenance(r.entry);
    r.algebra = tensor(thh_n_fp(1, p, cap).algebra, make_algebra(p, cap, std::move(exts)));
    r.multiplicity = "free over L";
    return r;
}

}  // namespace torcat
