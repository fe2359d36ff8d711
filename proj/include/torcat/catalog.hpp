#pragma once

// Parameterized closed-form entries: each returns a tensor algebra (plus a
// free-module multiplicity when the coefficients are not a field), built out
// of the tower operations of tor.hpp.

#include <optional>
#include <string>

#include "torcat/core.hpp"

namespace torcat {

struct CatalogResult {
    std::string entry;         // stable id, also used by the CLI
    std::string provenance;    // what the entry computes, in formula form
    std::string multiplicity;  // free coefficient module; empty = trivial
    TensorAlgebra algebra;
    // set when a caller-supplied series is folded in; result_series prefers it
    std::optional<PoincareSeries> series;
    // the quotient-ring route exposed alongside the splitting route
    std::optional<TensorAlgebra> reduced_route;
};

/// Series of a result at the given cap (the folded-in series when present,
/// otherwise the graded dimensions of the algebra).
PoincareSeries result_series(const CatalogResult& r, int cap);

/// All entry ids, in listing order.
std::vector<std::string> catalog_entries();
std::string entry_provenance(const std::string& entry);

/// THH^[n] of F_p: the tower on F_p[mu], |mu| = 2.
CatalogResult thh_n_fp(int n, int p, int cap);

/// THH^[n] of Z with Z/p coefficients: tower on x (|x| = 2p) tensored with
/// the (n+1)-stage tower on y (|y| = 2p-2).
CatalogResult thh_n_Z_modp(int n, int p, int cap);

/// n-th Shukla tower: n-fold Tor dual of Lambda(tau_1), |tau_1| = 1. The
/// label parameter keeps towers with different origins distinguishable.
CatalogResult shukla_n(int n, int cap, int p, const std::string& label = "tau1");

/// THH^[n](Z/p^m; Z/p): THH^[n](Z; Z/p) tensored with the n-th Shukla tower
/// (labels carry p^m; the series does not depend on m).
CatalogResult thh_n_zpm_zp(int n, int p, int m, int cap);

/// Shukla homology over Z/p^m of Z/p: stage-2 tower (labels tau1(p^m))
/// tensored with the stage-1 tower (labels tau1(p)).
CatalogResult shukla_over_zpm(int m, int p, int cap);

/// HH^[n] of F_p[x]/x^m: reduced coefficients give the bare tower B''_n; full
/// coefficients (requires p | m) add the F_p[x]/x^m factor.
CatalogResult hh_n_truncated(int n, int p, int m, int x_deg, bool reduced, int cap);

/// THH^[n] of F_p[x]/x^m: THH^[n](F_p) tensored with hh_n_truncated.
CatalogResult thh_n_truncated(int n, int p, int m, int x_deg, bool reduced, int cap);

/// Tor of a regular quotient: Lambda(T_1..T_d) (x) Gamma(S_1..S_r) with
/// |T_i| = 1, |S_j| = 2, divided powers kept unsplit.
CatalogResult tate_tor(int d, int r, int cap);

/// Multiplies a caller-supplied THH_*(R; R/m) series by the series of
/// Gamma(S_1..S_r) on degree-2 generators.
PoincareSeries thh_weak_split(const PoincareSeries& thh_r_series, int r, int cap);

/// THH^[n] of O_K/p with residue-field coefficients at a ramified prime of
/// ramification index e: caller-supplied THH^[n](O_K; O/p_i) series times the
/// n-th Shukla tower, with the reduced quotient-ring route exposed alongside.
CatalogResult thh_number_ring_quotient(int n, int p, int e,
                                       const PoincareSeries& residue_series, int cap);

/// THH of an algebraic function field of transcendence degree d over F_p:
/// free over L on F_p[mu_2] (x) Lambda(eps x_1, ..., eps x_d).
CatalogResult thh_function_field(int d, int p, int cap);

}  // namespace torcat
