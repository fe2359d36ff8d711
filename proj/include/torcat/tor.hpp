#pragma once

// The flow-chart rewrite system: Tor^A(F,F) for algebras built from the four
// block kinds, its iteration, and the named towers the catalog draws from.
//
// Over a field of characteristic p the rewrite rules are
//
//   F[z]          ->  Lambda(eps z)                          |eps z| = |z|+1
//   Lambda(z)     ->  Gamma(rho^0 z), split into
//                     (x)_k F[rho^k z]/(rho^k z)^p           |rho^k z| = p^k(|z|+1)
//   F[z]/z^m      ->  Lambda(eps z) (x) Gamma(phi^0 z), split into
//                     (x)_i F[phi^i z]/(phi^i z)^p           |phi^i z| = p^i(2+m|z|)
//
// and in characteristic 0 the divided powers are polynomial, so the chart
// alternates between exterior and polynomial blocks.

#include <string>

#include "torcat/core.hpp"

namespace torcat {

/// An iterated-Tor tower: seed algebra plus the number of dualization steps.
struct TowerSpec {
    TensorAlgebra seed;
    int iterations = 0;
    int characteristic = 0;
    int cap = 0;
};

/// Splits the divided power algebra on g (of degree d) at a prime p into
/// height-p truncated blocks on generators of degree p^k d, k = 0, 1, ...,
/// keeping only degrees <= cap. When g's outermost prefix is rho^j or phi^j
/// the k-th factor bumps that splitting index to j+k; otherwise the k-th
/// factor (k >= 1) is named gamma_{p^k}(g) on the base label.
TensorAlgebra gamma_split(const GradedGenerator& g, int p, int cap);

/// Tor dual of a single block, as a tensor algebra at the given cap.
TensorAlgebra tor_dual_block(const BlockAlgebra& b, int characteristic, int cap);

/// Tor dual of a whole algebra (Kunneth over the field: blockwise duals,
/// concatenated). Requires cap <= A.cap.
TensorAlgebra tor_dual(const TensorAlgebra& A, int cap);

TensorAlgebra iterate_tor(const TensorAlgebra& seed, int iterations);
TensorAlgebra iterate_tor(const TowerSpec& spec);

/// B-tower on a polynomial seed of even degree d: stage 1 is F_p[z], each
/// further stage is the Tor dual of the previous one.
TensorAlgebra b_tower(int degree, int n, int p, int cap, const std::string& base = "mu");

/// Truncated-polynomial tower: stage n is the n-fold Tor dual of
/// F_p[x]/x^m with |x| = x_deg; stage 1 is Lambda(eps x) (x) Gamma(phi^0 x).
TensorAlgebra bpp_tower(int m, int x_deg, int n, int p, int cap, const std::string& base = "x");

}  // namespace torcat
