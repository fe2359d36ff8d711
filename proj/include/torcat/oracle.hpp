#pragma once

// Brute-force verification kernel. Materializes a tensor algebra as an
// explicit monomial basis with a signed multiplication table, runs the
// normalized two-sided bar complex B(F_p, A, F_p) through sparse mod-p
// elimination, and evaluates the two explicit small complexes (the
// 2-periodic Hochschild complex of F_p[x]/x^m and the periodic resolution
// of Z/p over Z/p^m).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "torcat/core.hpp"

namespace torcat {

/// Thrown when an estimated differential would exceed the configured
/// nonzero budget.
struct MemoryGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Row-major sparse matrix over F_p; entries are (column, value) with value
/// in [1, p).
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> row_entries;
};

/// Rank by Gaussian elimination mod p, pivoting on sparse columns first.
std::int64_t rank_mod_p(SparseMatrix M, int p);

/// Explicit basis-and-multiplication-table form of a TensorAlgebra up to a
/// degree cap; divided-power blocks are split into height-p truncated
/// factors before materialization. mult maps ordered basis pairs to
/// (basis index, coefficient), with index -1 for products that are zero and
/// -2 for products that land above the cap.
struct AlgebraPresentation {
    int p = 0;
    int cap = 0;

    struct Factor {
        std::string name;
        int degree = 0;
        int bound = 0;  // exponents run in [0, bound); 0 = unbounded (polynomial)
    };
    std::vector<Factor> factors;

    struct Monomial {
        std::vector<int> exponents;  // one per factor
        int degree = 0;
    };
    std::vector<Monomial> basis;  // basis[0] is the unit; sorted by (degree, exponents)

    std::vector<std::size_t> aug_ideal;  // indices of the positive-degree basis elements

    struct Product {
        std::int32_t index = -1;
        std::int32_t coeff = 0;
    };
    std::vector<Product> mult;  // dense |basis|^2 table, row-major

    const Product& product(std::size_t i, std::size_t j) const {
        return mult[i * basis.size() + j];
    }
    std::string monomial_name(std::size_t i) const;
};

AlgebraPresentation materialize(const TensorAlgebra& A, int cap);

/// Homology ranks indexed by total degree (homological + internal), with the
/// per-bidegree breakdown kept alongside.
struct RankTable {
    int total_cap = 0;
    std::vector<std::int64_t> by_total;  // size total_cap + 1

    struct Bidegree {
        int s = 0;
        int internal = 0;
        std::int64_t rank = 0;

        friend bool operator==(const Bidegree&, const Bidegree&) = default;
    };
    std::vector<Bidegree> by_bidegree;  // nonzero ranks, sorted by (s, internal)

    friend bool operator==(const RankTable&, const RankTable&) = default;
};

struct BarOptions {
    std::int64_t nnz_limit = 2'000'000;  // per-differential nonzero budget
};

/// Homology of the normalized two-sided bar complex B(F_p, A, F_p): chains
/// in homological degree s are s-fold tensors of augmentation-ideal basis
/// elements, the differential is the alternating sum of adjacent products.
/// Ranks equal dim Tor^A(F_p, F_p) and are reported by total degree.
RankTable bar_homology(const AlgebraPresentation& P, int total_cap, const BarOptions& opts = {});

enum class HochschildCoefficients { Full, Reduced };

/// Homology of the 2-periodic small complex computing the Hochschild
/// homology of F_p[x]/x^m (coefficients in itself or, reduced, in F_p).
/// HH_s sits at total degree s plus the periodicity shift; the differentials
/// are alternately 0 and multiplication by m x^{m-1} (both 0 when reduced).
RankTable hochschild_small_complex(int p, int m, int x_deg, HochschildCoefficients coeffs,
                                   int cap);

/// Tor^{Z/p^m}_s(Z/p, Z/p) for s <= hom_cap via the 2-periodic free
/// resolution with maps alternately p and p^{m-1}; requires m >= 2 (for
/// m = 1 the resolution degenerates and Tor is F_p in degree 0).
RankTable tor_over_zpm(int p, int m, int hom_cap);

}  // namespace torcat
