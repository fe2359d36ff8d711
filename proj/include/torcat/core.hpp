#pragma once

// Graded-algebra data model shared by the whole engine: generators with a
// construction history, the four atomic block kinds, tensor algebras carried
// up to a degree cap, and Poincare series arithmetic.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torcat {

/// Thrown on precondition violations (bad parity, cap mismatch, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_prime(int n);

/// One step of construction history on a generator.
///
/// eps z    : |eps z| = |z| + 1
/// rho^k z  : k-th splitting generator of the divided powers on rho^0 z,
///            |rho^k z| = p^k (|z| + 1)
/// phi^i z  : i-th splitting generator of the divided powers on phi^0 z,
///            |phi^i z| = p^i (2 + m |z|)  (m = truncation height of z's block)
struct Prefix {
    enum class Kind { Eps, Rho, Phi };
    Kind kind = Kind::Eps;
    int index = 0;  // splitting index; ignored for Eps

    friend bool operator==(const Prefix&, const Prefix&) = default;
};

std::string to_string(const Prefix& p);
std::optional<Prefix> parse_prefix(const std::string& text);

/// A named generator. Prefixes are stored outermost-first, so base "omega"
/// with prefixes {phi^2, rho^1, eps} renders as "phi^2(rho^1(eps(omega)))".
/// Two generators are the same symbol iff their rendered names agree; the
/// degree is fixed when the engine applies a construction rule and is never
/// recomputed from the name.
struct GradedGenerator {
    std::string base;
    std::vector<Prefix> prefixes;
    int degree = 0;

    std::string name() const;

    friend bool operator==(const GradedGenerator&, const GradedGenerator&) = default;
};

GradedGenerator make_generator(std::string base, int degree);

/// Prepend a prefix (the new outermost construction step).
GradedGenerator apply_prefix(const GradedGenerator& g, Prefix p, int new_degree);

/// One atomic graded-commutative algebra on a single generator.
struct BlockAlgebra {
    enum class Kind { Polynomial, Exterior, Truncated, DividedPower };
    Kind kind = Kind::Polynomial;
    int truncation = 0;  // m >= 2; meaningful for Truncated only
    GradedGenerator generator;

    friend bool operator==(const BlockAlgebra&, const BlockAlgebra&) = default;
};

std::string to_string(BlockAlgebra::Kind k);

BlockAlgebra make_polynomial(GradedGenerator g);
BlockAlgebra make_exterior(GradedGenerator g);
BlockAlgebra make_truncated(int m, GradedGenerator g);
BlockAlgebra make_divided_power(GradedGenerator g);

/// Checks degree positivity, truncation height, and the parity rules for the
/// given characteristic (waived when characteristic == 2). Throws InvalidInput.
void validate_block(const BlockAlgebra& b, int characteristic);

/// A finite tensor product of blocks over a field of the stated
/// characteristic, complete below the degree cap. Blocks whose generator
/// degree exceeds the cap are never stored.
struct TensorAlgebra {
    int characteristic = 0;  // 0 or a prime
    int cap = 0;
    std::vector<BlockAlgebra> blocks;

    friend bool operator==(const TensorAlgebra&, const TensorAlgebra&) = default;
};

/// Validates every block, drops blocks above the cap, and rejects duplicate
/// generator names.
TensorAlgebra make_algebra(int characteristic, int cap, std::vector<BlockAlgebra> blocks);

/// Multiset of (kind, degree) pairs, sorted; the "equal up to cap" view used
/// when two construction routes must agree block-for-block.
std::vector<std::pair<BlockAlgebra::Kind, int>> kind_degree_multiset(const TensorAlgebra& A);

/// Graded dimensions in degrees 0..cap.
struct PoincareSeries {
    int cap = 0;
    std::vector<std::int64_t> coefficients;  // size cap + 1

    friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;
};

PoincareSeries one_series(int cap);
PoincareSeries truncate_series(const PoincareSeries& s, int new_cap);

/// Series of a single block: Polynomial/DividedPower of degree d give
/// 1/(1-t^d), Exterior gives 1 + t^d, Truncated(m) gives 1 + t^d + ... +
/// t^{(m-1)d}; all cut off at cap.
PoincareSeries block_series(const BlockAlgebra& b, int characteristic, int cap);

/// Cauchy product truncated at the (shared) cap.
PoincareSeries series_mul(const PoincareSeries& s, const PoincareSeries& t);

/// Tensor product over the common field: concatenated blocks, cap = min of
/// caps. Name collisions are resolved by suffixing "#1", "#2", ... onto the
/// base label in block-list order.
TensorAlgebra tensor(const TensorAlgebra& A, const TensorAlgebra& B);

/// Product of the block series, truncated at cap (cap <= A.cap; blocks above
/// cap contribute 1).
PoincareSeries algebra_series(const TensorAlgebra& A, int cap);

}  // namespace torcat
