#pragma once

// Test-only brute-force oracles, kept independent of the closed-form code
// paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "torcat/core.hpp"

namespace torcat::testing {

/// Graded dimension count by direct monomial enumeration: each block
/// contributes basis elements by listing them (no generating-function
/// arithmetic involved).
inline PoincareSeries naive_algebra_series(const TensorAlgebra& A, int cap) {
    std::vector<std::vector<int>> degree_choices;  // per block: degrees of its basis
    for (const auto& b : A.blocks) {
        std::vector<int> degs{0};
        const int d = b.generator.degree;
        switch (b.kind) {
            case BlockAlgebra::Kind::Polynomial:
            case BlockAlgebra::Kind::DividedPower:
                for (std::int64_t j = d; j <= cap; j += d) degs.push_back(static_cast<int>(j));
                break;
            case BlockAlgebra::Kind::Exterior:
                if (d <= cap) degs.push_back(d);
                break;
            case BlockAlgebra::Kind::Truncated:
                for (std::int64_t j = 1; j < b.truncation && j * d <= cap; ++j)
                    degs.push_back(static_cast<int>(j * d));
                break;
        }
        degree_choices.push_back(std::move(degs));
    }
    PoincareSeries out;
    out.cap = cap;
    out.coefficients.assign(static_cast<std::size_t>(cap) + 1, 0);
    std::vector<std::size_t> pick(degree_choices.size(), 0);
    auto count = [&](auto&& self, std::size_t block, int degree) -> void {
        if (block == degree_choices.size()) {
            ++out.coefficients[static_cast<std::size_t>(degree)];
            return;
        }
        for (int d : degree_choices[block])
            if (degree + d <= cap) self(self, block + 1, degree + d);
    };
    count(count, 0, 0);
    return out;
}

/// Random single block with valid parity for the characteristic.
inline BlockAlgebra random_block(std::mt19937& rng, int characteristic, int max_degree,
                                 int max_truncation, const std::string& base) {
    std::uniform_int_distribution<int> kind_dist(0, 3);
    std::uniform_int_distribution<int> deg_dist(1, max_degree);
    std::uniform_int_distribution<int> m_dist(2, max_truncation);
    for (;;) {
        const int kind = kind_dist(rng);
        const int deg = deg_dist(rng);
        if (characteristic != 2) {
            const bool odd = deg % 2 != 0;
            if (kind == 1 && !odd) continue;
            if (kind != 1 && odd) continue;
        }
        auto g = make_generator(base, deg);
        switch (kind) {
            case 0: return make_polynomial(g);
            case 1: return make_exterior(g);
            case 2: return make_truncated(m_dist(rng), g);
            default: return make_divided_power(g);
        }
    }
}

}  // namespace torcat::testing
