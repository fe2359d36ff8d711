#include "torcat/tor.hpp"

namespace torcat {

namespace {

// k-th splitting generator gamma_{p^k}(g) of the divided powers on g.
GradedGenerator split_generator(const GradedGenerator& g, int k, int p, int degree) {
    if (k == 0) {
        GradedGenerator out = g;
        out.degree = degree;
        return out;
    }
    if (!g.prefixes.empty() && (g.prefixes.front().kind == Prefix::Kind::Rho ||
                                g.prefixes.front().kind == Prefix::Kind::Phi)) {
        GradedGenerator out = g;
        out.prefixes.front().index += k;
        out.degree = degree;
        return out;
    }
    // bare generator: fold the divided-power index into the base label
    std::int64_t pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    GradedGenerator out;
    out.base = "gamma_" + std::to_string(pk) + "(" + g.name() + ")";
    out.degree = degree;
    return out;
}

void require_even_or_char2(const GradedGenerator& g, int characteristic, const char* what) {
    if (characteristic != 2 && g.degree % 2 != 0)
        throw InvalidInput(std::string("parity violation: ") + what + " on '" + g.name() +
                           "' needs an even degree in characteristic != 2, got " +
                           std::to_string(g.degree));
}

}  // namespace

TensorAlgebra gamma_split(const GradedGenerator& g, int p, int cap) {
    if (p < 2 || !is_prime(p))
        throw InvalidInput("gamma_split requires a positive prime characteristic, got " +
                           std::to_string(p));
    if (g.degree < 1) throw InvalidInput("gamma_split requires degree >= 1");
    require_even_or_char2(g, p, "divided-power splitting");

    std::vector<BlockAlgebra> blocks;
    std::int64_t deg = g.degree;
    for (int k = 0; deg <= cap; ++k, deg *= p)
        blocks.push_back(make_truncated(p, split_generator(g, k, p, static_cast<int>(deg))));
    return make_algebra(p, cap, std::move(blocks));
}

TensorAlgebra tor_dual_block(const BlockAlgebra& b, int characteristic, int cap) {
    validate_block(b, characteristic);
    const GradedGenerator& g = b.generator;
    const int d = g.degree;
    const bool modular = characteristic != 0;

    switch (b.kind) {
        case BlockAlgebra::Kind::Polynomial:
            return make_algebra(characteristic, cap,
                                {make_exterior(apply_prefix(g, {Prefix::Kind::Eps, 0}, d + 1))});

        case BlockAlgebra::Kind::Exterior: {
            const GradedGenerator rho0 = apply_prefix(g, {Prefix::Kind::Rho, 0}, d + 1);
            if (modular) return gamma_split(rho0, characteristic, cap);
            return make_algebra(0, cap, {make_polynomial(rho0)});
        }

        case BlockAlgebra::Kind::Truncated: {
            const std::int64_t phi_deg = 2 + static_cast<std::int64_t>(b.truncation) * d;
            auto eps_part = make_algebra(
                characteristic, cap,
                {make_exterior(apply_prefix(g, {Prefix::Kind::Eps, 0}, d + 1))});
            if (phi_deg > cap) return eps_part;
            const GradedGenerator phi0 =
                apply_prefix(g, {Prefix::Kind::Phi, 0}, static_cast<int>(phi_deg));
            if (modular) return tensor(eps_part, gamma_split(phi0, characteristic, cap));
            return tensor(eps_part, make_algebra(0, cap, {make_polynomial(phi0)}));
        }

        case BlockAlgebra::Kind::DividedPower: {
            if (!modular)
                throw InvalidInput(
                    "characteristic-0 divided powers are polynomial; rewrite the block to "
                    "Polynomial before dualizing");
            // split first, then dualize each height-p factor
            TensorAlgebra out = make_algebra(characteristic, cap, {});
            for (const auto& factor : gamma_split(g, characteristic, cap).blocks)
                out = tensor(out, tor_dual_block(factor, characteristic, cap));
            return out;
        }
    }
    throw InvalidInput("unknown block kind");
}

TensorAlgebra tor_dual(const TensorAlgebra& A, int cap) {
    if (cap > A.cap)
        throw InvalidInput("tor_dual cap " + std::to_string(cap) +
                           " exceeds the input's cap " + std::to_string(A.cap));
    TensorAlgebra out = make_algebra(A.characteristic, cap, {});
    for (const auto& b : A.blocks) out = tensor(out, tor_dual_block(b, A.characteristic, cap));
    return out;
}

TensorAlgebra iterate_tor(const TensorAlgebra& seed, int iterations) {
    if (iterations < 0) throw InvalidInput("iterations must be >= 0");
    TensorAlgebra out = seed;
    for (int i = 0; i < iterations; ++i) out = tor_dual(out, out.cap);
    return out;
}

TensorAlgebra iterate_tor(const TowerSpec& spec) {
    if (spec.characteristic != spec.seed.characteristic)
        throw InvalidInput("tower characteristic disagrees with its seed");
    if (spec.cap > spec.seed.cap)
        throw InvalidInput("tower cap exceeds the seed's cap");
    TensorAlgebra seed = make_algebra(spec.characteristic, spec.cap, spec.seed.blocks);
    return iterate_tor(seed, spec.iterations);
}

TensorAlgebra b_tower(int degree, int n, int p, int cap, const std::string& base) {
    if (degree % 2 != 0)
        throw InvalidInput("b_tower seed degree must be even, got " + std::to_string(degree));
    if (n < 1) throw InvalidInput("b_tower stage must be >= 1");
    auto seed = make_algebra(p, cap, {make_polynomial(make_generator(base, degree))});
    return iterate_tor(seed, n - 1);
}

TensorAlgebra bpp_tower(int m, int x_deg, int n, int p, int cap, const std::string& base) {
    if (m < 2) throw InvalidInput("truncation height must be >= 2, got " + std::to_string(m));
    if (n < 1) throw InvalidInput("bpp_tower stage must be >= 1");
    auto seed = make_algebra(p, cap, {make_truncated(m, make_generator(base, x_deg))});
    return iterate_tor(seed, n);
}

}  // namespace torcat
