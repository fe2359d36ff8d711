#include "torcat/core.hpp"

#include <algorithm>
#include <map>

namespace torcat {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string to_string(const Prefix& p) {
    switch (p.kind) {
        case Prefix::Kind::Eps: return "eps";
        case Prefix::Kind::Rho: return "rho^" + std::to_string(p.index);
        case Prefix::Kind::Phi: return "phi^" + std::to_string(p.index);
    }
    return {};
}

std::optional<Prefix> parse_prefix(const std::string& text) {
    if (text == "eps") return Prefix{Prefix::Kind::Eps, 0};
    auto parse_indexed = [&](const std::string& head, Prefix::Kind kind) -> std::optional<Prefix> {
        if (text.rfind(head, 0) != 0) return std::nullopt;
        const std::string rest = text.substr(head.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        return Prefix{kind, std::stoi(rest)};
    };
    if (auto p = parse_indexed("rho^", Prefix::Kind::Rho)) return p;
    if (auto p = parse_indexed("phi^", Prefix::Kind::Phi)) return p;
    return std::nullopt;
}

std::string GradedGenerator::name() const {
    std::string out;
    for (const auto& p : prefixes) out += to_string(p) + "(";
    out += base;
    out.append(prefixes.size(), ')');
    return out;
}

GradedGenerator make_generator(std::string base, int degree) {
    return GradedGenerator{std::move(base), {}, degree};
}

GradedGenerator apply_prefix(const GradedGenerator& g, Prefix p, int new_degree) {
    GradedGenerator out = g;
    out.prefixes.insert(out.prefixes.begin(), p);
    out.degree = new_degree;
    return out;
}

std::string to_string(BlockAlgebra::Kind k) {
    switch (k) {
        case BlockAlgebra::Kind::Polynomial: return "polynomial";
        case BlockAlgebra::Kind::Exterior: return "exterior";
        case BlockAlgebra::Kind::Truncated: return "truncated";
        case BlockAlgebra::Kind::DividedPower: return "divided_power";
    }
    return {};
}

BlockAlgebra make_polynomial(GradedGenerator g) {
    return BlockAlgebra{BlockAlgebra::Kind::Polynomial, 0, std::move(g)};
}

BlockAlgebra make_exterior(GradedGenerator g) {
    return BlockAlgebra{BlockAlgebra::Kind::Exterior, 0, std::move(g)};
}

BlockAlgebra make_truncated(int m, GradedGenerator g) {
    return BlockAlgebra{BlockAlgebra::Kind::Truncated, m, std::move(g)};
}

BlockAlgebra make_divided_power(GradedGenerator g) {
    return BlockAlgebra{BlockAlgebra::Kind::DividedPower, 0, std::move(g)};
}

void validate_block(const BlockAlgebra& b, int characteristic) {
    if (characteristic != 0 && !is_prime(characteristic))
        throw InvalidInput("characteristic must be 0 or a prime, got " +
                           std::to_string(characteristic));
    const int d = b.generator.degree;
    if (d < 1)
        throw InvalidInput("generator '" + b.generator.name() +
                           "' has degree " + std::to_string(d) +
                           "; the grading must be strictly positive");
    if (b.kind == BlockAlgebra::Kind::Truncated && b.truncation < 2)
        throw InvalidInput("truncation height must be >= 2, got " +
                           std::to_string(b.truncation));
    if (characteristic != 2) {
        const bool odd = d % 2 != 0;
        if (b.kind == BlockAlgebra::Kind::Exterior && !odd)
            throw InvalidInput("parity violation: exterior generator '" +
                               b.generator.name() + "' must have odd degree, got " +
                               std::to_string(d));
        if (b.kind != BlockAlgebra::Kind::Exterior && odd)
            throw InvalidInput("parity violation: " + to_string(b.kind) +
                               " generator '" + b.generator.name() +
                               "' must have even degree, got " + std::to_string(d));
    }
}

TensorAlgebra make_algebra(int characteristic, int cap, std::vector<BlockAlgebra> blocks) {
    if (cap < 0) throw InvalidInput("cap must be nonnegative");
    TensorAlgebra A;
    A.characteristic = characteristic;
    A.cap = cap;
    for (auto& b : blocks) {
        validate_block(b, characteristic);
        if (b.generator.degree <= cap) A.blocks.push_back(std::move(b));
    }
    std::map<std::string, int> seen;
    for (const auto& b : A.blocks) {
        if (++seen[b.generator.name()] > 1)
            throw InvalidInput("duplicate generator name '" + b.generator.name() + "'");
    }
    return A;
}

std::vector<std::pair<BlockAlgebra::Kind, int>> kind_degree_multiset(const TensorAlgebra& A) {
    std::vector<std::pair<BlockAlgebra::Kind, int>> out;
    out.reserve(A.blocks.size());
    for (const auto& b : A.blocks) out.emplace_back(b.kind, b.generator.degree);
    std::sort(out.begin(), out.end());
    return out;
}

PoincareSeries one_series(int cap) {
    if (cap < 0) throw InvalidInput("cap must be nonnegative");
    PoincareSeries s;
    s.cap = cap;
    s.coefficients.assign(static_cast<std::size_t>(cap) + 1, 0);
    s.coefficients[0] = 1;
    return s;
}

PoincareSeries truncate_series(const PoincareSeries& s, int new_cap) {
    if (new_cap > s.cap)
        throw InvalidInput("cannot extend a series beyond its cap");
    PoincareSeries out;
    out.cap = new_cap;
    out.coefficients.assign(s.coefficients.begin(), s.coefficients.begin() + new_cap + 1);
    return out;
}

PoincareSeries block_series(const BlockAlgebra& b, int characteristic, int cap) {
    validate_block(b, characteristic);
    PoincareSeries s = one_series(cap);
    const int d = b.generator.degree;
    switch (b.kind) {
        case BlockAlgebra::Kind::Polynomial:
        case BlockAlgebra::Kind::DividedPower:
            // one basis element per exponent (resp. per divided power gamma_j)
            for (std::int64_t deg = d; deg <= cap; deg += d)
                s.coefficients[static_cast<std::size_t>(deg)] = 1;
            break;
        case BlockAlgebra::Kind::Exterior:
            if (d <= cap) s.coefficients[static_cast<std::size_t>(d)] = 1;
            break;
        case BlockAlgebra::Kind::Truncated:
            for (std::int64_t j = 1; j < b.truncation && j * d <= cap; ++j)
                s.coefficients[static_cast<std::size_t>(j * d)] = 1;
            break;
    }
    return s;
}

PoincareSeries series_mul(const PoincareSeries& s, const PoincareSeries& t) {
    if (s.cap != t.cap)
        throw InvalidInput("series cap mismatch: " + std::to_string(s.cap) + " vs " +
                           std::to_string(t.cap));
    PoincareSeries out;
    out.cap = s.cap;
    out.coefficients.assign(static_cast<std::size_t>(s.cap) + 1, 0);
    for (int i = 0; i <= s.cap; ++i) {
        if (s.coefficients[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= s.cap; ++j)
            out.coefficients[static_cast<std::size_t>(i + j)] +=
                s.coefficients[static_cast<std::size_t>(i)] *
                t.coefficients[static_cast<std::size_t>(j)];
    }
    return out;
}

TensorAlgebra tensor(const TensorAlgebra& A, const TensorAlgebra& B) {
    if (A.characteristic != B.characteristic)
        throw InvalidInput("characteristic mismatch: " + std::to_string(A.characteristic) +
                           " vs " + std::to_string(B.characteristic));
    const int cap = std::min(A.cap, B.cap);
    std::vector<BlockAlgebra> blocks = A.blocks;
    blocks.insert(blocks.end(), B.blocks.begin(), B.blocks.end());

    // rename colliding generators: every member of a colliding group gets a
    // "#k" suffix on its base label, numbered in block-list order
    std::map<std::string, int> count;
    for (const auto& b : blocks) ++count[b.generator.name()];
    std::map<std::string, int> next;
    for (auto& b : blocks) {
        const std::string n = b.generator.name();
        if (count[n] > 1) b.generator.base += "#" + std::to_string(++next[n]);
    }
    return make_algebra(A.characteristic, cap, std::move(blocks));
}

PoincareSeries algebra_series(const TensorAlgebra& A, int cap) {
    if (cap > A.cap)
        throw InvalidInput("requested series cap " + std::to_string(cap) +
                           " exceeds the algebra's cap " + std::to_string(A.cap) +
                           "; the block list is only complete up to the latter");
    PoincareSeries out = one_series(cap);
    for (const auto& b : A.blocks) {
        if (b.generator.degree > cap) continue;
        out = series_mul(out, block_series(b, A.characteristic, cap));
    }
    return out;
}

}  // namespace torcat
