#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "torcat/core.hpp"

using namespace torcat;
using torcat::testing::naive_algebra_series;
using torcat::testing::random_block;

namespace {

std::vector<std::int64_t> coeffs(const PoincareSeries& s) { return s.coefficients; }

}  // namespace

TEST_CASE("prefix tokens render and parse") {
    CHECK(to_string(Prefix{Prefix::Kind::Eps, 0}) == "eps");
    CHECK(to_string(Prefix{Prefix::Kind::Rho, 2}) == "rho^2");
    CHECK(to_string(Prefix{Prefix::Kind::Phi, 0}) == "phi^0");
    for (const auto* token : {"eps", "rho^0", "rho^12", "phi^3"}) {
        auto p = parse_prefix(token);
        REQUIRE(p.has_value());
        CHECK(to_string(*p) == token);
    }
    CHECK(!parse_prefix("rho").has_value());
    CHECK(!parse_prefix("phi^").has_value());
    CHECK(!parse_prefix("phi^x").has_value());
}

TEST_CASE("generator names follow the construction history, outermost first") {
    auto omega = make_generator("omega", 2);
    auto eps = apply_prefix(omega, {Prefix::Kind::Eps, 0}, 3);
    auto rho = apply_prefix(eps, {Prefix::Kind::Rho, 1}, 6);
    auto phi = apply_prefix(rho, {Prefix::Kind::Phi, 2}, 28);
    CHECK(omega.name() == "omega");
    CHECK(eps.name() == "eps(omega)");
    CHECK(rho.name() == "rho^1(eps(omega))");
    CHECK(phi.name() == "phi^2(rho^1(eps(omega)))");
    CHECK(phi.degree == 28);
}

TEST_CASE("block_series of the four kinds") {
    CHECK(coeffs(block_series(make_exterior(make_generator("tau1", 1)), 3, 4)) ==
          std::vector<std::int64_t>{1, 1, 0, 0, 0});
    CHECK(coeffs(block_series(make_truncated(2, make_generator("x", 2)), 3, 4)) ==
          std::vector<std::int64_t>{1, 0, 1, 0, 0});
    CHECK(coeffs(block_series(make_divided_power(make_generator("z", 2)), 3, 6)) ==
          std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1});
    CHECK(coeffs(block_series(make_polynomial(make_generator("w", 4)), 0, 9)) ==
          std::vector<std::int64_t>{1, 0, 0, 0, 1, 0, 0, 0, 1, 0});
}

TEST_CASE("block_series rejects parity violations and degree zero") {
    CHECK_THROWS_AS(block_series(make_exterior(make_generator("g", 2)), 3, 4), InvalidInput);
    CHECK_THROWS_AS(block_series(make_polynomial(make_generator("g", 3)), 5, 4), InvalidInput);
    CHECK_THROWS_AS(block_series(make_polynomial(make_generator("g", 0)), 2, 4), InvalidInput);
    CHECK_THROWS_AS(block_series(make_exterior(make_generator("g", 0)), 2, 4), InvalidInput);
    // characteristic 2 waives parity, not positivity
    CHECK_NOTHROW(block_series(make_polynomial(make_generator("g", 3)), 2, 4));
    CHECK_THROWS_AS(block_series(make_truncated(1, make_generator("g", 2)), 2, 4),
                    InvalidInput);
}

TEST_CASE("series_mul is the truncated Cauchy product") {
    PoincareSeries a{2, {1, 1, 0}};
    PoincareSeries b{2, {1, 0, 1}};
    CHECK(coeffs(series_mul(a, b)) == std::vector<std::int64_t>{1, 1, 1});

    PoincareSeries unit{2, {1, 0, 0}};
    CHECK(series_mul(unit, b) == b);

    // (1+t)^2 / (1-t^2) at cap 4, multiplied out by hand
    PoincareSeries sq{4, {1, 2, 1, 0, 0}};
    PoincareSeries geo{4, {1, 0, 1, 0, 1}};
    CHECK(coeffs(series_mul(sq, geo)) == std::vector<std::int64_t>{1, 2, 2, 2, 2});

    PoincareSeries other_cap{3, {1, 0, 0, 0}};
    CHECK_THROWS_AS(series_mul(a, other_cap), InvalidInput);
}

TEST_CASE("tensor concatenates blocks over a shared field") {
    auto tate = tensor(make_algebra(0, 6, {make_exterior(make_generator("T1", 1))}),
                       make_algebra(0, 6, {make_divided_power(make_generator("S1", 2))}));
    REQUIRE(tate.blocks.size() == 2);
    CHECK(tate.blocks[0].kind == BlockAlgebra::Kind::Exterior);
    CHECK(tate.blocks[1].kind == BlockAlgebra::Kind::DividedPower);
    CHECK(coeffs(algebra_series(tate, 6)) ==
          std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1});

    auto empty = make_algebra(0, 6, {});
    CHECK(tensor(tate, empty) == tate);

    auto lambda = make_algebra(3, 4, {make_exterior(make_generator("a", 1))});
    auto poly = make_algebra(3, 4, {make_polynomial(make_generator("b", 2))});
    CHECK(coeffs(algebra_series(tensor(lambda, poly), 4)) ==
          std::vector<std::int64_t>{1, 1, 1, 1, 1});

    auto char2 = make_algebra(2, 4, {});
    CHECK_THROWS_AS(tensor(lambda, char2), InvalidInput);
}

TEST_CASE("tensor renames colliding generators in block-list order") {
    auto a1 = make_algebra(3, 9, {make_exterior(make_generator("a", 3))});
    auto a2 = make_algebra(3, 9, {make_exterior(make_generator("a", 3))});
    auto t = tensor(a1, a2);
    REQUIRE(t.blocks.size() == 2);
    CHECK(t.blocks[0].generator.name() == "a#1");
    CHECK(t.blocks[1].generator.name() == "a#2");
    // determinism: the same construction yields the same names
    CHECK(tensor(a1, a2) == t);
}

TEST_CASE("algebra_series multiplies block series and ignores blocks above cap") {
    auto A = make_algebra(3, 9,
                          {make_exterior(make_generator("ex", 3)),
                           make_divided_power(make_generator("phix", 6))});
    CHECK(coeffs(algebra_series(A, 9)) ==
          std::vector<std::int64_t>{1, 0, 0, 1, 0, 0, 1, 0, 0, 1});
    CHECK(coeffs(algebra_series(A, 5)) == std::vector<std::int64_t>{1, 0, 0, 1, 0, 0});

    auto empty = make_algebra(5, 3, {});
    CHECK(coeffs(algebra_series(empty, 3)) == std::vector<std::int64_t>{1, 0, 0, 0});

    auto gamma = make_algebra(3, 6, {make_divided_power(make_generator("x(m)", 2))});
    CHECK(coeffs(algebra_series(gamma, 6)) ==
          std::vector<std::int64_t>{1, 0, 1, 0, 1, 0, 1});

    CHECK_THROWS_AS(algebra_series(A, 12), InvalidInput);
}

TEST_CASE("make_algebra drops out-of-cap blocks and rejects duplicates") {
    auto A = make_algebra(2, 5,
                          {make_polynomial(make_generator("a", 2)),
                           make_polynomial(make_generator("b", 6))});
    REQUIRE(A.blocks.size() == 1);
    CHECK(A.blocks[0].generator.name() == "a");

    CHECK_THROWS_AS(make_algebra(2, 5,
                                 {make_polynomial(make_generator("a", 2)),
                                  make_exterior(make_generator("a", 3))}),
                    InvalidInput);
}

TEST_CASE("multiplicativity: series of a tensor product is the product of series") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const int p = (trial % 2 == 0) ? 2 : 3;
        auto A = make_algebra(p, 10, {random_block(rng, p, 6, 5, "a")});
        auto B = make_algebra(p, 10, {random_block(rng, p, 6, 5, "b")});
        auto AB = tensor(A, B);
        CHECK(algebra_series(AB, 10) ==
              series_mul(algebra_series(A, 10), algebra_series(B, 10)));
    }
}

TEST_CASE("telescoping: height-p truncated blocks on degrees p^k d match divided powers") {
    for (int p : {2, 3}) {
        for (int d : {2, 4}) {
            const int cap = 24;
            PoincareSeries split = one_series(cap);
            for (std::int64_t deg = d; deg <= cap; deg *= p) {
                auto block = make_truncated(
                    p, make_generator("g" + std::to_string(deg), static_cast<int>(deg)));
                split = series_mul(split, block_series(block, p, cap));
            }
            auto gamma = block_series(make_divided_power(make_generator("g", d)), p, cap);
            CHECK(split == gamma);
        }
    }
}

TEST_CASE("closed-form series agree with direct monomial enumeration") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = (trial % 3 == 0) ? 2 : 3;
        std::vector<BlockAlgebra> blocks;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i)
            blocks.push_back(random_block(rng, p, 6, 5, "g" + std::to_string(i)));
        auto A = make_algebra(p, 12, std::move(blocks));
        CHECK(algebra_series(A, 12) == naive_algebra_series(A, 12));
    }
}

TEST_CASE("truncate_series shortens and never extends") {
    PoincareSeries s{4, {1, 2, 2, 2, 2}};
    CHECK(coeffs(truncate_series(s, 2)) == std::vector<std::int64_t>{1, 2, 2});
    CHECK_THROWS_AS(truncate_series(s, 5), InvalidInput);
}
