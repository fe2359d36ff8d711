#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "torcat/catalog.hpp"
#include "torcat/oracle.hpp"
#include "torcat/tor.hpp"

using namespace torcat;

namespace {

std::vector<std::int64_t> coeffs(const CatalogResult& r, int cap) {
    return result_series(r, cap).coefficients;
}

std::vector<std::pair<BlockAlgebra::Kind, int>> kinds_and_degrees(const TensorAlgebra& A) {
    return kind_degree_multiset(A);
}

}  // namespace

TEST_CASE("catalog lists every entry with a provenance tag") {
    auto entries = catalog_entries();
    for (const auto* id :
         {"thh_n_fp", "thh_n_Z_modp", "shukla_n", "thh_n_zpm_zp", "shukla_over_zpm",
          "hh_n_truncated", "thh_n_truncated", "tate_tor", "thh_weak_split",
          "thh_number_ring_quotient", "thh_function_field"}) {
        CHECK(std::find(entries.begin(), entries.end(), id) != entries.end());
        CHECK(!entry_provenance(id).empty());
    }
    CHECK_THROWS_AS(entry_provenance("nope"), InvalidInput);
}

TEST_CASE("thh_n_fp stages") {
    auto s1 = thh_n_fp(1, 3, 10);
    REQUIRE(s1.algebra.blocks.size() == 1);
    CHECK(s1.algebra.blocks[0].kind == BlockAlgebra::Kind::Polynomial);
    CHECK(s1.algebra.blocks[0].generator.name() == "mu");
    CHECK(s1.algebra.blocks[0].generator.degree == 2);

    auto s2 = thh_n_fp(2, 3, 10);
    REQUIRE(s2.algebra.blocks.size() == 1);
    CHECK(s2.algebra.blocks[0].kind == BlockAlgebra::Kind::Exterior);
    CHECK(s2.algebra.blocks[0].generator.degree == 3);

    auto s3 = thh_n_fp(3, 2, 8);
    REQUIRE(s3.algebra.blocks.size() == 2);
    CHECK(s3.algebra.blocks[0].generator.name() == "rho^0(eps(mu))");
    CHECK(s3.algebra.blocks[0].generator.degree == 4);
    CHECK(s3.algebra.blocks[1].generator.name() == "rho^1(eps(mu))");
    CHECK(s3.algebra.blocks[1].generator.degree == 8);

    CHECK_THROWS_AS(thh_n_fp(0, 3, 10), InvalidInput);
    CHECK_THROWS_AS(thh_n_fp(1, 4, 10), InvalidInput);
}

TEST_CASE("thh_n_Z_modp combines the x- and y-towers") {
    auto p3 = thh_n_Z_modp(1, 3, 10);
    REQUIRE(p3.algebra.blocks.size() == 2);
    CHECK(p3.algebra.blocks[0].kind == BlockAlgebra::Kind::Polynomial);
    CHECK(p3.algebra.blocks[0].generator.name() == "x");
    CHECK(p3.algebra.blocks[0].generator.degree == 6);
    CHECK(p3.algebra.blocks[1].kind == BlockAlgebra::Kind::Exterior);
    CHECK(p3.algebra.blocks[1].generator.name() == "eps(y)");
    CHECK(p3.algebra.blocks[1].generator.degree == 5);

    auto p2 = thh_n_Z_modp(1, 2, 10);
    CHECK(p2.algebra.blocks[0].generator.degree == 4);
    CHECK(p2.algebra.blocks[1].generator.degree == 3);

    CHECK(coeffs(thh_n_Z_modp(1, 3, 6), 6) ==
          std::vector<std::int64_t>{1, 0, 0, 0, 0, 1, 1});
}

TEST_CASE("shukla_n stages and labels") {
    auto s0 = shukla_n(0, 10, 5);
    REQUIRE(s0.algebra.blocks.size() == 1);
    CHECK(s0.algebra.blocks[0].kind == BlockAlgebra::Kind::Exterior);
    CHECK(s0.algebra.blocks[0].generator.name() == "tau1");
    CHECK(s0.algebra.blocks[0].generator.degree == 1);

    auto s1 = shukla_n(1, 10, 2);
    std::vector<std::string> names;
    for (const auto& b : s1.algebra.blocks) names.push_back(b.generator.name());
    CHECK(names == std::vector<std::string>{"rho^0(tau1)", "rho^1(tau1)", "rho^2(tau1)"});

    auto s2 = shukla_n(2, 6, 2);
    names.clear();
    for (const auto& b : s2.algebra.blocks) names.push_back(b.generator.name());
    CHECK(names == std::vector<std::string>{"eps(rho^0(tau1))", "phi^0(rho^0(tau1))",
                                            "eps(rho^1(tau1))"});
    std::vector<int> degrees;
    for (const auto& b : s2.algebra.blocks) degrees.push_back(b.generator.degree);
    CHECK(degrees == std::vector<int>{3, 6, 5});

    auto labeled = shukla_n(1, 10, 2, "tau1(2^3)");
    CHECK(labeled.algebra.blocks[0].generator.name() == "rho^0(tau1(2^3))");
}

TEST_CASE("thh_n_zpm_zp is the product of the two towers") {
    CHECK(coeffs(thh_n_zpm_zp(1, 2, 3, 4), 4) == std::vector<std::int64_t>{1, 0, 1, 1, 2});

    // the series is independent of m; only the labels carry it
    auto m2 = thh_n_zpm_zp(2, 3, 2, 10);
    auto m5 = thh_n_zpm_zp(2, 3, 5, 10);
    CHECK(result_series(m2, 10) == result_series(m5, 10));
    CHECK(kinds_and_degrees(m2.algebra) == kinds_and_degrees(m5.algebra));
    std::string m2_names, m5_names;
    for (const auto& b : m2.algebra.blocks) m2_names += b.generator.name() + ";";
    for (const auto& b : m5.algebra.blocks) m5_names += b.generator.name() + ";";
    CHECK(m2_names != m5_names);

    CHECK_THROWS_AS(thh_n_zpm_zp(1, 2, 1, 10), InvalidInput);

    // block order: x-tower, y-tower, then the Shukla factor
    auto r = thh_n_zpm_zp(1, 2, 3, 10);
    std::vector<int> degrees;
    for (const auto& b : r.algebra.blocks) degrees.push_back(b.generator.degree);
    CHECK(degrees == std::vector<int>{4, 3, 2, 4, 8});
}

TEST_CASE("shukla_over_zpm tensors the stage-2 and stage-1 towers") {
    CHECK(coeffs(shukla_over_zpm(2, 2, 4), 4) == std::vector<std::int64_t>{1, 0, 1, 1, 1});
    CHECK(coeffs(shukla_over_zpm(3, 3, 4), 4)[2] == 1);
    CHECK_THROWS_AS(shukla_over_zpm(1, 2, 4), InvalidInput);

    auto r = shukla_over_zpm(3, 2, 6);
    bool has_pm_label = false, has_p_label = false;
    for (const auto& b : r.algebra.blocks) {
        if (b.generator.name().find("tau1(2^3)") != std::string::npos) has_pm_label = true;
        if (b.generator.name().find("tau1(2)") != std::string::npos) has_p_label = true;
    }
    CHECK(has_pm_label);
    CHECK(has_p_label);
}

TEST_CASE("hh_n_truncated reduced and full") {
    auto reduced = hh_n_truncated(1, 2, 4, 2, true, 30);
    REQUIRE(reduced.algebra.blocks.size() == 3);
    CHECK(reduced.algebra.blocks[0].generator.name() == "eps(x)");
    CHECK(reduced.algebra.blocks[1].generator.name() == "phi^0(x)");
    CHECK(reduced.algebra.blocks[1].generator.degree == 10);
    CHECK(reduced.multiplicity.empty());

    auto full = hh_n_truncated(1, 2, 4, 2, false, 30);
    CHECK(full.algebra.blocks.size() == 4);
    CHECK(full.algebra.blocks[0].kind == BlockAlgebra::Kind::Truncated);
    CHECK(full.algebra.blocks[0].truncation == 4);
    CHECK(!full.multiplicity.empty());

    CHECK_THROWS_WITH_AS(hh_n_truncated(1, 3, 2, 2, false, 10),
                         doctest::Contains("full coefficients require p | m"), InvalidInput);
    CHECK_NOTHROW(hh_n_truncated(1, 3, 2, 2, true, 10));
    CHECK_THROWS_AS(hh_n_truncated(1, 2, 2, 3, true, 10), InvalidInput);

    // stage 2 agrees with the bar homology of stage 1
    auto stage1 = bpp_tower(2, 2, 1, 2, 8);
    auto oracle = bar_homology(materialize(stage1, 8), 8);
    auto stage2 = hh_n_truncated(2, 2, 2, 2, true, 8);
    CHECK(oracle.by_total == coeffs(stage2, 8));
}

TEST_CASE("thh_n_truncated multiplies in the base tower") {
    auto whole = thh_n_truncated(1, 2, 2, 2, true, 10);
    auto lhs = result_series(whole, 10);
    auto rhs = series_mul(result_series(thh_n_fp(1, 2, 10), 10),
                          result_series(hh_n_truncated(1, 2, 2, 2, true, 10), 10));
    CHECK(lhs == rhs);
}

TEST_CASE("tate_tor keeps divided powers unsplit") {
    auto r = tate_tor(1, 1, 6);
    REQUIRE(r.algebra.blocks.size() == 2);
    CHECK(r.algebra.blocks[0].generator.name() == "T1");
    CHECK(r.algebra.blocks[1].generator.name() == "S1");
    CHECK(r.algebra.blocks[1].kind == BlockAlgebra::Kind::DividedPower);
    CHECK(coeffs(r, 6) == std::vector<std::int64_t>{1, 1, 1, 1, 1, 1, 1});

    CHECK(tate_tor(0, 0, 4).algebra.blocks.empty());
    CHECK(coeffs(tate_tor(2, 1, 4), 4) == std::vector<std::int64_t>{1, 2, 2, 2, 2});
}

TEST_CASE("thh_weak_split multiplies by divided powers on degree-2 classes") {
    // r = 1 applied to THH(Z; Z/p) at p = 2 gives the n = 1 splitting
    auto input = result_series(thh_n_Z_modp(1, 2, 10), 10);
    auto split = thh_weak_split(input, 1, 10);
    CHECK(split == result_series(thh_n_zpm_zp(1, 2, 3, 10), 10));

    CHECK(thh_weak_split(input, 0, 10) == input);

    auto unit = one_series(8);
    auto two = thh_weak_split(unit, 2, 8);
    auto gammas = make_algebra(0, 8,
                               {make_divided_power(make_generator("S1", 2)),
                                make_divided_power(make_generator("S2", 2))});
    CHECK(two == algebra_series(gammas, 8));

    PoincareSeries wrong_cap{4, {1, 0, 0, 0, 0}};
    CHECK_THROWS_AS(thh_weak_split(wrong_cap, 1, 10), InvalidInput);
}

TEST_CASE("thh_number_ring_quotient folds the caller-supplied residue series") {
    PoincareSeries residue{8, {1, 0, 0, 1, 1, 0, 0, 1, 1}};
    auto r = thh_number_ring_quotient(1, 2, 2, residue, 8);
    REQUIRE(r.series.has_value());
    CHECK(*r.series ==
          series_mul(residue, algebra_series(r.algebra, 8)));
    REQUIRE(r.reduced_route.has_value());
    CHECK(*r.reduced_route == hh_n_truncated(1, 2, 2, 2, true, 8).algebra);

    // the Shukla factor does not depend on the ramification index
    auto e5 = thh_number_ring_quotient(1, 2, 5, residue, 8);
    CHECK(algebra_series(r.algebra, 8) == algebra_series(e5.algebra, 8));

    CHECK_THROWS_AS(thh_number_ring_quotient(1, 2, 1, residue, 8), InvalidInput);
    PoincareSeries wrong_cap{4, {1, 0, 0, 0, 0}};
    CHECK_THROWS_AS(thh_number_ring_quotient(1, 2, 2, wrong_cap, 8), InvalidInput);
}

TEST_CASE("thh_function_field is free over L on the expected algebra") {
    auto d0 = thh_function_field(0, 3, 6);
    REQUIRE(d0.algebra.blocks.size() == 1);
    CHECK(d0.algebra.blocks[0].generator.name() == "mu");
    CHECK(d0.multiplicity == "free over L");

    CHECK(coeffs(thh_function_field(2, 5, 4), 4) == std::vector<std::int64_t>{1, 2, 2, 2, 2});
    CHECK(coeffs(thh_function_field(1, 3, 4), 4)[1] == 1);

    auto d2 = thh_function_field(2, 2, 6);
    CHECK(d2.algebra.blocks[1].generator.name() == "eps(x1)");
    CHECK(d2.algebra.blocks[2].generator.name() == "eps(x2)");
}

TEST_CASE("duality: the reduced tower at n+1 equals n more duals of stage 1") {
    for (int n : {1, 2, 3}) {
        for (int p : {2, 3}) {
            for (int m : {2, 3, 4}) {
                auto lhs = hh_n_truncated(n + 1, p, m, 2, true, 10).algebra;
                auto stage1 = hh_n_truncated(1, p, m, 2, true, 10).algebra;
                auto rhs = iterate_tor(stage1, n);
                CHECK(kinds_and_degrees(lhs) == kinds_and_degrees(rhs));
            }
        }
    }
}
