#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "grsdual/grs.hpp"
#include "grsdual/verify.hpp"

using namespace grsdual;

namespace {

std::vector<Elem> elems(std::initializer_list<std::uint32_t> encs) {
    std::vector<Elem> out;
    for (auto e : encs) out.push_back(Elem{e});
    return out;
}

EvalPoints random_points(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint32_t> all(f.q());
    for (std::uint32_t i = 0; i < f.q(); ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Elem> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(Elem{all[i]});
    return EvalPoints(f, std::move(a));
}

}  // namespace

TEST_CASE("evaluation point validation") {
    Field f = Field::make(5, 1);
    CHECK_THROWS_AS(EvalPoints(f, elems({0, 1, 0})), std::invalid_argument);
    CHECK_THROWS_AS(EvalPoints(f, {}), std::invalid_argument);
    CHECK_THROWS_AS(EvalPoints(f, elems({7})), std::invalid_argument);
    CHECK_THROWS_AS(Scaling(f, elems({1, 0})), std::invalid_argument);
    CHECK_NOTHROW(EvalPoints(f, elems({0, 1, 2, 3, 4})));  // n = q is allowed
}

TEST_CASE("l_value examples over GF(5)") {
    Field f = Field::make(5, 1);
    EvalPoints a(f, elems({0, 1, 2}));
    CHECK(l_value(a, 0) == Elem{2});  // (0-1)(0-2) = 2
    CHECK(l_value(a, 1) == Elem{4});  // (1-0)(1-2) = -1
    EvalPoints b(f, elems({3, 1}));
    CHECK(l_value(b, 0) == Elem{2});  // single factor a1 - a2
    CHECK_THROWS_AS(l_value(a, 3), std::invalid_argument);
}

TEST_CASE("power sum examples over GF(5)") {
    Field f = Field::make(5, 1);
    EvalPoints a(f, elems({0, 1, 2}));
    CHECK(power_sum_check(a, 0) == Elem{0});  // 1/2 + 1/4 + 1/2 = 3+4+3 = 0
    CHECK(power_sum_check(a, 1) == Elem{0});
    CHECK(power_sum_check(a, 2) == Elem{1});  // m = n-1
    CHECK_THROWS_AS(power_sum_check(a, 3), std::invalid_argument);
}

TEST_CASE("power sum identity on random evaluation sets") {
    std::mt19937_64 rng(11);
    int done = 0;
    for (auto [p, m] : {std::pair{5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}, {7u, 2u}, {11u, 2u}}) {
        Field f = Field::make(p, m);
        for (int it = 0; it < 85; ++it) {
            std::uniform_int_distribution<std::size_t> nd(2, std::min<std::uint64_t>(f.q(), 10));
            EvalPoints pts = random_points(f, nd(rng), rng);
            for (std::uint32_t mm = 0; mm + 1 < pts.n(); ++mm)
                REQUIRE(power_sum_check(pts, mm) == f.zero());
            REQUIRE(power_sum_check(pts, (std::uint32_t)pts.n() - 1) == f.one());
            REQUIRE(l_value(pts, it % pts.n()).enc != 0);
            ++done;
        }
    }
    CHECK(done >= 500);
}

TEST_CASE("generator matrix examples") {
    Field f = Field::make(5, 1);
    SUBCASE("k = 1 plain: the row is v itself") {
        GrsCode code(EvalPoints(f, elems({0, 1, 2, 3})), Scaling(f, elems({1, 1, 2, 2})), 1, false);
        GenMatrix g = generator_matrix(code);
        REQUIRE(g.rows() == 1);
        REQUIRE(g.cols() == 4);
        CHECK(g.at(0, 0) == Elem{1});
        CHECK(g.at(0, 1) == Elem{1});
        CHECK(g.at(0, 2) == Elem{2});
        CHECK(g.at(0, 3) == Elem{2});
    }
    SUBCASE("k = 1 extended single point") {
        GrsCode code(EvalPoints(f, elems({1})), Scaling(f, elems({2})), 1, true);
        GenMatrix g = generator_matrix(code);
        REQUIRE(g.rows() == 1);
        REQUIRE(g.cols() == 2);
        CHECK(g.at(0, 0) == Elem{2});
        CHECK(g.at(0, 1) == Elem{1});
    }
    SUBCASE("k = 2 extended") {
        GrsCode code(EvalPoints(f, elems({0, 1})), Scaling(f, elems({1, 1})), 2, true);
        GenMatrix g = generator_matrix(code);
        REQUIRE(g.rows() == 2);
        REQUIRE(g.cols() == 3);
        CHECK((g.at(0, 0) == Elem{1} && g.at(0, 1) == Elem{1} && g.at(0, 2) == Elem{0}));
        CHECK((g.at(1, 0) == Elem{0} && g.at(1, 1) == Elem{1} && g.at(1, 2) == Elem{1}));
    }
}

TEST_CASE("generator matrices of GRS codes have full rank") {
    std::mt19937_64 rng(23);
    for (auto [p, m] : {std::pair{5u, 1u}, {3u, 2u}, {13u, 1u}}) {
        Field f = Field::make(p, m);
        std::uniform_int_distribution<std::uint32_t> vd(1, (std::uint32_t)f.q() - 1);
        for (int it = 0; it < 60; ++it) {
            std::uniform_int_distribution<std::size_t> nd(2, std::min<std::uint64_t>(f.q(), 9));
            EvalPoints pts = random_points(f, nd(rng), rng);
            std::vector<Elem> v(pts.n());
            for (auto& e : v) e = Elem{vd(rng)};
            std::uniform_int_distribution<std::uint32_t> kd(1, (std::uint32_t)pts.n());
            std::uint32_t k = kd(rng);
            GrsCode code(pts, Scaling(f, v), k, it % 2 == 0);
            auto [rank, dual] = rank_and_dual_dim(f, generator_matrix(code));
            REQUIRE(rank == k);
            REQUIRE(dual == code.length() - k);
        }
    }
}

TEST_CASE("coset product identity examples") {
    Field f = Field::make(5, 1);
    CHECK(coset_product(f, 4, 1) == Elem{2});  // (2-4)(2-3)(2-1) = 2 = 4 * 2^{-1}
    CHECK(coset_product(f, 2, 2) == Elem{2});  // alpha = 4: 1 - 4 = 2 = 2 * 1
    CHECK(coset_product(f, 1, 1) == Elem{1});  // empty product
    CHECK_THROWS_AS(coset_product(f, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(coset_product(f, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(coset_product(f, 4, 5), std::invalid_argument);
}

TEST_CASE("coset product identity holds for every divisor and index, q <= 121") {
    for (auto [p, m] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {11u, 1u}, {13u, 1u},
                        {17u, 1u}, {19u, 1u}, {23u, 1u}, {5u, 2u}, {3u, 3u}, {29u, 1u}, {31u, 1u},
                        {37u, 1u}, {41u, 1u}, {43u, 1u}, {47u, 1u}, {7u, 2u}, {53u, 1u}, {59u, 1u},
                        {61u, 1u}, {67u, 1u}, {71u, 1u}, {73u, 1u}, {79u, 1u}, {3u, 4u}, {83u, 1u},
                        {89u, 1u}, {97u, 1u}, {101u, 1u}, {103u, 1u}, {107u, 1u}, {109u, 1u},
                        {113u, 1u}, {5u, 3u}, {11u, 2u}}) {
        Field f = Field::make(p, m);
        for (std::uint64_t d = 1; d <= f.order(); ++d) {
            if (f.order() % d != 0) continue;
            for (std::uint64_t i = 1; i <= d; ++i) REQUIRE_NOTHROW(coset_product(f, d, i));
        }
    }
}
