#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grsdual/errors.hpp"
#include "grsdual/verify.hpp"

using namespace grsdual;

namespace {

GenMatrix from_rows(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
    GenMatrix g(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (auto& row : rows) {
        std::size_t c = 0;
        for (auto e : row) g.at(r, c++) = Elem{e};
        ++r;
    }
    return g;
}

}  // namespace

TEST_CASE("gram check examples over GF(5)") {
    Field f = Field::make(5, 1);
    CHECK(gram_check(f, from_rows({{1, 1, 2, 2}})));  // 1+1+4+4 = 10 = 0
    CHECK(gram_check(f, from_rows({{2, 1}})));        // 4+1 = 0
    CHECK_FALSE(gram_check(f, from_rows({{1, 0}})));
    CHECK_FALSE(gram_check(f, from_rows({{1, 2}, {2, 1}})));  // off-diagonal 2+2 = 4
}

TEST_CASE("gram check agrees with exhaustive codeword products on tiny codes") {
    std::mt19937_64 rng(5);
    for (auto [p, m] : {std::pair{5u, 1u}, {7u, 1u}}) {
        Field f = Field::make(p, m);
        std::uniform_int_distribution<std::uint32_t> ed(0, (std::uint32_t)f.q() - 1);
        for (int it = 0; it < 40; ++it) {
            std::size_t n = 2 + it % 3, k = 1 + it % 2;
            GenMatrix g(k, n);
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = 0; c < n; ++c) g.at(r, c) = Elem{ed(rng)};

            // enumerate all q^k message vectors, pair up codewords
            std::vector<std::vector<Elem>> words;
            std::vector<std::uint32_t> msg(k, 0);
            while (true) {
                std::vector<Elem> w(n, f.zero());
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        w[c] = f.add(w[c], f.mul(Elem{msg[r]}, g.at(r, c)));
                words.push_back(std::move(w));
                std::size_t pos = 0;
                while (pos < k && msg[pos] == f.q() - 1) msg[pos++] = 0;
                if (pos == k) break;
                msg[pos]++;
            }
            bool all_zero = true;
            for (auto& w1 : words)
                for (auto& w2 : words) {
                    Elem acc = f.zero();
                    for (std::size_t c = 0; c < n; ++c) acc = f.add(acc, f.mul(w1[c], w2[c]));
                    all_zero = all_zero && acc.enc == 0;
                }
            REQUIRE(gram_check(f, g) == all_zero);
        }
    }
}

TEST_CASE("rank and dual dimension") {
    Field f = Field::make(5, 1);
    auto [r0, d0] = rank_and_dual_dim(f, from_rows({{0, 0, 0, 0}}));
    CHECK(r0 == 0);
    CHECK(d0 == 4);
    auto [r1, d1] = rank_and_dual_dim(f, from_rows({{1, 2}, {2, 4}}));
    CHECK(r1 == 1);
    CHECK(d1 == 1);
    auto [r2, d2] = rank_and_dual_dim(f, from_rows({{1, 0, 3}, {0, 2, 1}}));
    CHECK(r2 == 2);
    CHECK(d2 == 1);
}

TEST_CASE("mds check examples") {
    Field f = Field::make(5, 1);
    SUBCASE("repeated-ratio columns disproved with lexicographically smallest witness") {
        auto res = mds_check(f, from_rows({{1, 1, 0}, {0, 0, 1}}), MdsMode::exhaustive());
        REQUIRE(res.status == MdsStatus::disproved);
        REQUIRE(res.witness.has_value());
        CHECK(*res.witness == std::vector<std::uint32_t>{0, 1});
    }
    SUBCASE("identity-like full generator proved") {
        auto res = mds_check(f, from_rows({{1, 1, 1}, {0, 1, 2}}), MdsMode::exhaustive());
        CHECK(res.status == MdsStatus::proved);
    }
    SUBCASE("sampled mode never claims proved") {
        auto res = mds_check(f, from_rows({{1, 1, 1}, {0, 1, 2}}), MdsMode::sampled(200));
        CHECK(res.status == MdsStatus::sampled_consistent);
    }
    SUBCASE("skip") {
        CHECK(mds_check(f, from_rows({{1, 0}}), MdsMode::skip()).status == MdsStatus::skipped);
    }
    SUBCASE("budget") {
        GenMatrix wide(20, 40);
        for (std::size_t c = 0; c < 40; ++c)
            for (std::size_t r = 0; r < 20; ++r) wide.at(r, c) = Elem{(std::uint32_t)((c + r) % 5)};
        CHECK_THROWS_AS(mds_check(f, wide, MdsMode::exhaustive()), BudgetExceededError);
    }
}

TEST_CASE("random GRS codes are MDS (exhaustive column check)") {
    std::mt19937_64 rng(41);
    int samples = 0;
    for (auto [p, m] : {std::pair{5u, 1u}, {7u, 1u}, {3u, 2u}, {5u, 2u}, {7u, 2u}, {11u, 2u}}) {
        Field f = Field::make(p, m);
        std::vector<std::uint32_t> all(f.q());
        for (std::uint32_t i = 0; i < f.q(); ++i) all[i] = i;
        std::uniform_int_distribution<std::uint32_t> vd(1, (std::uint32_t)f.q() - 1);
        for (int it = 0; it < 85; ++it) {
            std::shuffle(all.begin(), all.end(), rng);
            std::uniform_int_distribution<std::size_t> nd(2, std::min<std::uint64_t>(f.q(), 12));
            std::size_t n = nd(rng);
            std::vector<Elem> a, v;
            for (std::size_t i = 0; i < n; ++i) {
                a.push_back(Elem{all[i]});
                v.push_back(Elem{vd(rng)});
            }
            std::uniform_int_distribution<std::uint32_t> kd(1, (std::uint32_t)n);
            GrsCode code(EvalPoints(f, a), Scaling(f, v), kd(rng), false);
            auto res = mds_check(f, generator_matrix(code), MdsMode::exhaustive());
            REQUIRE(res.status == MdsStatus::proved);
            ++samples;
        }
    }
    CHECK(samples >= 500);
}

TEST_CASE("full report composes the checks") {
    Field f = Field::make(5, 1);
    GrsCode code(EvalPoints(f, {Elem{1}}), Scaling(f, {Elem{2}}), 1, true);
    VerifyReport rep = full_report(code, MdsMode::exhaustive());
    CHECK(rep.gram_zero);
    CHECK(rep.rank == 1);
    CHECK(rep.dual_dim == 1);
    CHECK(rep.self_orthogonal);
    CHECK(rep.self_dual);
    CHECK_FALSE(rep.almost_self_dual);
    CHECK(rep.mds == MdsStatus::proved);
    CHECK(rep.rank + rep.dual_dim == code.length());
}
