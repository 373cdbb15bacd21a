#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "grsdual/gf.hpp"

using namespace grsdual;

namespace {

// Odd prime powers p^m <= bound, as (p, m) pairs.
std::vector<std::pair<std::uint32_t, std::uint32_t>> odd_prime_powers(std::uint64_t bound) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p = 3; p <= bound; p += 2) {
        if (!is_prime(p)) continue;
        std::uint64_t q = p;
        std::uint32_t m = 1;
        while (q <= bound) {
            out.emplace_back(p, m);
            q *= p;
            ++m;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("canonical field for GF(5)") {
    Field f = Field::make(5, 1);
    CHECK(f.q() == 5);
    CHECK(f.modulus() == std::vector<std::uint32_t>{0, 1});  // modulus x: the prime field itself
    // 2 is the smallest primitive root mod 5 (2^1=2, 2^2=4, 2^4=1)
    CHECK(f.g() == Elem{2});
}

TEST_CASE("canonical field for GF(9)") {
    Field f = Field::make(3, 2);
    CHECK(f.q() == 9);
    // x^2 + 1 is the lex-smallest monic irreducible over GF(3)
    CHECK(f.modulus() == std::vector<std::uint32_t>{1, 0, 1});
    // x + 1 (encoding 4) has order 8; encodings 2 and 3 have orders 2 and 4
    CHECK(f.g() == Elem{4});
}

TEST_CASE("make_field rejects bad parameters") {
    CHECK_THROWS_AS(Field::make(2, 1), std::invalid_argument);   // p must be odd
    CHECK_THROWS_AS(Field::make(9, 1), std::invalid_argument);   // p must be prime
    CHECK_THROWS_AS(Field::make(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(3, 13), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(251, 4), std::invalid_argument);  // 251^4 > 2^26
}

TEST_CASE("arithmetic examples") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.mul(Elem{2}, Elem{3}) == Elem{1});  // 6 mod 5
    CHECK_THROWS_AS(f5.inv(Elem{0}), std::domain_error);

    Field f9 = Field::make(3, 2);
    // x * x = x^2 = -1 = 2 under modulus x^2 + 1
    CHECK(f9.mul(Elem{3}, Elem{3}) == Elem{2});
}

TEST_CASE("discrete log examples") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.dlog(Elem{1}) == 0);
    CHECK(f5.dlog(Elem{3}) == 3);  // 2^3 = 8 = 3
    CHECK_THROWS_AS(f5.dlog(Elem{0}), std::domain_error);

    Field f9 = Field::make(3, 2);
    CHECK(f9.dlog(Elem{2}) == 4);  // (x+1)^4 = -1 = 2
}

TEST_CASE("quadratic residue examples") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.is_qr(Elem{4}));
    CHECK(f5.is_qr(Elem{1}));
    CHECK_FALSE(f5.is_qr(Elem{2}));  // QR_5 = {1, 4}
    CHECK_FALSE(f5.is_qr(Elem{3}));
    CHECK_FALSE(f5.is_qr(Elem{0}));  // zero is not a nonzero square
}

TEST_CASE("canonical square roots") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.sqrt(Elem{4}) == Elem{2});  // roots {2, 3}, canonical minimum
    CHECK(f5.sqrt(Elem{0}) == Elem{0});
    CHECK_THROWS_AS(f5.sqrt(Elem{2}), std::domain_error);
}

TEST_CASE("pow conventions") {
    Field f5 = Field::make(5, 1);
    CHECK(f5.pow(Elem{0}, 0) == Elem{1});
    CHECK(f5.pow(Elem{0}, 3) == Elem{0});
    CHECK_THROWS_AS(f5.pow(Elem{0}, -1), std::domain_error);
    CHECK(f5.pow(Elem{2}, -1) == Elem{3});
    CHECK(f5.pow(Elem{3}, 1000000007) == Elem{2});  // 3^(1e9+7) = 3^3 = 27 = 2 mod 5
    CHECK(f5.g_pow(-3) == f5.inv(f5.g_pow(3)));
}

TEST_CASE("dlog is a homomorphism onto Z/(q-1)") {
    for (auto [p, m] : {std::pair{5u, 1u}, {3u, 2u}, {5u, 2u}, {7u, 2u}}) {
        Field f = Field::make(p, m);
        std::uint64_t ord = f.order();
        for (std::uint64_t x = 1; x < f.q(); ++x) {
            CHECK(f.g_pow(f.dlog(Elem{(std::uint32_t)x})) == Elem{(std::uint32_t)x});
            for (std::uint64_t y = 1; y < f.q(); ++y) {
                Elem prod = f.mul(Elem{(std::uint32_t)x}, Elem{(std::uint32_t)y});
                CHECK((f.dlog(Elem{(std::uint32_t)x}) + f.dlog(Elem{(std::uint32_t)y})) % ord ==
                      f.dlog(prod));
            }
        }
    }
}

TEST_CASE("is_qr agrees with the Euler criterion; residues have exactly two roots") {
    for (auto [p, m] : odd_prime_powers(3000)) {
        Field f = Field::make(p, m);
        std::uint64_t half = f.order() / 2;
        std::uint64_t residues = 0;
        for (std::uint64_t x = 1; x < f.q(); ++x) {
            Elem e{(std::uint32_t)x};
            bool euler = f.pow(e, (std::int64_t)half) == f.one();
            REQUIRE(f.is_qr(e) == euler);
            if (f.is_qr(e)) {
                ++residues;
                Elem w = f.sqrt(e);
                REQUIRE(f.mul(w, w) == e);
                REQUIRE(w.enc <= f.neg(w).enc);
            }
        }
        // squaring is 2-to-1 on nonzero elements
        REQUIRE(residues == half);
    }
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
    for (auto [p, m] : odd_prime_powers(49)) {
        Field f = Field::make(p, m);
        std::uint32_t q = (std::uint32_t)f.q();
        for (std::uint32_t a = 0; a < q; ++a) {
            Elem ea{a};
            REQUIRE(f.add(ea, f.neg(ea)) == f.zero());
            REQUIRE(f.add(ea, f.zero()) == ea);
            REQUIRE(f.mul(ea, f.one()) == ea);
            if (a != 0) REQUIRE(f.mul(ea, f.inv(ea)) == f.one());
            for (std::uint32_t b = 0; b < q; ++b) {
                Elem eb{b};
                REQUIRE(f.add(ea, eb) == f.add(eb, ea));
                REQUIRE(f.mul(ea, eb) == f.mul(eb, ea));
                for (std::uint32_t c = 0; c < q; ++c) {
                    Elem ec{c};
                    REQUIRE(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)));
                    REQUIRE(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)));
                    REQUIRE(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
                }
            }
        }
    }
}

TEST_CASE("field axioms hold on sampled triples for larger fields") {
    std::mt19937_64 rng(7);
    for (auto [p, m] : {std::pair{11u, 2u}, {13u, 2u}, {3u, 6u}}) {
        Field f = Field::make(p, m);
        std::uniform_int_distribution<std::uint64_t> dist(0, f.q() - 1);
        for (int it = 0; it < 10000; ++it) {
            Elem a{(std::uint32_t)dist(rng)}, b{(std::uint32_t)dist(rng)}, c{(std::uint32_t)dist(rng)};
            REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.sub(a, b) == f.neg(f.sub(b, a)));
        }
    }
}

TEST_CASE("make_field is deterministic") {
    Field a = Field::make(7, 2);
    Field b = Field::make(7, 2);
    CHECK(a.same_spec(b));
    for (std::uint64_t x = 1; x < a.q(); ++x) CHECK(a.dlog(Elem{(std::uint32_t)x}) == b.dlog(Elem{(std::uint32_t)x}));
}

TEST_CASE("from_spec validates the model") {
    Field f = Field::from_spec(3, 2, {1, 0, 1}, 4);
    CHECK(f.same_spec(Field::make(3, 2)));
    // x^2 + 2 = (x-1)(x+1) over GF(3): reducible
    CHECK_THROWS_AS(Field::from_spec(3, 2, {2, 0, 1}, 4), std::invalid_argument);
    // encoding 2 is -1, order 2: not primitive
    CHECK_THROWS_AS(Field::from_spec(3, 2, {1, 0, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field::from_spec(3, 2, {1, 0, 2}, 4), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(Field::from_spec(3, 2, {1, 0, 1}, 0), std::invalid_argument);
}
