#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "field.hpp"

using namespace apntri;

namespace {

// independent oracle: a cubic over F_2 is irreducible iff it has no root
uint32_t smallest_irreducible_cubic_by_roots() {
    for (uint32_t p = 0b1000; p < 0b10000; ++p) {
        bool at0 = (p & 1) != 0;                 // p(0) = constant term
        bool at1 = (__builtin_popcount(p) & 1);  // p(1) = parity of coefficients
        if (at0 && at1) return p;
    }
    return 0;
}

}  // namespace

TEST_CASE("context construction") {
    Field f31(3, 1);
    CHECK(f31.modulus() == 0xb);
    CHECK(f31.modulus() == smallest_irreducible_cubic_by_roots());
    CHECK(f31.q() == 2);
    CHECK(f31.order() == 7);
    CHECK(modulus_hex(f31) == "0xb");

    Field f52(5, 2, 0, true);
    CHECK(f52.q() == 4);
    CHECK(f52.exp_d() == 21);

    CHECK_THROWS_AS(Field(3, 3, 0, true), error);
    try {
        Field(3, 3, 0, true);
    } catch (const error& e) {
        CHECK(e.code() == errc::gcd_violation);
    }
    CHECK_THROWS_AS(Field(4, 1, 0, true), error);   // even m in theorem mode
    CHECK_THROWS_AS(Field(2, 1), error);            // degree out of range
    CHECK_THROWS_AS(Field(25, 1), error);
    CHECK_THROWS_AS(Field(5, 1, 0x2a), error);      // even constant term: reducible
    CHECK_NOTHROW(Field(4, 1));                     // even m fine for raw arithmetic

    // modulus override with a different irreducible polynomial
    Field alt(3, 1, 0b1101);
    CHECK(alt.modulus() == 0xd);
}

TEST_CASE("irreducibility test agrees with exhaustive factor search") {
    for (unsigned m = 3; m <= 10; ++m) {
        for (uint32_t p = 1u << m; p < (2u << m); ++p) {
            bool has_factor = false;
            for (uint32_t q = 2; q < (1u << m) && !has_factor; ++q) {
                if ((32 - __builtin_clz(q) - 1) > static_cast<int>(m / 2)) break;
                // polynomial long division
                uint32_t r = p;
                int dq = 31 - __builtin_clz(q);
                while (r != 0 && 31 - __builtin_clz(r) >= dq)
                    r ^= q << ((31 - __builtin_clz(r)) - dq);
                if (r == 0) has_factor = true;
            }
            CHECK(Field::is_irreducible(p, m) == !has_factor);
        }
        if (m > 4) break;  // full sweep for m=3,4 is plenty
    }
}

TEST_CASE("field axioms, exhaustive at m=3") {
    Field fd(3, 1);
    Fe one = fd.one();
    for (uint32_t x = 0; x <= fd.order(); ++x)
        for (uint32_t y = 0; y <= fd.order(); ++y) {
            Fe a = fd.from_bits(x), b = fd.from_bits(y);
            CHECK(fd.add(a, b) == fd.add(b, a));
            CHECK(fd.mul(a, b) == fd.mul(b, a));
            CHECK(fd.add(a, a).v == 0);  // characteristic 2
            for (uint32_t z = 0; z <= fd.order(); ++z) {
                Fe c = fd.from_bits(z);
                CHECK(fd.mul(fd.mul(a, b), c) == fd.mul(a, fd.mul(b, c)));
                CHECK(fd.mul(a, fd.add(b, c)) == fd.add(fd.mul(a, b), fd.mul(a, c)));
            }
        }
    for (uint32_t x = 1; x <= fd.order(); ++x) {
        Fe a = fd.from_bits(x);
        CHECK(fd.mul(a, fd.inv(a)) == one);
    }
    CHECK(fd.inv(one) == one);
    CHECK_THROWS_AS(fd.inv(fd.zero()), error);
}

TEST_CASE("field axioms, sampled at m=5 and m=17") {
    for (unsigned m : {5u, 17u}) {
        Field fd(m, 1);
        std::mt19937_64 rng(42);
        auto rnd = [&] { return fd.from_bits(static_cast<uint32_t>(rng() % (fd.order() + 1))); };
        for (int k = 0; k < 100000; ++k) {
            Fe a = rnd(), b = rnd(), c = rnd();
            CHECK(fd.mul(fd.mul(a, b), c) == fd.mul(a, fd.mul(b, c)));
            CHECK(fd.mul(a, fd.add(b, c)) == fd.add(fd.mul(a, b), fd.mul(a, c)));
            if (a.v != 0) CHECK(fd.mul(a, fd.inv(a)) == fd.one());
        }
    }
}

TEST_CASE("known products at m=3") {
    Field fd(3, 1);
    Fe alpha = fd.from_bits(0x2);
    Fe alpha2 = fd.from_bits(0x4);
    CHECK(fd.mul(alpha, alpha2).v == 0x3);  // alpha^3 = alpha + 1 mod T^3+T+1
    CHECK(to_hex(fd.mul(alpha, alpha2)) == "0x3");
    CHECK(fd.frob(alpha) == alpha2);        // squaring at i=1
}

TEST_CASE("frobenius is a bijection of order m") {
    for (auto [m, i] : {std::pair<unsigned, unsigned>{3, 1}, {5, 1}, {5, 2}, {7, 2}}) {
        Field fd(m, i, 0, true);
        CHECK(fd.frob(fd.zero()).v == 0);
        CHECK(fd.frob(fd.one()).v == 1);
        std::vector<bool> seen(fd.order() + 1, false);
        for (uint32_t x = 0; x <= fd.order(); ++x) {
            Fe y = fd.frob(fd.from_bits(x));
            CHECK(!seen[y.v]);
            seen[y.v] = true;
            // frob iterated m times is the identity
            Fe it = fd.from_bits(x);
            for (unsigned k = 0; k < m; ++k) it = fd.frob(it);
            CHECK(it.v == x);
        }
    }
}

TEST_CASE("absolute trace") {
    for (unsigned m : {3u, 5u, 7u}) {
        Field fd(m, 1, 0, true);
        CHECK(fd.trace(fd.zero()) == 0);
        CHECK(fd.trace(fd.one()) == 1);  // m odd
        uint64_t zeros = 0;
        for (uint32_t x = 0; x <= fd.order(); ++x) {
            Fe a = fd.from_bits(x);
            if (fd.trace(a) == 0) ++zeros;
            CHECK(fd.trace(fd.sqr(a)) == fd.trace(a));
            for (uint32_t y = 0; y <= fd.order(); ++y) {
                Fe b = fd.from_bits(y);
                CHECK(fd.trace(fd.add(a, b)) == (fd.trace(a) ^ fd.trace(b)));
            }
            if (m == 7 && x > 40) break;  // the full 128x128 sweep is covered at m=3,5
        }
        if (m < 7) CHECK(zeros == (1ull << (m - 1)));
    }
}

TEST_CASE("artin-schreier solvability matches exhaustive search") {
    for (auto [m, i] : {std::pair<unsigned, unsigned>{3, 1}, {5, 1}, {5, 2}, {7, 1}}) {
        Field fd(m, i, 0, true);
        CHECK(fd.artin_schreier_solvable(fd.zero()));  // t = 0
        for (uint32_t c = 0; c <= fd.order(); ++c) {
            Fe cc = fd.from_bits(c);
            bool solvable = false;
            for (uint32_t t = 0; t <= fd.order() && !solvable; ++t) {
                Fe tt = fd.from_bits(t);
                if (fd.add(fd.frob(tt), tt) == cc) solvable = true;
            }
            CHECK(fd.artin_schreier_solvable(cc) == solvable);
        }
    }
    Field f51(5, 1, 0, true);
    CHECK(!f51.artin_schreier_solvable(f51.one()));  // m odd
}

TEST_CASE("pow agrees with repeated multiplication") {
    Field fd(5, 1);
    for (uint32_t x = 1; x <= fd.order(); ++x) {
        Fe a = fd.from_bits(x);
        Fe acc = fd.one();
        for (unsigned e = 0; e <= 40; ++e) {
            CHECK(fd.pow(a, e) == acc);
            acc = fd.mul(acc, a);
        }
        CHECK(fd.pow(a, fd.order()).v == 1);  // Lagrange
    }
}
