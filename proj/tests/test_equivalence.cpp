#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "equivalence.hpp"
#include "params.hpp"
#include "univariate.hpp"

using namespace apntri;

namespace {

bool maps_agree_on_samples(const Field& fd, const QuadForm3& f, const MonomialMap& inner,
                           const MonomialMap& outer, const QuadForm3& g, int samples,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto r = [&] { return fd.from_bits(static_cast<uint32_t>(rng() % (fd.order() + 1))); };
    for (int k = 0; k < samples; ++k) {
        Triple v{r(), r(), r()};
        Triple lhs = apply_monomial(fd, outer, eval(fd, f, apply_monomial(fd, inner, v)));
        Triple rhs = eval(fd, g, v);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool maps_agree_everywhere(const Field& fd, const QuadForm3& f, const MonomialMap& inner,
                           const MonomialMap& outer, const QuadForm3& g) {
    for (uint32_t idx = 0; idx < (1u << (3 * fd.degree())); ++idx) {
        Triple v = unpack(fd, idx);
        Triple lhs = apply_monomial(fd, outer, eval(fd, f, apply_monomial(fd, inner, v)));
        if (!(lhs == eval(fd, g, v))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("diagonal criterion and the subgroup order") {
    Field f3(3, 1, 0, true);
    for (uint32_t av = 1; av <= f3.order(); ++av)
        CHECK(diag_criterion(f3, f3.from_bits(av)));  // a^7 = 1 for all of F_8^*
    CHECK(d0(f3) == 7);

    Field f5(5, 1, 0, true);
    CHECK(d0(f5) == 1);
    for (uint32_t av = 1; av <= f5.order(); ++av)
        CHECK(diag_criterion(f5, f5.from_bits(av)) == (av == 1));

    Field f93(9, 3);  // gcd(3,9) != 1: outside theorem scope, subgroup math still fine
    CHECK(d0(f93) == 73);

    // #criterion holders == d0
    for (auto [m, i] : {std::pair<unsigned, unsigned>{3, 1}, {5, 1}, {7, 1}, {9, 1}}) {
        Field fd(m, i, 0, true);
        uint64_t holders = 0;
        for (uint32_t av = 1; av <= fd.order(); ++av)
            if (diag_criterion(fd, fd.from_bits(av))) ++holders;
        CHECK(holders == d0(fd));
    }
    uint64_t holders93 = 0;
    for (uint32_t av = 1; av <= f93.order(); ++av)
        if (diag_criterion(f93, f93.from_bits(av))) ++holders93;
    CHECK(holders93 == 73);
}

namespace {

// evaluation-level witness check, independent of the symbolic composition
bool diag_witness_agrees_by_evaluation(const Field& fd, Family fam, Fe a, const DiagWitness& w,
                                       int samples, std::uint64_t seed) {
    QuadForm3 fa = make_family(fd, fam, a);
    QuadForm3 f1 = make_family(fd, fam, fd.one());
    MonomialMap inner = identity_map(fd), outer = identity_map(fd);
    inner.scalars = {w.l1, w.l2, w.l3};
    outer.scalars = {w.mu, w.nu, w.rho};
    if (samples == 0) {  // all inputs
        for (uint32_t idx = 0; idx < (1u << (3 * fd.degree())); ++idx) {
            Triple v = unpack(fd, idx);
            if (!(apply_monomial(fd, outer, eval(fd, fa, apply_monomial(fd, inner, v))) ==
                  eval(fd, f1, v)))
                return false;
        }
        return true;
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
        Triple v = unpack(fd, static_cast<uint32_t>(rng() % (1u << (3 * fd.degree()))));
        if (!(apply_monomial(fd, outer, eval(fd, fa, apply_monomial(fd, inner, v))) ==
              eval(fd, f1, v)))
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("diagonal search at m=3 finds verified witnesses for every a") {
    Field fd(3, 1, 0, true);
    for (uint32_t av = 1; av <= fd.order(); ++av) {
        Fe a = fd.from_bits(av);
        for (Family fam : {Family::G, Family::H}) {
            auto w = diag_search(fd, fam, a);
            REQUIRE(w.has_value());
            CHECK(verify_diag_witness(fd, fam, a, *w));
            CHECK(diag_witness_agrees_by_evaluation(fd, fam, a, *w, 0, 0));
        }
    }
    // sampled evaluation re-verification at m=5
    Field f5(5, 1, 0, true);
    for (Family fam : {Family::G, Family::H}) {
        auto w = diag_search(f5, fam, f5.one());
        REQUIRE(w.has_value());
        CHECK(diag_witness_agrees_by_evaluation(f5, fam, f5.one(), *w, 10000, 31337));
    }
}

TEST_CASE("diagonal search at m=5 matches the criterion") {
    Field fd(5, 1, 0, true);
    auto w1 = diag_search(fd, Family::G, fd.one());
    REQUIRE(w1.has_value());
    // the identity witness comes first in enumeration order
    CHECK(w1->l1.v == 1);
    CHECK(w1->l2.v == 1);
    CHECK(w1->l3.v == 1);
    CHECK(w1->mu.v == 1);
    CHECK(w1->nu.v == 1);
    CHECK(w1->rho.v == 1);

    CHECK(!diag_search(fd, Family::G, fd.from_bits(2)).has_value());
    CHECK(!diag_search(fd, Family::H, fd.from_bits(7)).has_value());
}

TEST_CASE("diagonal search at m=7, sampled parameters") {
    Field fd(7, 1, 0, true);
    // d0 = gcd(7,127) = 1, so only a=1 can have a witness
    auto w = diag_search(fd, Family::G, fd.one());
    REQUIRE(w.has_value());
    CHECK(verify_diag_witness(fd, Family::G, fd.one(), *w));
    std::mt19937_64 rng(11);
    int checked = 0;
    while (checked < 20) {
        uint32_t av = 2 + static_cast<uint32_t>(rng() % (fd.order() - 1));
        Fe a = fd.from_bits(av);
        CHECK(!diag_criterion(fd, a));
        CHECK(!diag_search(fd, Family::H, a).has_value());
        ++checked;
    }
}

TEST_CASE("the closed-form witness works whenever the criterion holds") {
    for (auto [m, i] : {std::pair<unsigned, unsigned>{3, 1}, {9, 1}, {9, 3}}) {
        Field fd(m, i);
        for (uint32_t av = 1; av <= fd.order(); ++av) {
            Fe a = fd.from_bits(av);
            if (!diag_criterion(fd, a)) continue;
            for (Family fam : {Family::G, Family::H}) {
                DiagWitness w = diag_recipe(fd, fam, a, fd.one());
                CHECK(verify_diag_witness(fd, fam, a, w));
            }
        }
    }
}

TEST_CASE("monomial composition basics") {
    Field fd(5, 1, 0, true);
    Fe a = fd.from_bits(0x9);
    QuadForm3 g = make_G(fd, a);

    auto same = compose_monomial(fd, g, identity_map(fd), identity_map(fd));
    REQUIRE(same.has_value());
    CHECK(*same == g);

    // pure diagonal inner map: coefficients pick up lambda_i^q * lambda_j
    MonomialMap diag = identity_map(fd);
    diag.scalars = {fd.from_bits(3), fd.from_bits(0x1f), fd.from_bits(7)};
    auto composed = compose_monomial(fd, g, diag, identity_map(fd));
    REQUIRE(composed.has_value());
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Fe want = fd.mul(g.c[k][i][j], fd.mul(fd.frob(diag.scalars[i]), diag.scalars[j]));
                CHECK(composed->c[k][i][j] == want);
            }

    // a global twist composed with its inverse twist stays in pattern and
    // matches pointwise evaluation
    for (unsigned t = 1; t < fd.degree(); ++t) {
        MonomialMap inner = identity_map(fd);
        inner.twists = {t, t, t};
        MonomialMap outer = identity_map(fd);
        unsigned u = fd.degree() - t;
        outer.twists = {u, u, u};
        auto tw = compose_monomial(fd, g, inner, outer);
        REQUIRE(tw.has_value());
        CHECK(maps_agree_on_samples(fd, g, inner, outer, *tw, 1000, 1234 + t));
    }

    // a lone twist breaks the bidegree pattern
    MonomialMap broken = identity_map(fd);
    broken.twists = {1, 0, 0};
    CHECK(!compose_monomial(fd, g, broken, identity_map(fd)).has_value());
}

TEST_CASE("EL monomial search: identity and self-equivalence") {
    Field fd(5, 1, 0, true);
    QuadForm3 g1 = make_G(fd, fd.one());
    auto rep = el_equiv_monomial_search(fd, g1, g1);
    CHECK(rep.result == EquivResult::Equivalent);
    CHECK(rep.maps_searched == 1);
    CHECK(maps_agree_on_samples(fd, g1, rep.inner, rep.outer, g1, 10000, 77));

    // at m=3 every parameter is diagonally equivalent to a=1
    Field f3(3, 1, 0, true);
    QuadForm3 f = make_G(f3, f3.from_bits(5));
    QuadForm3 g = make_G(f3, f3.one());
    auto rep3 = el_equiv_monomial_search(f3, f, g);
    REQUIRE(rep3.result == EquivResult::Equivalent);
    CHECK(maps_agree_everywhere(f3, f, rep3.inner, rep3.outer, g));
}

TEST_CASE("EL monomial search: budget is reported distinctly") {
    Field fd(5, 1, 0, true);
    auto rep = el_equiv_monomial_search(fd, make_G(fd, fd.one()), make_H(fd, fd.one()), 100);
    CHECK(rep.result == EquivResult::BudgetExceeded);
    CHECK(rep.maps_searched == 100);
}

TEST_CASE("EL monomial search: good non-unity parameters are not equivalent to G_1") {
    Field fd(5, 1, 0, true);
    auto good = good_set_gimage(fd);
    Fe a = fd.zero();
    for (Fe g : good.good)
        if (!fd.is_one(g)) {
            a = g;
            break;
        }
    REQUIRE(a.v != 0);
    auto rep = el_equiv_monomial_search(fd, make_G(fd, a), make_G(fd, fd.one()));
    CHECK(rep.result == EquivResult::Inequivalent);
}

TEST_CASE("restriction hypotheses") {
    CHECK(monomial_restriction_applies(3));
    CHECK(monomial_restriction_applies(5));
    CHECK(monomial_restriction_applies(9));
    CHECK(!monomial_restriction_applies(4));
    CHECK(!monomial_restriction_applies(6));
    CHECK(!monomial_restriction_applies(7));
    CHECK(!monomial_restriction_applies(14));
    CHECK(!monomial_restriction_applies(21));

    Field f9(9, 1, 0, true);
    CHECK_THROWS_AS(
        el_equiv_monomial_search(f9, make_G(f9, f9.one()), make_H(f9, f9.one())), error);
}
