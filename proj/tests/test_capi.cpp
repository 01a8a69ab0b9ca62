#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <vector>

#include "apntri.h"

namespace {

struct FieldGuard {
    apntri_field* fd = nullptr;
    ~FieldGuard() { apntri_field_free(fd); }
};

}  // namespace

TEST_CASE("field lifecycle and error codes") {
    FieldGuard g;
    CHECK(apntri_field_new(3, 1, 0, 1, &g.fd) == APNTRI_OK);
    CHECK(apntri_field_degree(g.fd) == 3);
    CHECK(apntri_field_frob_exponent(g.fd) == 1);
    CHECK(apntri_field_q(g.fd) == 2);
    CHECK(apntri_field_exp_d(g.fd) == 7);
    CHECK(apntri_field_modulus(g.fd) == 0xb);
    CHECK(apntri_field_order(g.fd) == 7);

    apntri_field* bad = nullptr;
    CHECK(apntri_field_new(4, 1, 0, 1, &bad) == APNTRI_ERR_GCD_VIOLATION);
    CHECK(bad == nullptr);
    CHECK(apntri_field_new(2, 1, 0, 0, &bad) == APNTRI_ERR_DEGREE_OUT_OF_RANGE);
    CHECK(apntri_field_new(3, 1, 0x9, 0, &bad) == APNTRI_ERR_NON_IRREDUCIBLE_MODULUS);
    CHECK(std::strcmp(apntri_strerror(APNTRI_OK), "ok") == 0);
    CHECK(apntri_strerror(APNTRI_ERR_GCD_VIOLATION) != nullptr);
}

TEST_CASE("element arithmetic across the boundary") {
    FieldGuard g;
    REQUIRE(apntri_field_new(3, 1, 0, 1, &g.fd) == APNTRI_OK);
    CHECK(apntri_add(g.fd, 0x5, 0x5) == 0);
    CHECK(apntri_mul(g.fd, 0x2, 0x4) == 0x3);  // alpha * alpha^2 mod T^3+T+1
    CHECK(apntri_frob(g.fd, 0x2) == 0x4);
    uint32_t inv = 0;
    CHECK(apntri_inv(g.fd, 0x1, &inv) == APNTRI_OK);
    CHECK(inv == 0x1);
    CHECK(apntri_inv(g.fd, 0, &inv) == APNTRI_ERR_DIVISION_BY_ZERO);
    CHECK(apntri_pow(g.fd, 0x2, 7) == 1);
    CHECK(apntri_trace(g.fd, 0) == 0);
    CHECK(apntri_trace(g.fd, 1) == 1);
    CHECK(apntri_artin_schreier_solvable(g.fd, 0) == 1);
    CHECK(apntri_artin_schreier_solvable(g.fd, 1) == 0);
}

TEST_CASE("roots and consistency") {
    FieldGuard g;
    REQUIRE(apntri_field_new(5, 1, 0, 1, &g.fd) == APNTRI_OK);
    uint32_t count = 0;
    CHECK(apntri_roots(g.fd, APNTRI_VARIANT_Q, 1, nullptr, 0, &count) == APNTRI_OK);
    CHECK(count == 0);

    // find a parameter with roots and fetch them
    for (uint32_t a = 2; a <= 31; ++a) {
        CHECK(apntri_roots(g.fd, APNTRI_VARIANT_Q, a, nullptr, 0, &count) == APNTRI_OK);
        if (count > 0) {
            std::vector<uint32_t> roots(count);
            CHECK(apntri_roots(g.fd, APNTRI_VARIANT_Q, a, roots.data(), roots.size(), &count) ==
                  APNTRI_OK);
            uint32_t val = 0;
            CHECK(apntri_variant_eval(g.fd, APNTRI_VARIANT_Q, a, roots[0], &val) == APNTRI_OK);
            CHECK(val == 0);
            uint32_t small = 0;
            CHECK(apntri_roots(g.fd, APNTRI_VARIANT_Q, a, roots.data(), 0, &small) ==
                  APNTRI_ERR_BUFFER_TOO_SMALL);
            break;
        }
    }
    CHECK(apntri_roots(g.fd, APNTRI_VARIANT_Q, 0, nullptr, 0, &count) ==
          APNTRI_ERR_ZERO_PARAMETER);

    int consistent = 0;
    for (uint32_t a = 1; a <= 31; ++a) {
        CHECK(apntri_variants_root_consistent(g.fd, a, &consistent) == APNTRI_OK);
        CHECK(consistent == 1);
    }
}

TEST_CASE("linearized and companion") {
    FieldGuard g;
    REQUIRE(apntri_field_new(7, 1, 0, 1, &g.fd) == APNTRI_OK);
    uint32_t dim = 0;
    CHECK(apntri_linearized_kernel_dim(g.fd, 1, &dim) == APNTRI_OK);
    CHECK(dim >= 1);
    int singular = 0;
    CHECK(apntri_companion_product_singular(g.fd, 1, &singular) == APNTRI_OK);
    CHECK(singular == 1);
}

TEST_CASE("family evaluation, differentials, classification") {
    FieldGuard g;
    REQUIRE(apntri_field_new(5, 1, 0, 1, &g.fd) == APNTRI_OK);
    uint32_t in[3] = {0, 0, 0}, out[3] = {9, 9, 9};
    CHECK(apntri_family_eval(g.fd, APNTRI_FAMILY_G, 1, in, out) == APNTRI_OK);
    CHECK((out[0] | out[1] | out[2]) == 0);

    uint32_t dir[3] = {1, 0, 0};
    uint64_t size = 0;
    CHECK(apntri_diff_kernel_size(g.fd, APNTRI_FAMILY_G, 1, dir, &size) == APNTRI_OK);
    CHECK(size == 2);
    uint32_t zero_dir[3] = {0, 0, 0};
    CHECK(apntri_diff_kernel_size(g.fd, APNTRI_FAMILY_G, 1, zero_dir, &size) ==
          APNTRI_ERR_ZERO_DIRECTION);

    int type = -1, exact = -1;
    uint64_t predicted = 0, measured = 0;
    uint32_t full[3] = {1, 1, 1};
    CHECK(apntri_classify_direction(g.fd, 1, full, &type, &predicted, &exact, &measured) ==
          APNTRI_OK);
    CHECK(type == APNTRI_DIR_TYPE3);
    CHECK(predicted == 2);
    CHECK(exact == 1);
    CHECK(measured == 2);

    uint32_t hval = 1;
    CHECK(apntri_h_poly(g.fd, 1, full, &hval) == APNTRI_OK);
    int ok = 0;
    CHECK(apntri_h_factorization_check(g.fd, 1, &ok) == APNTRI_OK);
    CHECK(ok == 1);
}

TEST_CASE("checkers, good sets, fiber stats") {
    FieldGuard g;
    REQUIRE(apntri_field_new(5, 1, 0, 1, &g.fd) == APNTRI_OK);
    int perm = 0;
    CHECK(apntri_is_permutation(g.fd, APNTRI_FAMILY_G, 1, 2, &perm) == APNTRI_OK);
    CHECK(perm == 1);
    int apn = 0;
    uint64_t mk = 0;
    uint32_t wit[3] = {0, 0, 0};
    CHECK(apntri_is_apn(g.fd, APNTRI_FAMILY_G, 1, APNTRI_METHOD_AUTO, 2, &apn, &mk, wit) ==
          APNTRI_OK);
    CHECK(apn == 1);
    CHECK(mk == 2);
    CHECK(apntri_is_apn(g.fd, APNTRI_FAMILY_G, 1, APNTRI_METHOD_ROOT, 2, &apn, &mk, wit) ==
          APNTRI_ERR_BAD_ARGUMENT);

    uint32_t count = 0;
    CHECK(apntri_good_set(g.fd, APNTRI_GOOD_ROOTSCAN, 2, nullptr, 0, &count) == APNTRI_OK);
    CHECK(count == 11);
    std::vector<uint32_t> buf(count);
    CHECK(apntri_good_set(g.fd, APNTRI_GOOD_GIMAGE, 2, buf.data(), buf.size(), &count) ==
          APNTRI_OK);
    CHECK(count == 11);
    CHECK(buf[0] == 1);  // sorted by encoding, a=1 is good here

    double value = 0;
    int64_t ceiling = 0;
    CHECK(apntri_lower_bound(g.fd, &value, &ceiling) == APNTRI_OK);
    CHECK(value < 0);

    size_t n_classes = 0;
    apntri_fiber_summary sum{};
    CHECK(apntri_fiber_stats(g.fd, 1, 2, nullptr, 0, &n_classes, &sum) == APNTRI_OK);
    CHECK(n_classes >= 2);
    std::vector<apntri_fiber_class> classes(n_classes);
    CHECK(apntri_fiber_stats(g.fd, 1, 2, classes.data(), classes.size(), &n_classes, &sum) ==
          APNTRI_OK);
    uint64_t total = 0;
    for (const auto& c : classes) total += c.value_count;
    CHECK(total == 32);
    CHECK(sum.good_count == 11);
    CHECK(sum.has_gamma_direct == 1);
    CHECK(sum.gamma_direct == sum.gamma_fiber);
}

TEST_CASE("equivalence via the C surface") {
    FieldGuard g;
    REQUIRE(apntri_field_new(5, 1, 0, 1, &g.fd) == APNTRI_OK);
    int holds = 0;
    CHECK(apntri_diag_criterion(g.fd, 1, &holds) == APNTRI_OK);
    CHECK(holds == 1);
    uint64_t sub = 0;
    CHECK(apntri_d0(g.fd, &sub) == APNTRI_OK);
    CHECK(sub == 1);

    int found = 0;
    uint32_t w[6] = {0};
    CHECK(apntri_diag_search(g.fd, APNTRI_FAMILY_G, 1, &found, w) == APNTRI_OK);
    CHECK(found == 1);
    CHECK(w[3] == 1);  // identity witness

    apntri_equiv_report rep{};
    CHECK(apntri_el_search(g.fd, APNTRI_FAMILY_G, 1, APNTRI_FAMILY_G, 1, 0, &rep) == APNTRI_OK);
    CHECK(rep.result == APNTRI_EQUIV_EQUIVALENT);
    CHECK(rep.maps_searched == 1);
    CHECK(rep.monomial_scope_only == 0);

    CHECK(apntri_el_search(g.fd, APNTRI_FAMILY_G, 1, APNTRI_FAMILY_H, 1, 50, &rep) == APNTRI_OK);
    CHECK(rep.result == APNTRI_EQUIV_BUDGET_EXCEEDED);
    CHECK(rep.maps_searched == 50);
}
