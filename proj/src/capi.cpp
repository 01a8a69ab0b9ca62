#include "apntri.h"

#include <new>

#include "checkers.hpp"
#include "equivalence.hpp"
#include "field.hpp"
#include "params.hpp"
#include "trivariate.hpp"
#include "univariate.hpp"

using namespace apntri;

struct apntri_field {
    Field fd;
};

namespace {

apntri_status to_status(errc c) { return static_cast<apntri_status>(c); }

template <typename Fn>
apntri_status guarded(Fn&& fn) {
    try {
        fn();
        return APNTRI_OK;
    } catch (const error& e) {
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        return APNTRI_ERR_FIELD_TOO_LARGE;
    } catch (...) {
        return APNTRI_ERR_BAD_ARGUMENT;
    }
}

PolyVariant to_variant(int v) {
    switch (v) {
        case APNTRI_VARIANT_P: return PolyVariant::P;
        case APNTRI_VARIANT_PPRIME: return PolyVariant::Pprime;
        case APNTRI_VARIANT_Q: return PolyVariant::Q;
        case APNTRI_VARIANT_QQ: return PolyVariant::Qq;
        case APNTRI_VARIANT_R: return PolyVariant::R;
        case APNTRI_VARIANT_S: return PolyVariant::S;
    }
    throw error(errc::bad_argument, "unknown variant");
}

Family to_family(int f) {
    if (f == APNTRI_FAMILY_G) return Family::G;
    if (f == APNTRI_FAMILY_H) return Family::H;
    throw error(errc::bad_argument, "unknown family");
}

Triple to_triple(const Field& fd, const uint32_t v[3]) {
    return Triple{fd.from_bits(v[0]), fd.from_bits(v[1]), fd.from_bits(v[2])};
}

}  // namespace

extern "C" {

const char* apntri_strerror(apntri_status s) {
    switch (s) {
        case APNTRI_OK: return "ok";
        case APNTRI_ERR_DEGREE_OUT_OF_RANGE: return "extension degree out of range";
        case APNTRI_ERR_NON_IRREDUCIBLE_MODULUS: return "modulus not irreducible";
        case APNTRI_ERR_GCD_VIOLATION: return "theorem mode requires odd m and gcd(i,m)=1";
        case APNTRI_ERR_ZERO_PARAMETER: return "parameter a must be nonzero";
        case APNTRI_ERR_ZERO_DIRECTION: return "direction must be nonzero";
        case APNTRI_ERR_DIVISION_BY_ZERO: return "division by zero";
        case APNTRI_ERR_FIELD_TOO_LARGE: return "field too large for this operation";
        case APNTRI_ERR_BUDGET_EXCEEDED: return "budget exceeded";
        case APNTRI_ERR_BAD_ARGUMENT: return "bad argument";
        case APNTRI_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    }
    return "unknown status";
}

apntri_status apntri_field_new(uint32_t m, uint32_t i, uint32_t modulus, int theorem_mode,
                               apntri_field** out) {
    if (out == nullptr) return APNTRI_ERR_BAD_ARGUMENT;
    *out = nullptr;
    return guarded([&] { *out = new apntri_field{Field(m, i, modulus, theorem_mode != 0)}; });
}

void apntri_field_free(apntri_field* fd) { delete fd; }

uint32_t apntri_field_degree(const apntri_field* fd) { return fd->fd.degree(); }
uint32_t apntri_field_frob_exponent(const apntri_field* fd) { return fd->fd.frob_exponent(); }
uint64_t apntri_field_q(const apntri_field* fd) { return fd->fd.q(); }
uint64_t apntri_field_exp_d(const apntri_field* fd) { return fd->fd.exp_d(); }
uint32_t apntri_field_modulus(const apntri_field* fd) { return fd->fd.modulus(); }
uint64_t apntri_field_order(const apntri_field* fd) { return fd->fd.order(); }

uint32_t apntri_add(const apntri_field* fd, uint32_t x, uint32_t y) {
    return fd->fd.bits(fd->fd.add(fd->fd.from_bits(x), fd->fd.from_bits(y)));
}

uint32_t apntri_mul(const apntri_field* fd, uint32_t x, uint32_t y) {
    return fd->fd.bits(fd->fd.mul(fd->fd.from_bits(x), fd->fd.from_bits(y)));
}

apntri_status apntri_inv(const apntri_field* fd, uint32_t x, uint32_t* out) {
    return guarded([&] { *out = fd->fd.bits(fd->fd.inv(fd->fd.from_bits(x))); });
}

uint32_t apntri_pow(const apntri_field* fd, uint32_t x, uint64_t e) {
    return fd->fd.bits(fd->fd.pow(fd->fd.from_bits(x), e));
}

uint32_t apntri_frob(const apntri_field* fd, uint32_t x) {
    return fd->fd.bits(fd->fd.frob(fd->fd.from_bits(x)));
}

int apntri_trace(const apntri_field* fd, uint32_t x) {
    return fd->fd.trace(fd->fd.from_bits(x));
}

int apntri_artin_schreier_solvable(const apntri_field* fd, uint32_t c) {
    return fd->fd.artin_schreier_solvable(fd->fd.from_bits(c)) ? 1 : 0;
}

apntri_status apntri_variant_eval(const apntri_field* fd, int variant, uint32_t a, uint32_t t,
                                  uint32_t* out) {
    return guarded([&] {
        *out = fd->fd.bits(
            eval_variant(fd->fd, to_variant(variant), fd->fd.from_bits(a), fd->fd.from_bits(t)));
    });
}

apntri_status apntri_roots(const apntri_field* fd, int variant, uint32_t a, uint32_t* roots,
                           size_t cap, uint32_t* count) {
    return guarded([&] {
        RootReport rep = roots_in_field(fd->fd, to_variant(variant), fd->fd.from_bits(a));
        *count = static_cast<uint32_t>(rep.count());
        if (roots != nullptr) {
            if (cap < rep.count()) throw error(errc::buffer_too_small, "root buffer too small");
            for (std::size_t k = 0; k < rep.count(); ++k) roots[k] = fd->fd.bits(rep.roots[k]);
        }
    });
}

apntri_status apntri_variants_root_consistent(const apntri_field* fd, uint32_t a,
                                              int* consistent) {
    return guarded(
        [&] { *consistent = variants_root_consistent(fd->fd, fd->fd.from_bits(a)) ? 1 : 0; });
}

apntri_status apntri_linearized_kernel_dim(const apntri_field* fd, uint32_t a, uint32_t* dim) {
    return guarded([&] { *dim = linearized_kernel_dim(fd->fd, fd->fd.from_bits(a)); });
}

apntri_status apntri_companion_product_singular(const apntri_field* fd, uint32_t a,
                                                int* singular) {
    return guarded(
        [&] { *singular = companion_product_singular(fd->fd, fd->fd.from_bits(a)) ? 1 : 0; });
}

apntri_status apntri_family_eval(const apntri_field* fd, int family, uint32_t a,
                                 const uint32_t in[3], uint32_t out[3]) {
    return guarded([&] {
        QuadForm3 f = make_family(fd->fd, to_family(family), fd->fd.from_bits(a));
        Triple r = eval(fd->fd, f, to_triple(fd->fd, in));
        out[0] = fd->fd.bits(r.x);
        out[1] = fd->fd.bits(r.y);
        out[2] = fd->fd.bits(r.z);
    });
}

apntri_status apntri_diff_kernel_size(const apntri_field* fd, int family, uint32_t a,
                                      const uint32_t dir[3], uint64_t* size) {
    return guarded([&] {
        QuadForm3 f = make_family(fd->fd, to_family(family), fd->fd.from_bits(a));
        *size = diff_kernel_size(fd->fd, f, to_triple(fd->fd, dir));
    });
}

apntri_status apntri_classify_direction(const apntri_field* fd, uint32_t a, const uint32_t dir[3],
                                        int* dir_type, uint64_t* predicted, int* predicted_exact,
                                        uint64_t* measured) {
    return guarded([&] {
        KernelProfile p = classify_direction_G(fd->fd, fd->fd.from_bits(a), to_triple(fd->fd, dir));
        *dir_type = static_cast<int>(p.type);
        *predicted = p.predicted;
        *predicted_exact = p.predicted_exact ? 1 : 0;
        *measured = p.measured;
    });
}

apntri_status apntri_h_poly(const apntri_field* fd, uint32_t a, const uint32_t dir[3],
                            uint32_t* value) {
    return guarded([&] {
        *value = fd->fd.bits(h_poly_G(fd->fd, fd->fd.from_bits(a), to_triple(fd->fd, dir)));
    });
}

apntri_status apntri_h_factorization_check(const apntri_field* fd, uint32_t a, int* ok) {
    return guarded([&] { *ok = h_factorization_check(fd->fd, fd->fd.from_bits(a)) ? 1 : 0; });
}

apntri_status apntri_is_permutation(const apntri_field* fd, int family, uint32_t a,
                                    uint32_t threads, int* is_perm) {
    return guarded([&] {
        QuadForm3 f = make_family(fd->fd, to_family(family), fd->fd.from_bits(a));
        *is_perm = is_permutation(fd->fd, f, threads) ? 1 : 0;
    });
}

apntri_status apntri_is_apn(const apntri_field* fd, int family, uint32_t a, int method,
                            uint32_t threads, int* is_apn, uint64_t* max_kernel,
                            uint32_t witness[3]) {
    return guarded([&] {
        QuadForm3 f = make_family(fd->fd, to_family(family), fd->fd.from_bits(a));
        ApnResult r;
        if (method == APNTRI_METHOD_EXHAUSTIVE) {
            r = is_apn_exhaustive(fd->fd, f, threads);
        } else if (method == APNTRI_METHOD_KERNEL) {
            r = is_apn_kernel(fd->fd, f, threads);
        } else if (method == APNTRI_METHOD_AUTO) {
            r = fd->fd.degree() <= 5 ? is_apn_exhaustive(fd->fd, f, threads)
                                     : is_apn_kernel(fd->fd, f, threads);
        } else {
            throw error(errc::bad_argument, "method must be auto, kernel, or exhaustive");
        }
        *is_apn = r.is_apn ? 1 : 0;
        if (max_kernel != nullptr) *max_kernel = r.max_kernel;
        if (witness != nullptr && r.witness) {
            witness[0] = fd->fd.bits(r.witness->x);
            witness[1] = fd->fd.bits(r.witness->y);
            witness[2] = fd->fd.bits(r.witness->z);
        }
    });
}

apntri_status apntri_good_set(const apntri_field* fd, int method, uint32_t threads, uint32_t* buf,
                              size_t cap, uint32_t* count) {
    return guarded([&] {
        GoodSetReport rep = method == APNTRI_GOOD_GIMAGE ? good_set_gimage(fd->fd)
                                                         : good_set_rootscan(fd->fd, threads);
        *count = static_cast<uint32_t>(rep.count());
        if (buf != nullptr) {
            if (cap < rep.count()) throw error(errc::buffer_too_small, "good-set buffer too small");
            for (std::size_t k = 0; k < rep.count(); ++k) buf[k] = fd->fd.bits(rep.good[k]);
        }
    });
}

apntri_status apntri_lower_bound(const apntri_field* fd, double* value, int64_t* ceiling) {
    return guarded([&] {
        LowerBound b = lower_bound(fd->fd);
        *value = b.value;
        *ceiling = b.ceiling;
    });
}

apntri_status apntri_fiber_stats(const apntri_field* fd, int with_direct, uint32_t threads,
                                 apntri_fiber_class* classes, size_t cap, size_t* n_classes,
                                 apntri_fiber_summary* summary) {
    return guarded([&] {
        FiberStats st = fiber_stats(fd->fd, with_direct != 0, threads);
        *n_classes = st.class_counts.size();
        if (classes != nullptr) {
            if (cap < st.class_counts.size())
                throw error(errc::buffer_too_small, "class buffer too small");
            std::size_t k = 0;
            for (const auto& [size, cnt] : st.class_counts)
                classes[k++] = apntri_fiber_class{size, cnt};
        }
        if (summary != nullptr) {
            summary->gamma_fiber = st.gamma_fiber;
            summary->gamma_direct = st.gamma_direct.value_or(0);
            summary->has_gamma_direct = st.gamma_direct.has_value() ? 1 : 0;
            summary->collision_pairs = st.collision_pairs;
            summary->c0 = st.c0;
            summary->good_count = st.good_count;
            summary->bound_value = st.bound.value;
            summary->bound_ceiling = st.bound.ceiling;
        }
    });
}

apntri_status apntri_diag_criterion(const apntri_field* fd, uint32_t a, int* holds) {
    return guarded([&] { *holds = diag_criterion(fd->fd, fd->fd.from_bits(a)) ? 1 : 0; });
}

apntri_status apntri_d0(const apntri_field* fd, uint64_t* out) {
    return guarded([&] { *out = d0(fd->fd); });
}

apntri_status apntri_diag_search(const apntri_field* fd, int family, uint32_t a, int* found,
                                 uint32_t witness[6]) {
    return guarded([&] {
        auto w = diag_search(fd->fd, to_family(family), fd->fd.from_bits(a));
        *found = w.has_value() ? 1 : 0;
        if (w && witness != nullptr) {
            witness[0] = fd->fd.bits(w->mu);
            witness[1] = fd->fd.bits(w->nu);
            witness[2] = fd->fd.bits(w->rho);
            witness[3] = fd->fd.bits(w->l1);
            witness[4] = fd->fd.bits(w->l2);
            witness[5] = fd->fd.bits(w->l3);
        }
    });
}

apntri_status apntri_el_search(const apntri_field* fd, int family_f, uint32_t a, int family_g,
                               uint32_t b, uint64_t budget, apntri_equiv_report* out) {
    return guarded([&] {
        QuadForm3 f = make_family(fd->fd, to_family(family_f), fd->fd.from_bits(a));
        QuadForm3 g = make_family(fd->fd, to_family(family_g), fd->fd.from_bits(b));
        ElSearchReport rep = el_equiv_monomial_search(fd->fd, f, g, budget);
        out->result = rep.result == EquivResult::Equivalent      ? APNTRI_EQUIV_EQUIVALENT
                      : rep.result == EquivResult::Inequivalent ? APNTRI_EQUIV_INEQUIVALENT
                                                                : APNTRI_EQUIV_BUDGET_EXCEEDED;
        out->maps_searched = rep.maps_searched;
        out->monomial_scope_only = monomial_restriction_applies(fd->fd.degree()) ? 0 : 1;
        for (int k = 0; k < 3; ++k) {
            out->inner.perm[k] = static_cast<uint8_t>(rep.inner.perm[k]);
            out->inner.scalars[k] = rep.inner.scalars[k].v;
            out->inner.twists[k] = static_cast<uint8_t>(rep.inner.twists[k]);
            out->outer.perm[k] = static_cast<uint8_t>(rep.outer.perm[k]);
            out->outer.scalars[k] = rep.outer.scalars[k].v;
            out->outer.twists[k] = static_cast<uint8_t>(rep.outer.twists[k]);
        }
    });
}

}  // extern "C"
