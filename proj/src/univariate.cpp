#include "univariate.hpp"

#include <array>

#include "f2linalg.hpp"

namespace apntri {

const char* variant_name(PolyVariant v) {
    switch (v) {
        case PolyVariant::P: return "P";
        case PolyVariant::Pprime: return "Pprime";
        case PolyVariant::Q: return "Q";
        case PolyVariant::Qq: return "Qq";
        case PolyVariant::R: return "R";
        case PolyVariant::S: return "S";
    }
    return "?";
}

namespace {

void require_param(const Field& fd, Fe a) {
    if (fd.is_zero(a)) throw error(errc::zero_parameter, "parameter a must be nonzero");
}

}  // namespace

Fe eval_variant(const Field& fd, PolyVariant v, Fe a, Fe t) {
    require_param(fd, a);
    Fe tq = fd.frob(t);
    Fe tq2 = fd.frob(tq);
    Fe td = fd.mul(fd.mul(tq2, tq), t);  // t^{q^2+q+1}
    Fe one = fd.one();
    switch (v) {
        case PolyVariant::P: {
            Fe w = fd.add(fd.mul(a, tq), one);           // aT^q + 1
            return fd.add(td, fd.mul(fd.frob(w), w));    // + w^{q+1}
        }
        case PolyVariant::Pprime:
            return fd.add(fd.add(td, fd.mul(a, fd.mul(tq2, tq))), one);
        case PolyVariant::Q:
            return fd.add(fd.add(td, fd.mul(a, t)), one);
        case PolyVariant::Qq:
            return fd.add(fd.add(td, fd.mul(fd.frob(a), t)), one);
        case PolyVariant::R: {
            Fe w = fd.add(fd.mul(a, t), one);            // aT + 1
            return fd.add(td, fd.mul(fd.frob(w), w));
        }
        case PolyVariant::S:
            return fd.add(fd.add(td, fd.mul(fd.frob(a), fd.mul(tq, t))), one);
    }
    throw error(errc::bad_argument, "unknown polynomial variant");
}

RootReport roots_in_field(const Field& fd, PolyVariant v, Fe a) {
    require_param(fd, a);
    RootReport rep;
    rep.variant = v;
    rep.a = a;
    for (std::uint64_t t = 1; t <= fd.order(); ++t) {
        Fe tt = fd.from_bits(static_cast<std::uint32_t>(t));
        if (fd.is_zero(eval_variant(fd, v, a, tt))) rep.roots.push_back(tt);
    }
    return rep;
}

bool variants_root_consistent(const Field& fd, Fe a) {
    require_param(fd, a);
    static constexpr std::array<PolyVariant, variant_count> all = {
        PolyVariant::P, PolyVariant::Pprime, PolyVariant::Q,
        PolyVariant::Qq, PolyVariant::R, PolyVariant::S};
    bool first = roots_in_field(fd, all[0], a).count() > 0;
    for (std::size_t k = 1; k < all.size(); ++k) {
        if ((roots_in_field(fd, all[k], a).count() > 0) != first) return false;
    }
    return true;
}

bool q_rootfree(const Field& fd, Fe a) {
    require_param(fd, a);
    for (std::uint64_t t = 1; t <= fd.order(); ++t) {
        Fe tt = fd.from_bits(static_cast<std::uint32_t>(t));
        if (fd.is_zero(eval_variant(fd, PolyVariant::Q, a, tt))) return false;
    }
    return true;
}

Fe linearized_eval(const Field& fd, Fe a, Fe s) {
    require_param(fd, a);
    Fe sq = fd.frob(s);
    Fe sq3 = fd.frob(fd.frob(sq));
    return fd.add(fd.add(sq3, fd.mul(a, sq)), s);
}

unsigned linearized_kernel_dim(const Field& fd, Fe a) {
    require_param(fd, a);
    unsigned m = fd.degree();
    // column rank of the F_2 matrix of s -> L_a(s) on the polynomial basis
    XorBasis<std::uint32_t, Field::max_degree> basis;
    for (unsigned b = 0; b < m; ++b)
        basis.insert(fd.bits(linearized_eval(fd, a, fd.from_bits(1u << b))));
    return m - basis.rank();
}

namespace {

struct Mat3 {
    Fe e[3][3];
};

Mat3 mat_mul(const Field& fd, const Mat3& A, const Mat3& B) {
    Mat3 C;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Fe acc = fd.zero();
            for (int k = 0; k < 3; ++k) acc = fd.add(acc, fd.mul(A.e[r][k], B.e[k][c]));
            C.e[r][c] = acc;
        }
    return C;
}

// explicit cofactor expansion; characteristic 2, so no signs
Fe mat_det(const Field& fd, const Mat3& A) {
    Fe t0 = fd.mul(A.e[0][0], fd.add(fd.mul(A.e[1][1], A.e[2][2]), fd.mul(A.e[1][2], A.e[2][1])));
    Fe t1 = fd.mul(A.e[0][1], fd.add(fd.mul(A.e[1][0], A.e[2][2]), fd.mul(A.e[1][2], A.e[2][0])));
    Fe t2 = fd.mul(A.e[0][2], fd.add(fd.mul(A.e[1][0], A.e[2][1]), fd.mul(A.e[1][1], A.e[2][0])));
    return fd.add(fd.add(t0, t1), t2);
}

}  // namespace

bool companion_product_singular(const Field& fd, Fe a) {
    require_param(fd, a);
    Fe zero = fd.zero();
    Fe one = fd.one();
    Mat3 acc;
    bool started = false;
    Fe ak = a;  // a^{q^k}
    for (unsigned k = 0; k < fd.degree(); ++k) {
        Mat3 C;
        C.e[0][0] = zero; C.e[0][1] = zero; C.e[0][2] = one;
        C.e[1][0] = one;  C.e[1][1] = zero; C.e[1][2] = ak;
        C.e[2][0] = zero; C.e[2][1] = one;  C.e[2][2] = zero;
        acc = started ? mat_mul(fd, acc, C) : C;
        started = true;
        ak = fd.frob(ak);
    }
    acc.e[0][0] = fd.add(acc.e[0][0], one);
    acc.e[1][1] = fd.add(acc.e[1][1], one);
    acc.e[2][2] = fd.add(acc.e[2][2], one);
    return fd.is_zero(mat_det(fd, acc));
}

}  // namespace apntri
