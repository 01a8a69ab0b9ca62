#include "trivariate.hpp"

#include <algorithm>

#include "f2linalg.hpp"
#include "parallel.hpp"
#include "univariate.hpp"

namespace apntri {

const char* family_name(Family f) { return f == Family::G ? "G" : "H"; }

const char* dir_type_name(DirType t) {
    switch (t) {
        case DirType::Axis: return "Axis";
        case DirType::Type1: return "Type1";
        case DirType::Type2a: return "Type2a";
        case DirType::Type2b: return "Type2b";
        case DirType::Type3: return "Type3";
    }
    return "?";
}

QuadForm3 zero_form(const Field& fd) {
    QuadForm3 f;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) f.c[k][i][j] = fd.zero();
    return f;
}

QuadForm3 make_G(const Field& fd, Fe a) {
    if (fd.is_zero(a)) throw error(errc::zero_parameter, "family parameter a must be nonzero");
    Fe one = fd.one();
    QuadForm3 f = zero_form(fd);
    f.c[0][0][0] = one;  // x^{q+1}
    f.c[0][0][2] = a;    // a x^q z
    f.c[0][2][1] = one;  // y z^q
    f.c[1][0][2] = one;  // x^q z
    f.c[1][1][1] = one;  // y^{q+1}
    f.c[2][1][0] = one;  // x y^q
    f.c[2][1][2] = a;    // a y^q z
    f.c[2][2][2] = one;  // z^{q+1}
    return f;
}

QuadForm3 make_H(const Field& fd, Fe a) {
    if (fd.is_zero(a)) throw error(errc::zero_parameter, "family parameter a must be nonzero");
    Fe one = fd.one();
    QuadForm3 f = zero_form(fd);
    f.c[0][0][0] = one;  // x^{q+1}
    f.c[0][1][0] = a;    // a x y^q
    f.c[0][2][1] = one;  // y z^q
    f.c[1][1][0] = one;  // x y^q
    f.c[1][2][2] = one;  // z^{q+1}
    f.c[2][0][2] = one;  // x^q z
    f.c[2][1][1] = one;  // y^{q+1}
    f.c[2][1][2] = a;    // a y^q z
    return f;
}

QuadForm3 make_family(const Field& fd, Family fam, Fe a) {
    return fam == Family::G ? make_G(fd, a) : make_H(fd, a);
}

Triple eval(const Field& fd, const QuadForm3& f, const Triple& v) {
    Fe in[3] = {v.x, v.y, v.z};
    Fe inq[3] = {fd.frob(v.x), fd.frob(v.y), fd.frob(v.z)};
    Fe out[3];
    for (int k = 0; k < 3; ++k) {
        Fe acc = fd.zero();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (fd.is_zero(f.c[k][i][j])) continue;
                acc = fd.add(acc, fd.mul(f.c[k][i][j], fd.mul(inq[i], in[j])));
            }
        out[k] = acc;
    }
    return Triple{out[0], out[1], out[2]};
}

std::uint32_t pack(const Field& fd, const Triple& v) {
    unsigned m = fd.degree();
    return (((fd.bits(v.x) << m) | fd.bits(v.y)) << m) | fd.bits(v.z);
}

Triple unpack(const Field& fd, std::uint32_t idx) {
    unsigned m = fd.degree();
    std::uint32_t mask = (1u << m) - 1;
    return Triple{fd.from_bits((idx >> (2 * m)) & mask), fd.from_bits((idx >> m) & mask),
                  fd.from_bits(idx & mask)};
}

namespace {

void require_direction(const Field& fd, const Triple& d) {
    if (fd.is_zero(d.x) && fd.is_zero(d.y) && fd.is_zero(d.z))
        throw error(errc::zero_direction, "direction must be nonzero");
}

}  // namespace

std::uint64_t diff_kernel_size(const Field& fd, const QuadForm3& f, const Triple& d) {
    require_direction(fd, d);
    unsigned m = fd.degree();
    unsigned n = 3 * m;
    std::uint32_t didx = pack(fd, d);
    std::uint32_t fd_at_d = pack(fd, eval(fd, f, d));
    XorBasis<unsigned __int128, 3 * Field::max_degree> basis;
    for (unsigned b = 0; b < n; ++b) {
        std::uint32_t eb = 1u << b;
        std::uint32_t col = pack(fd, eval(fd, f, unpack(fd, eb ^ didx))) ^
                            pack(fd, eval(fd, f, unpack(fd, eb))) ^ fd_at_d;
        basis.insert(static_cast<unsigned __int128>(col));
    }
    unsigned nullity = n - static_cast<unsigned>(basis.rank());
    if (nullity >= 64)
        throw error(errc::field_too_large, "kernel size does not fit a 64-bit count");
    return 1ull << nullity;
}

GClassifier::GClassifier(const Field& fd, Fe a) : fd_(fd), a_(a) {
    if (fd.is_zero(a)) throw error(errc::zero_parameter, "family parameter a must be nonzero");
    for (Fe r : roots_in_field(fd, PolyVariant::Q, a).roots)
        q_roots_pow_q1_.push_back(fd.bits(fd.mul(fd.frob(r), r)));
    std::sort(q_roots_pow_q1_.begin(), q_roots_pow_q1_.end());
    q_has_roots_ = !q_roots_pow_q1_.empty();
}

KernelProfile GClassifier::classify(const Triple& d) const {
    require_direction(fd_, d);
    const Field& fd = fd_;
    Fe A = d.x, B = d.y, C = d.z;
    bool nza = !fd.is_zero(A), nzb = !fd.is_zero(B), nzc = !fd.is_zero(C);
    int nz = int(nza) + int(nzb) + int(nzc);
    std::uint64_t two_m = 1ull << fd.degree();

    KernelProfile p;
    p.direction = d;
    p.predicted_exact = true;
    p.measured = 0;

    if (nz == 1) {
        p.type = DirType::Axis;
        p.predicted = 2;
        return p;
    }
    if (nz == 2) {
        bool degenerate;
        if (!nzc) {  // (A, B, 0): root test on Q_{a^q}(A/B)
            p.type = DirType::Type1;
            Fe ratio = fd.mul(A, fd.inv(B));
            degenerate = fd.is_zero(eval_variant(fd, PolyVariant::Qq, a_, ratio));
        } else if (!nzb) {  // (A, 0, C): root test on Q_a(C/A)
            p.type = DirType::Type2a;
            Fe ratio = fd.mul(C, fd.inv(A));
            degenerate = fd.is_zero(eval_variant(fd, PolyVariant::Q, a_, ratio));
        } else {  // (0, B, C): C/B must be the (q+1)-th power of a Q_a root
            p.type = DirType::Type2b;
            Fe ratio = fd.mul(C, fd.inv(B));
            degenerate = std::binary_search(q_roots_pow_q1_.begin(), q_roots_pow_q1_.end(),
                                            fd.bits(ratio));
        }
        p.predicted = degenerate ? two_m : 2;
        return p;
    }
    p.type = DirType::Type3;
    if (!q_has_roots_) {
        p.predicted = 2;
    } else {
        // The theorem only bounds the degenerate subcase from below; the
        // profile keeps that bound and lets callers compare it with the
        // measured size.
        p.predicted = two_m;
        p.predicted_exact = false;
    }
    return p;
}

KernelProfile classify_direction_G(const Field& fd, Fe a, const Triple& d) {
    GClassifier cls(fd, a);
    KernelProfile p = cls.classify(d);
    p.measured = diff_kernel_size(fd, make_G(fd, a), d);
    return p;
}

Fe h_poly_G(const Field& fd, Fe a, const Triple& d) {
    if (fd.is_zero(a)) throw error(errc::zero_parameter, "family parameter a must be nonzero");
    Fe A = d.x, B = d.y, C = d.z;
    Fe Aq = fd.frob(A), Bq = fd.frob(B), Cq = fd.frob(C);
    Fe Aq2 = fd.frob(Aq), Bq2 = fd.frob(Bq), Cq2 = fd.frob(Cq);
    Fe aq = fd.frob(a);

    Fe acc = fd.mul(fd.mul(Aq2, Aq), A);                          // A^{q^2+q+1}
    acc = fd.add(acc, fd.mul(fd.mul(aq, A), fd.mul(Bq2, Bq)));    // a^q A B^{q^2+q}
    acc = fd.add(acc, fd.mul(A, fd.mul(Bq, Cq2)));                // A B^q C^{q^2}
    acc = fd.add(acc, fd.mul(fd.mul(a, C), fd.mul(Aq2, Aq)));     // a A^{q^2+q} C
    acc = fd.add(acc, fd.mul(Aq, fd.mul(Bq2, C)));                // A^q B^{q^2} C
    acc = fd.add(acc, fd.mul(Aq2, fd.mul(B, Cq)));                // A^{q^2} B C^q
    acc = fd.add(acc, fd.mul(fd.mul(Bq2, Bq), B));                // B^{q^2+q+1}
    acc = fd.add(acc, fd.mul(fd.mul(aq, a), fd.mul(fd.mul(Bq2, Bq), C)));  // a^{q+1} B^{q^2+q} C
    acc = fd.add(acc, fd.mul(fd.mul(a, Bq), fd.mul(Cq2, C)));     // a B^q C^{q^2+1}
    acc = fd.add(acc, fd.mul(fd.mul(aq, Bq2), fd.mul(Cq, C)));    // a^q B^{q^2} C^{q+1}
    acc = fd.add(acc, fd.mul(fd.mul(Cq2, Cq), C));                // C^{q^2+q+1}
    return acc;
}

bool h_factorization_check(const Field& fd, Fe a) {
    if (fd.is_zero(a)) throw error(errc::zero_parameter, "family parameter a must be nonzero");
    if (fd.degree() > 5)
        throw error(errc::field_too_large, "h_factorization_check enumerates 2^{3m} triples; m <= 5");
    bool has_zero = false;
    std::uint32_t total = 1u << (3 * fd.degree());
    for (std::uint32_t idx = 1; idx < total && !has_zero; ++idx) {
        if (fd.is_zero(h_poly_G(fd, a, unpack(fd, idx)))) has_zero = true;
    }
    return has_zero == !q_rootfree(fd, a);
}

FormTable::FormTable(const Field& fd, const QuadForm3& f, unsigned threads) : fd_(fd) {
    if (fd.degree() > 8)
        throw error(errc::field_too_large, "form table needs 2^{3m} x 4 bytes; m <= 8");
    std::uint64_t total = 1ull << (3 * fd.degree());
    lut_.resize(total);
    scan_chunks(total, 1u << 14, threads,
                [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
                    for (std::uint64_t idx = begin; idx < end; ++idx) {
                        std::uint32_t u = static_cast<std::uint32_t>(idx);
                        lut_[u] = pack(fd_, eval(fd_, f, unpack(fd_, u)));
                    }
                    return true;
                });
}

std::uint64_t FormTable::kernel_size(std::uint32_t didx) const {
    unsigned n = 3 * fd_.degree();
    std::uint32_t fd_at_d = lut_[didx];
    XorBasis<unsigned __int128, 3 * Field::max_degree> basis;
    for (unsigned b = 0; b < n; ++b) {
        std::uint32_t eb = 1u << b;
        std::uint32_t col = lut_[eb ^ didx] ^ lut_[eb] ^ fd_at_d;
        basis.insert(static_cast<unsigned __int128>(col));
    }
    return 1ull << (n - basis.rank());  // n <= 24 here, no overflow
}

}  // namespace apntri
