#include "equivalence.hpp"

#include <algorithm>
#include <vector>

namespace apntri {

MonomialMap identity_map(const Field& fd) {
    MonomialMap m;
    m.scalars = {fd.one(), fd.one(), fd.one()};
    return m;
}

namespace {

Fe pow2k(const Field& fd, Fe x, unsigned k) {
    Fe r = x;
    for (unsigned s = 0; s < k; ++s) r = fd.sqr(r);
    return r;
}

void require_param(const Field& fd, Fe a) {
    if (fd.is_zero(a)) throw error(errc::zero_parameter, "parameter a must be nonzero");
}

}  // namespace

Triple apply_monomial(const Field& fd, const MonomialMap& map, const Triple& v) {
    Fe in[3] = {v.x, v.y, v.z};
    Fe out[3];
    for (int j = 0; j < 3; ++j)
        out[j] = fd.mul(map.scalars[j], pow2k(fd, in[map.perm[j]], map.twists[j]));
    return Triple{out[0], out[1], out[2]};
}

bool diag_criterion(const Field& fd, Fe a) {
    require_param(fd, a);
    return fd.is_one(fd.pow(a, fd.exp_d()));
}

std::uint64_t d0(const Field& fd) { return gcd_u64(fd.exp_d(), fd.order()); }

namespace {

// the five residual coefficient equations once mu, nu, rho are pinned by
// the pure-power matches
bool check_residual_G(const Field& fd, Fe a, Fe mu, Fe nu, Fe rho, Fe l1, Fe l2, Fe l3,
                      Fe l1q, Fe l2q, Fe l3q) {
    Fe one = fd.one();
    if (!(fd.mul(fd.mul(fd.mul(mu, a), l1q), l3) == one)) return false;   // E2
    if (!(fd.mul(fd.mul(mu, l2), l3q) == one)) return false;              // E3
    if (!(fd.mul(fd.mul(nu, l1q), l3) == one)) return false;              // E4
    if (!(fd.mul(fd.mul(rho, l1), l2q) == one)) return false;             // E6
    if (!(fd.mul(fd.mul(fd.mul(rho, a), l2q), l3) == one)) return false;  // E7
    return true;
}

bool check_residual_H(const Field& fd, Fe a, Fe mu, Fe nu, Fe rho, Fe l1, Fe l2, Fe l3,
                      Fe l1q, Fe l2q, Fe l3q) {
    Fe one = fd.one();
    if (!(fd.mul(fd.mul(fd.mul(mu, a), l1), l2q) == one)) return false;   // H2
    if (!(fd.mul(fd.mul(mu, l2), l3q) == one)) return false;              // H3
    if (!(fd.mul(fd.mul(nu, l1), l2q) == one)) return false;              // H4
    if (!(fd.mul(fd.mul(rho, l1q), l3) == one)) return false;             // H6
    if (!(fd.mul(fd.mul(fd.mul(rho, a), l2q), l3) == one)) return false;  // H8
    return true;
}

}  // namespace

std::optional<DiagWitness> diag_search(const Field& fd, Family fam, Fe a) {
    require_param(fd, a);
    if (fd.degree() > 7)
        throw error(errc::field_too_large, "diagonal search enumerates (2^m-1)^3 triples; m <= 7");

    const std::uint64_t order = fd.order();
    std::vector<Fe> fq(order + 1, fd.zero());       // lambda^q
    std::vector<Fe> inv_q1(order + 1, fd.zero());   // (lambda^{q+1})^{-1}
    for (std::uint64_t v = 1; v <= order; ++v) {
        Fe l = fd.from_bits(static_cast<std::uint32_t>(v));
        fq[v] = fd.frob(l);
        inv_q1[v] = fd.inv(fd.mul(fq[v], l));
    }

    for (std::uint64_t v1 = 1; v1 <= order; ++v1) {
        Fe l1 = fd.from_bits(static_cast<std::uint32_t>(v1));
        Fe mu = inv_q1[v1];
        for (std::uint64_t v2 = 1; v2 <= order; ++v2) {
            Fe l2 = fd.from_bits(static_cast<std::uint32_t>(v2));
            for (std::uint64_t v3 = 1; v3 <= order; ++v3) {
                Fe l3 = fd.from_bits(static_cast<std::uint32_t>(v3));
                Fe nu, rho;
                bool ok;
                if (fam == Family::G) {
                    nu = inv_q1[v2];
                    rho = inv_q1[v3];
                    ok = check_residual_G(fd, a, mu, nu, rho, l1, l2, l3, fq[v1], fq[v2], fq[v3]);
                } else {
                    nu = inv_q1[v3];
                    rho = inv_q1[v2];
                    ok = check_residual_H(fd, a, mu, nu, rho, l1, l2, l3, fq[v1], fq[v2], fq[v3]);
                }
                if (ok) return DiagWitness{mu, nu, rho, l1, l2, l3};
            }
        }
    }
    return std::nullopt;
}

DiagWitness diag_recipe(const Field& fd, Family fam, Fe a, Fe lambda2) {
    require_param(fd, a);
    if (fd.is_zero(lambda2)) throw error(errc::bad_argument, "lambda2 must be nonzero");
    std::uint64_t q = fd.q();
    DiagWitness w;
    w.l2 = lambda2;
    if (fam == Family::G) {
        w.l1 = fd.mul(fd.pow(fd.inv(a), q), lambda2);          // a^{-q} lambda2
        w.l3 = fd.mul(w.l1, fd.inv(a));                        // lambda1 / a
        w.mu = fd.inv(fd.mul(fd.frob(w.l1), w.l1));
        w.nu = fd.inv(fd.mul(fd.frob(w.l2), w.l2));
        w.rho = fd.inv(fd.mul(fd.frob(w.l3), w.l3));
    } else {
        w.l1 = fd.mul(fd.pow(fd.inv(a), q + 1), lambda2);      // a^{-(q+1)} lambda2
        w.l3 = fd.mul(fd.inv(a), lambda2);                     // a^{-1} lambda2
        w.mu = fd.inv(fd.mul(fd.frob(w.l1), w.l1));
        w.nu = fd.inv(fd.mul(fd.frob(w.l3), w.l3));
        w.rho = fd.inv(fd.mul(fd.frob(w.l2), w.l2));
    }
    return w;
}

bool verify_diag_witness(const Field& fd, Family fam, Fe a, const DiagWitness& w) {
    MonomialMap inner = identity_map(fd);
    inner.scalars = {w.l1, w.l2, w.l3};
    MonomialMap outer = identity_map(fd);
    outer.scalars = {w.mu, w.nu, w.rho};
    auto composed = compose_monomial(fd, make_family(fd, fam, a), inner, outer);
    return composed && *composed == make_family(fd, fam, fd.one());
}

std::optional<QuadForm3> compose_monomial(const Field& fd, const QuadForm3& f,
                                          const MonomialMap& inner, const MonomialMap& outer) {
    const unsigned m = fd.degree();
    const unsigned fe = fd.frob_exponent();
    Fe sq[3];
    for (int j = 0; j < 3; ++j) sq[j] = fd.frob(inner.scalars[j]);

    QuadForm3 out = zero_form(fd);
    for (int k = 0; k < 3; ++k) {
        int src = outer.perm[k];
        unsigned u = outer.twists[k];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Fe c = f.c[src][i][j];
                if (fd.is_zero(c)) continue;
                unsigned l1 = (fe + inner.twists[i] + u) % m;  // exponent log on perm[i]
                unsigned l2 = (inner.twists[j] + u) % m;       // exponent log on perm[j]
                int vi = inner.perm[i], vj = inner.perm[j];
                Fe coeff = pow2k(fd, fd.mul(c, fd.mul(sq[i], inner.scalars[j])), u);
                coeff = fd.mul(outer.scalars[k], coeff);
                int si, sj;
                if (vi == vj) {
                    // diagonal: total exponent 2^{l1} + 2^{l2} must be q + 1
                    bool fits = (l1 == fe && l2 == 0) || (l1 == 0 && l2 == fe);
                    if (!fits) return std::nullopt;
                    si = vi;
                    sj = vi;
                } else if (l1 == fe && l2 == 0) {
                    si = vi;
                    sj = vj;
                } else if (l1 == 0 && l2 == fe) {
                    si = vj;
                    sj = vi;
                } else {
                    return std::nullopt;
                }
                out.c[k][si][sj] = fd.add(out.c[k][si][sj], coeff);
            }
    }
    return out;
}

bool monomial_restriction_applies(unsigned m) {
    return m > 2 && m != 4 && m != 6 && m % 7 != 0;
}

namespace {

constexpr int s3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

struct SlotEntry {
    int i, j;    // source monomial
    int si, sj;  // destination slot
};

// For fixed (perm, twists, outer twist u): where each nonzero monomial of
// f's component `src` lands, or nullopt when the bidegree pattern breaks.
std::optional<std::vector<SlotEntry>> slot_plan(const Field& fd, const QuadForm3& f, int src,
                                                const int perm[3], const unsigned twists[3],
                                                unsigned u) {
    const unsigned m = fd.degree();
    const unsigned fe = fd.frob_exponent();
    std::vector<SlotEntry> plan;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (fd.is_zero(f.c[src][i][j])) continue;
            unsigned l1 = (fe + twists[i] + u) % m;
            unsigned l2 = (twists[j] + u) % m;
            int vi = perm[i], vj = perm[j];
            SlotEntry e{i, j, 0, 0};
            if (vi == vj) {
                if (!((l1 == fe && l2 == 0) || (l1 == 0 && l2 == fe))) return std::nullopt;
                e.si = vi;
                e.sj = vi;
            } else if (l1 == fe && l2 == 0) {
                e.si = vi;
                e.sj = vj;
            } else if (l1 == 0 && l2 == fe) {
                e.si = vj;
                e.sj = vi;
            } else {
                return std::nullopt;
            }
            plan.push_back(e);
        }
    return plan;
}

struct Candidate {
    int src;
    unsigned u;
    std::vector<SlotEntry> plan;
};

}  // namespace

ElSearchReport el_equiv_monomial_search(const Field& fd, const QuadForm3& f, const QuadForm3& g,
                                        std::uint64_t budget) {
    if (fd.degree() > 7)
        throw error(errc::field_too_large, "monomial search enumerates (2^m-1)^3 scalars; m <= 7");
    const unsigned m = fd.degree();
    const std::uint64_t order = fd.order();

    ElSearchReport rep;

    std::vector<Fe> fq(order + 1, fd.zero());
    for (std::uint64_t v = 1; v <= order; ++v)
        fq[v] = fd.frob(fd.from_bits(static_cast<std::uint32_t>(v)));

    for (const auto& perm : s3) {
        unsigned twists[3];
        for (twists[0] = 0; twists[0] < m; ++twists[0])
            for (twists[1] = 0; twists[1] < m; ++twists[1])
                for (twists[2] = 0; twists[2] < m; ++twists[2]) {
                    // bidegree prune: keep only (src, u) pairs whose slot
                    // plan exists; the outer map needs all three sources
                    std::vector<Candidate> cands;
                    bool src_ok[3] = {false, false, false};
                    for (int src = 0; src < 3; ++src)
                        for (unsigned u = 0; u < m; ++u) {
                            auto plan = slot_plan(fd, f, src, perm, twists, u);
                            if (plan) {
                                src_ok[src] = true;
                                cands.push_back(Candidate{src, u, std::move(*plan)});
                            }
                        }
                    if (!(src_ok[0] && src_ok[1] && src_ok[2])) continue;

                    for (std::uint64_t v1 = 1; v1 <= order; ++v1)
                        for (std::uint64_t v2 = 1; v2 <= order; ++v2)
                            for (std::uint64_t v3 = 1; v3 <= order; ++v3) {
                                if (budget != 0 && rep.maps_searched >= budget) {
                                    rep.result = EquivResult::BudgetExceeded;
                                    return rep;
                                }
                                ++rep.maps_searched;

                                MonomialMap inner;
                                inner.perm = {perm[0], perm[1], perm[2]};
                                inner.twists = {twists[0], twists[1], twists[2]};
                                inner.scalars = {fd.from_bits(static_cast<std::uint32_t>(v1)),
                                                 fd.from_bits(static_cast<std::uint32_t>(v2)),
                                                 fd.from_bits(static_cast<std::uint32_t>(v3))};
                                Fe sqv[3] = {fq[v1], fq[v2], fq[v3]};

                                // raw composed coefficients before the outer twist
                                Fe raw[3][3][3];
                                for (int k = 0; k < 3; ++k)
                                    for (int i = 0; i < 3; ++i)
                                        for (int j = 0; j < 3; ++j) {
                                            if (fd.is_zero(f.c[k][i][j])) continue;
                                            raw[k][i][j] = fd.mul(
                                                f.c[k][i][j], fd.mul(sqv[i], inner.scalars[j]));
                                        }

                                // assign a distinct source component (with a
                                // twist and a solved scalar) to every output
                                int chosen_src[3];
                                unsigned chosen_u[3];
                                Fe chosen_w[3];
                                bool used[3] = {false, false, false};

                                auto try_outputs = [&](auto&& self, int k) -> bool {
                                    if (k == 3) return true;
                                    for (const auto& cand : cands) {
                                        if (used[cand.src]) continue;
                                        // build the slotted row and solve w
                                        Fe row[3][3];
                                        for (int i = 0; i < 3; ++i)
                                            for (int j = 0; j < 3; ++j) row[i][j] = fd.zero();
                                        for (const auto& e : cand.plan) {
                                            Fe c = pow2k(fd, raw[cand.src][e.i][e.j], cand.u);
                                            row[e.si][e.sj] = fd.add(row[e.si][e.sj], c);
                                        }
                                        Fe w = fd.zero();
                                        bool fail = false;
                                        for (int i = 0; i < 3 && !fail; ++i)
                                            for (int j = 0; j < 3 && !fail; ++j) {
                                                Fe target = g.c[k][i][j];
                                                if (fd.is_zero(row[i][j])) {
                                                    if (!fd.is_zero(target)) fail = true;
                                                } else if (fd.is_zero(target)) {
                                                    fail = true;
                                                } else {
                                                    Fe cand_w =
                                                        fd.mul(target, fd.inv(row[i][j]));
                                                    if (fd.is_zero(w)) w = cand_w;
                                                    else if (!(w == cand_w)) fail = true;
                                                }
                                            }
                                        if (fail || fd.is_zero(w)) continue;
                                        used[cand.src] = true;
                                        chosen_src[k] = cand.src;
                                        chosen_u[k] = cand.u;
                                        chosen_w[k] = w;
                                        if (self(self, k + 1)) return true;
                                        used[cand.src] = false;
                                    }
                                    return false;
                                };

                                if (!try_outputs(try_outputs, 0)) continue;

                                MonomialMap outer;
                                outer.perm = {chosen_src[0], chosen_src[1], chosen_src[2]};
                                outer.twists = {chosen_u[0], chosen_u[1], chosen_u[2]};
                                outer.scalars = {chosen_w[0], chosen_w[1], chosen_w[2]};

                                auto composed = compose_monomial(fd, f, inner, outer);
                                if (composed && *composed == g) {
                                    rep.result = EquivResult::Equivalent;
                                    rep.inner = inner;
                                    rep.outer = outer;
                                    return rep;
                                }
                            }
                }
    }
    rep.result = EquivResult::Inequivalent;
    return rep;
}

}  // namespace apntri
