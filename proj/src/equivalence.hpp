#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "trivariate.hpp"

namespace apntri {

/// Invertible monomial linear map: x_j <- scalars[j] * (x_{perm[j]})^{2^{twists[j]}}.
struct MonomialMap {
    std::array<int, 3> perm{0, 1, 2};
    std::array<Fe, 3> scalars;
    std::array<unsigned, 3> twists{0, 0, 0};
};

MonomialMap identity_map(const Field& fd);
Triple apply_monomial(const Field& fd, const MonomialMap& map, const Triple& v);

// a^{q^2+q+1} == 1, membership in the diagonal-equivalence subgroup
bool diag_criterion(const Field& fd, Fe a);
// gcd(q^2+q+1, 2^m-1), the subgroup order
std::uint64_t d0(const Field& fd);

struct DiagWitness {
    Fe mu, nu, rho;      // output scalings
    Fe l1, l2, l3;       // input scalings
};

// Exhaustive search for F_1 = A_1 o F_a o A_2 over diagonal A_1, A_2:
// lambda triples enumerated in encoding order, mu/nu/rho determined from
// the x^{q+1}, y^{q+1}, z^{q+1} matches, the remaining five coefficient
// equations checked. m <= 7.
std::optional<DiagWitness> diag_search(const Field& fd, Family fam, Fe a);

// The closed-form witness from the sufficiency direction of the diagonal
// theorem; valid whenever a^{q^2+q+1} = 1.
DiagWitness diag_recipe(const Field& fd, Family fam, Fe a, Fe lambda2);

// Is the witness an actual equivalence A_1 o F_a o A_2 = F_1?
bool verify_diag_witness(const Field& fd, Family fam, Fe a, const DiagWitness& w);

// outer o f o inner, when the substituted monomials still reduce to the
// x_i^q x_j pattern; nullopt when the pattern breaks (such a composition
// can never equal a family member, so callers prune on it).
std::optional<QuadForm3> compose_monomial(const Field& fd, const QuadForm3& f,
                                          const MonomialMap& inner, const MonomialMap& outer);

enum class EquivResult { Inequivalent, Equivalent, BudgetExceeded };

struct ElSearchReport {
    EquivResult result = EquivResult::Inequivalent;
    std::uint64_t maps_searched = 0;
    MonomialMap inner, outer;  // witness, valid when Equivalent
};

// Searches for monomial maps with outer o f o inner = g. Inner maps are
// enumerated (permutation x twist patterns surviving the bidegree prune x
// scalar triples, smallest encodings first); the outer map is solved for
// by coefficient matching. budget == 0 means unlimited.
ElSearchReport el_equiv_monomial_search(const Field& fd, const QuadForm3& f, const QuadForm3& g,
                                        std::uint64_t budget = 0);

// Hypotheses of the monomial restriction theorem: m > 2, m not 4 or 6,
// 7 does not divide m. Outside them an exhausted search only proves
// monomial inequivalence.
bool monomial_restriction_applies(unsigned m);

}  // namespace apntri
