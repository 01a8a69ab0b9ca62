#pragma once

#include <vector>

#include "field.hpp"

namespace apntri {

/// The six root-equivalent polynomials attached to a parameter a. All of
/// them evaluate to 1 at T = 0, so root searches range over F_{2^m}^*.
///
///   P       T^{q^2+q+1} + (aT^q + 1)^{q+1}
///   Pprime  T^{q^2+q+1} + a T^{q^2+q} + 1
///   Q       T^{q^2+q+1} + a T + 1
///   Qq      T^{q^2+q+1} + a^q T + 1
///   R       T^{q^2+q+1} + (aT + 1)^{q+1}
///   S       T^{q^2+q+1} + a^q T^{q+1} + 1
enum class PolyVariant { P, Pprime, Q, Qq, R, S };

constexpr int variant_count = 6;
const char* variant_name(PolyVariant v);

struct RootReport {
    PolyVariant variant;
    Fe a;
    std::vector<Fe> roots;  // sorted by encoding
    std::size_t count() const { return roots.size(); }
};

Fe eval_variant(const Field& fd, PolyVariant v, Fe a, Fe t);

// Exhaustive evaluation over all 2^m - 1 nonzero elements, ascending.
RootReport roots_in_field(const Field& fd, PolyVariant v, Fe a);

// True iff the six variants either all have a nonzero root or none do.
bool variants_root_consistent(const Field& fd, Fe a);

// Convenience: Q_a has no root in F_{2^m} (the good-parameter criterion).
bool q_rootfree(const Field& fd, Fe a);

// L_a(S) = S^{q^3} + a S^q + S
Fe linearized_eval(const Field& fd, Fe a, Fe s);

// F_2-dimension of { s : L_a(s) = 0 }, via the m x m matrix of s -> L_a(s).
unsigned linearized_kernel_dim(const Field& fd, Fe a);

// Builds the Frobenius-twisted companion matrices C^{sigma^k} (middle-row
// last-column entry a^{q^k}), multiplies them left to right into A_L, and
// reports whether A_L - I_3 is singular over F_{2^m}. Agrees with
// linearized_kernel_dim(a) > 0.
bool companion_product_singular(const Field& fd, Fe a);

}  // namespace apntri
