#pragma once

#include <cstdint>
#include <vector>

#include "field.hpp"

namespace apntri {

struct Triple {
    Fe x, y, z;
    bool operator==(const Triple& o) const { return x == o.x && y == o.y && z == o.z; }
};

/// Triprojective quadratic map F_{2^m}^3 -> F_{2^m}^3: output k is
/// sum over (i, j) of c[k][i][j] * (x_i)^q * x_j. Both families and every
/// composed map handled by the equivalence search live in this shape.
struct QuadForm3 {
    Fe c[3][3][3];

    bool operator==(const QuadForm3& o) const {
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (!(c[k][i][j] == o.c[k][i][j])) return false;
        return true;
    }
};

enum class Family { G, H };
const char* family_name(Family f);

QuadForm3 zero_form(const Field& fd);

// G_a(x,y,z) = (x^{q+1} + a x^q z + y z^q,  x^q z + y^{q+1},  x y^q + a y^q z + z^{q+1})
QuadForm3 make_G(const Field& fd, Fe a);
// H_a(x,y,z) = (x^{q+1} + a x y^q + y z^q,  x y^q + z^{q+1},  x^q z + y^{q+1} + a y^q z)
QuadForm3 make_H(const Field& fd, Fe a);
QuadForm3 make_family(const Field& fd, Family fam, Fe a);

Triple eval(const Field& fd, const QuadForm3& f, const Triple& v);

// packed index with x in the high bits: ((x << m) | y) << m | z
std::uint32_t pack(const Field& fd, const Triple& v);
Triple unpack(const Field& fd, std::uint32_t idx);

// |{ v : f(v + d) + f(v) + f(d) = 0 }| for quadratic f, computed from the
// F_2 matrix of v -> D_d f(v) built by 3m basis evaluations.
std::uint64_t diff_kernel_size(const Field& fd, const QuadForm3& f, const Triple& d);

enum class DirType { Axis, Type1, Type2a, Type2b, Type3 };
const char* dir_type_name(DirType t);

struct KernelProfile {
    Triple direction;
    DirType type;
    std::uint64_t predicted;  // exact value, or the degenerate-case lower bound
    bool predicted_exact;     // false only for Type3 when Q_a has roots
    std::uint64_t measured;
};

// Precomputes the per-parameter facts (the roots of Q_a and their
// (q+1)-th powers) so scans over all directions stay O(1) per direction.
//
// Degenerate ratios per mixed type, verified exhaustively: (A,B,0) blows
// up iff Q_{a^q}(A/B) = 0; (A,0,C) iff Q_a(C/A) = 0; (0,B,C) iff C/B is
// the (q+1)-th power of a root of Q_a. (The (0,B,C) case is NOT governed
// by Q_a(C/B) itself: the root set gets raised to the q+1 power.)
class GClassifier {
public:
    GClassifier(const Field& fd, Fe a);
    // prediction only; measured is left 0
    KernelProfile classify(const Triple& d) const;
    bool q_has_roots() const { return q_has_roots_; }

private:
    const Field& fd_;
    Fe a_;
    bool q_has_roots_;
    std::vector<std::uint32_t> q_roots_pow_q1_;  // sorted {r^{q+1} : Q_a(r) = 0}
};

// Prediction from the case analysis paired with the measured kernel size.
KernelProfile classify_direction_G(const Field& fd, Fe a, const Triple& d);

// The degree-(q^2+q+1) homogeneous polynomial H(A,B,C) whose zero locus
// marks the degenerate all-nonzero directions of G_a.
Fe h_poly_G(const Field& fd, Fe a, const Triple& d);

// Exhaustively checks, over all nonzero triples (A,B,C), that H has a
// nonzero zero iff Q_a has a root in F_{2^m}. Cost 2^{3m}, so m <= 5.
bool h_factorization_check(const Field& fd, Fe a);

// Packed-output lookup table of f over all 2^{3m} inputs; backs the
// direction scans and the image-based permutation check. m <= 10.
class FormTable {
public:
    FormTable(const Field& fd, const QuadForm3& f, unsigned threads = 0);
    std::uint32_t operator[](std::uint32_t idx) const { return lut_[idx]; }
    std::uint32_t size_log2() const { return 3 * fd_.degree(); }
    const Field& field() const { return fd_; }

    // kernel size of D_d via table lookups (same basis-evaluation matrix,
    // just memoized)
    std::uint64_t kernel_size(std::uint32_t didx) const;

private:
    const Field& fd_;
    std::vector<std::uint32_t> lut_;
};

}  // namespace apntri
