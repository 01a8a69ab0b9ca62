#pragma once

#include <cstdint>
#include <optional>

#include "trivariate.hpp"

namespace apntri {

enum class Method { Auto, Kernel, Exhaustive, Image, RootCriterion };
const char* method_name(Method m);

// Full-image occupancy check over all 2^{3m} inputs; m <= 10.
bool is_permutation(const Field& fd, const QuadForm3& f, unsigned threads = 0);

struct ApnResult {
    bool is_apn;
    std::uint64_t max_kernel;          // true max in full_scan mode, else the
                                       // kernel at the witness direction
    std::optional<Triple> witness;     // smallest violating direction
};

// APN iff every nonzero direction has differential kernel of size 2.
// Early-exits on the first kernel > 2 unless full_scan is set; the witness
// is the violating direction with the smallest packed encoding either way.
// m <= 9.
ApnResult is_apn_kernel(const Field& fd, const QuadForm3& f, unsigned threads = 0,
                        bool full_scan = false);

// The definitional oracle: for every nonzero direction and every output b,
// at most two solutions of f(x+d)+f(x) = b. m <= 5.
ApnResult is_apn_exhaustive(const Field& fd, const QuadForm3& f, unsigned threads = 0);

struct StatusReport {
    Fe a;
    Family family;
    bool is_permutation;
    bool is_apn;
    Method method;              // the method that decided the APN flag
    std::uint64_t max_kernel;   // 2 when APN; 0 when not measured
    std::optional<Triple> witness;
    double elapsed_ms;
};

// Method::Auto picks exhaustive for m <= 5, kernel for m <= 9, and falls
// back to the root criterion beyond that (flags then derive from the
// theorems rather than from measurement, and the method field says so).
StatusReport status(const Field& fd, Family fam, Fe a, Method method = Method::Auto,
                    unsigned threads = 0);

}  // namespace apntri
