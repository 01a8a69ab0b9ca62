#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "field.hpp"

namespace apntri {

enum class GoodMethod { RootScan, GImage };
const char* good_method_name(GoodMethod m);

struct GoodSetReport {
    unsigned m = 0;
    unsigned i = 0;
    std::uint64_t d = 0;        // q^2 + q + 1
    std::vector<Fe> good;       // sorted by encoding
    GoodMethod method = GoodMethod::RootScan;
    std::size_t count() const { return good.size(); }
};

// { a != 0 : Q_a has no root in F_{2^m} }, by per-parameter root scans.
GoodSetReport good_set_rootscan(const Field& fd, unsigned threads = 0);

// Same set as the complement of the image of g(u) = (u^d + 1) / u.
GoodSetReport good_set_gimage(const Field& fd);

Fe g_map(const Field& fd, Fe u);  // u != 0

struct LowerBound {
    double value;        // (2^m + 1 - (d-1)(d-2) 2^{m/2} - d) / d
    long long ceiling;
};

LowerBound lower_bound(const Field& fd);

struct FiberStats {
    std::map<std::uint64_t, std::uint64_t> class_counts;  // fiber size -> #C_i
    std::uint64_t gamma_fiber = 0;               // sum_i (i^2 - i) #C_i
    std::optional<std::uint64_t> gamma_direct;   // direct count on the residual curve
    std::uint64_t collision_pairs = 0;           // #{(x,y) : x != y, g(x) = g(y)}
    std::uint64_t c0 = 0;                        // #C_0
    std::uint64_t good_count = 0;                // #{v != 0 : fiber empty}
    LowerBound bound{0.0, 0};
};

// Fiber classes of g over F_{2^m}; the direct curve count scans 2^{2m}
// pairs and is gated at m <= 13.
FiberStats fiber_stats(const Field& fd, bool with_direct_count, unsigned threads = 0);

}  // namespace apntri
