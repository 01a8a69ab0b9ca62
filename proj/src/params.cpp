#include "params.hpp"

#include <cmath>
#include <vector>

#include "parallel.hpp"
#include "univariate.hpp"

namespace apntri {

const char* good_method_name(GoodMethod m) {
    return m == GoodMethod::RootScan ? "rootscan" : "gimage";
}

GoodSetReport good_set_rootscan(const Field& fd, unsigned threads) {
    GoodSetReport rep;
    rep.m = fd.degree();
    rep.i = fd.frob_exponent();
    rep.d = fd.exp_d();
    rep.method = GoodMethod::RootScan;

    const std::uint64_t order = fd.order();
    // t^d is shared by every parameter; hoist it out of the a-loop
    std::vector<Fe> powd(order + 1, fd.zero());
    for (std::uint64_t t = 1; t <= order; ++t)
        powd[t] = fd.pow_d(fd.from_bits(static_cast<std::uint32_t>(t)));

    std::vector<std::uint8_t> good(order + 1, 0);
    Fe one = fd.one();
    scan_chunks(order, 64, threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t) {
        for (std::uint64_t v = begin; v < end; ++v) {
            std::uint32_t abits = static_cast<std::uint32_t>(v) + 1;
            Fe a = fd.from_bits(abits);
            bool rootfree = true;
            for (std::uint64_t t = 1; t <= order && rootfree; ++t) {
                Fe tt = fd.from_bits(static_cast<std::uint32_t>(t));
                Fe val = fd.add(fd.add(powd[t], fd.mul(a, tt)), one);
                if (fd.is_zero(val)) rootfree = false;
            }
            good[abits] = rootfree ? 1 : 0;
        }
        return true;
    });

    for (std::uint64_t a = 1; a <= order; ++a)
        if (good[a]) rep.good.push_back(fd.from_bits(static_cast<std::uint32_t>(a)));
    return rep;
}

Fe g_map(const Field& fd, Fe u) {
    if (fd.is_zero(u)) throw error(errc::division_by_zero, "g(u) needs u != 0");
    return fd.mul(fd.add(fd.pow_d(u), fd.one()), fd.inv(u));
}

GoodSetReport good_set_gimage(const Field& fd) {
    GoodSetReport rep;
    rep.m = fd.degree();
    rep.i = fd.frob_exponent();
    rep.d = fd.exp_d();
    rep.method = GoodMethod::GImage;

    const std::uint64_t order = fd.order();
    std::vector<std::uint8_t> in_image(order + 1, 0);
    for (std::uint64_t u = 1; u <= order; ++u)
        in_image[fd.bits(g_map(fd, fd.from_bits(static_cast<std::uint32_t>(u))))] = 1;
    for (std::uint64_t a = 1; a <= order; ++a)
        if (!in_image[a]) rep.good.push_back(fd.from_bits(static_cast<std::uint32_t>(a)));
    return rep;
}

LowerBound lower_bound(const Field& fd) {
    long double d = static_cast<long double>(fd.exp_d());
    long double two_m = static_cast<long double>(1ull << fd.degree());
    long double sqrt_two_m = std::sqrt(two_m);
    long double value = (two_m + 1.0L - (d - 1.0L) * (d - 2.0L) * sqrt_two_m - d) / d;
    LowerBound b;
    b.value = static_cast<double>(value);
    b.ceiling = static_cast<long long>(std::ceil(value));
    return b;
}

FiberStats fiber_stats(const Field& fd, bool with_direct_count, unsigned threads) {
    FiberStats stats;
    stats.bound = lower_bound(fd);

    const std::uint64_t order = fd.order();
    std::vector<std::uint32_t> fiber(order + 1, 0);  // value -> #g^{-1}(value)
    for (std::uint64_t u = 1; u <= order; ++u)
        ++fiber[fd.bits(g_map(fd, fd.from_bits(static_cast<std::uint32_t>(u))))];

    for (std::uint64_t v = 0; v <= order; ++v) {
        std::uint64_t f = fiber[v];
        ++stats.class_counts[f];
        if (f > 1) stats.collision_pairs += f * (f - 1);
        if (f == 0) {
            ++stats.c0;
            if (v != 0) ++stats.good_count;
        }
    }
    for (const auto& [size, cnt] : stats.class_counts)
        stats.gamma_fiber += (size * size - size) * cnt;

    if (with_direct_count) {
        if (fd.degree() > 13)
            throw error(errc::field_too_large, "direct curve count scans 2^{2m} pairs; m <= 13");
        // affine points of xy * sum_{j=0}^{d-2} x^{d-2-j} y^j + 1 = 0 with x, y != 0
        const std::size_t dm1 = static_cast<std::size_t>(fd.exp_d() - 1);
        std::vector<std::uint64_t> per_chunk(chunk_count(order, 16), 0);
        scan_chunks(order, 16, threads, [&](std::uint64_t begin, std::uint64_t end, std::size_t ci) {
            std::uint64_t local = 0;
            std::vector<Fe> xp(dm1);  // x^0 .. x^{d-2}
            for (std::uint64_t xv = begin; xv < end; ++xv) {
                Fe x = fd.from_bits(static_cast<std::uint32_t>(xv) + 1);
                xp[0] = fd.one();
                for (std::size_t k = 1; k < dm1; ++k) xp[k] = fd.mul(xp[k - 1], x);
                for (std::uint64_t yv = 1; yv <= order; ++yv) {
                    Fe y = fd.from_bits(static_cast<std::uint32_t>(yv));
                    // S = sum_j x^{d-2-j} y^j by Horner in y, highest power
                    // of y first
                    Fe s = fd.zero();
                    for (std::size_t k = 0; k < dm1; ++k) s = fd.add(fd.mul(s, y), xp[k]);
                    Fe val = fd.add(fd.mul(fd.mul(x, y), s), fd.one());
                    if (fd.is_zero(val)) ++local;
                }
            }
            per_chunk[ci] += local;
            return true;
        });
        std::uint64_t total = 0;
        for (auto c : per_chunk) total += c;
        stats.gamma_direct = total;
    }
    return stats;
}

}  // namespace apntri
