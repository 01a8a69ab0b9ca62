#include "field.hpp"

#include <atomic>
#include <cstdio>

namespace apntri {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

namespace {

// degree of a nonzero F_2[T] polynomial stored bitwise
int poly_degree(std::uint64_t p) {
    int d = -1;
    while (p != 0) {
        ++d;
        p >>= 1;
    }
    return d;
}

// remainder of a mod b over F_2[T], b != 0
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    int db = poly_degree(b);
    int da = poly_degree(a);
    while (da >= db) {
        a ^= b << (da - db);
        da = poly_degree(a);
    }
    return a;
}

#ifndef NDEBUG
std::atomic<std::uint32_t> next_field_tag{1};
#endif

}  // namespace

bool Field::is_irreducible(std::uint32_t poly, unsigned m) {
    if (poly_degree(poly) != static_cast<int>(m)) return false;
    if ((poly & 1u) == 0) return false;  // divisible by T
    // exhaustive trial division by every polynomial of degree 1..m/2
    for (unsigned d = 1; 2 * d <= m; ++d) {
        for (std::uint64_t q = (1ull << d); q < (2ull << d); ++q) {
            if (poly_mod(poly, q) == 0) return false;
        }
    }
    return true;
}

std::uint32_t Field::smallest_irreducible(unsigned m) {
    for (std::uint32_t p = (1u << m) + 1; p < (2u << m); p += 2) {
        if (is_irreducible(p, m)) return p;
    }
    throw error(errc::non_irreducible_modulus, "no irreducible polynomial found");  // unreachable
}

Field::Field(unsigned m, unsigned i, std::uint32_t modulus, bool theorem_mode)
    : m_(m), i_(i), theorem_mode_(theorem_mode) {
    if (m < min_degree || m > max_degree)
        throw error(errc::degree_out_of_range, "extension degree m must be in [3, 24]");
    if (theorem_mode && (gcd_u64(i, m) != 1 || m % 2 == 0))
        throw error(errc::gcd_violation, "theorem mode requires odd m and gcd(i, m) = 1");
    if (i < 1 || i >= m)
        throw error(errc::bad_argument, "frobenius exponent i out of range");

    if (modulus == 0) {
        mod_ = smallest_irreducible(m);
    } else {
        if (!is_irreducible(modulus, m))
            throw error(errc::non_irreducible_modulus, "modulus is not irreducible of degree m");
        mod_ = modulus;
    }

    q_ = 1ull << i;
    d_ = q_ * q_ + q_ + 1;
    order_ = (1ull << m) - 1;
#ifndef NDEBUG
    tag_ = next_field_tag.fetch_add(1);
#endif
    for (unsigned b = 0; b < 256; ++b) {
        std::uint16_t s = 0;
        for (unsigned k = 0; k < 8; ++k)
            if (b & (1u << k)) s |= static_cast<std::uint16_t>(1u << (2 * k));
        sqr_spread_[b] = s;
    }
}

Fe Field::from_bits(std::uint32_t bits) const {
    if (bits > order_) throw error(errc::bad_argument, "element encoding exceeds field size");
    return make(bits);
}

std::uint32_t Field::reduce(std::uint64_t acc) const {
    for (int b = 2 * static_cast<int>(m_) - 2; b >= static_cast<int>(m_); --b) {
        if (acc & (1ull << b)) acc ^= static_cast<std::uint64_t>(mod_) << (b - m_);
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t Field::mul_bits(std::uint32_t a, std::uint32_t b) const {
    // carry-less product, then reduction mod the field polynomial
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b != 0) {
        if (b & 1u) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return reduce(acc);
}

std::uint32_t Field::sqr_bits(std::uint32_t a) const {
    std::uint64_t acc = static_cast<std::uint64_t>(sqr_spread_[a & 0xff]) |
                        (static_cast<std::uint64_t>(sqr_spread_[(a >> 8) & 0xff]) << 16) |
                        (static_cast<std::uint64_t>(sqr_spread_[(a >> 16) & 0xff]) << 32);
    return reduce(acc);
}

Fe Field::inv(Fe x) const {
    check(x);
    if (x.v == 0) throw error(errc::division_by_zero, "inverse of zero");
    return pow(x, order_ - 1);  // x^{2^m - 2}
}

Fe Field::pow(Fe x, std::uint64_t e) const {
    check(x);
    std::uint32_t base = x.v;
    std::uint32_t r = 1;
    while (e != 0) {
        if (e & 1ull) r = mul_bits(r, base);
        base = sqr_bits(base);
        e >>= 1;
    }
    return make(r);
}

Fe Field::frob(Fe x) const {
    check(x);
    std::uint32_t r = x.v;
    for (unsigned k = 0; k < i_; ++k) r = sqr_bits(r);
    return make(r);
}

Fe Field::pow_d(Fe x) const {
    Fe xq = frob(x);
    Fe xq2 = frob(xq);
    return mul(mul(xq2, xq), x);
}

int Field::trace(Fe x) const {
    check(x);
    std::uint32_t acc = 0;
    std::uint32_t t = x.v;
    for (unsigned k = 0; k < m_; ++k) {
        acc ^= t;
        t = sqr_bits(t);
    }
    // the trace lands in F_2, so acc is 0 or 1 here
    return static_cast<int>(acc & 1u);
}

std::string to_hex(Fe x) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", x.v);
    return buf;
}

std::string modulus_hex(const Field& fd) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", fd.modulus());
    return buf;
}

}  // namespace apntri
