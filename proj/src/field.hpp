#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace apntri {

enum class errc {
    ok = 0,
    degree_out_of_range = 1,
    non_irreducible_modulus = 2,
    gcd_violation = 3,
    zero_parameter = 4,
    zero_direction = 5,
    division_by_zero = 6,
    field_too_large = 7,
    budget_exceeded = 8,
    bad_argument = 9,
    buffer_too_small = 10,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

/// One element of F_{2^m}, an m-bit coordinate vector in the polynomial
/// basis of its Field. Debug builds carry the owning field's tag so that
/// cross-field mixups trip an assert instead of corrupting a scan.
struct Fe {
    std::uint32_t v = 0;
#ifndef NDEBUG
    std::uint32_t tag = 0;
#endif

    bool operator==(const Fe& o) const { return v == o.v; }
    bool operator!=(const Fe& o) const { return v != o.v; }
    bool operator<(const Fe& o) const { return v < o.v; }
};

/// F_{2^m} with a fixed reduction modulus and Frobenius parameter q = 2^i.
/// Immutable after construction; all operations are pure, so one Field can
/// be shared freely across threads.
class Field {
public:
    static constexpr unsigned min_degree = 3;
    static constexpr unsigned max_degree = 24;

    // modulus == 0 selects the lexicographically smallest irreducible
    // polynomial of degree m (bit vector compared as an integer, constant
    // term in the least significant bit). theorem_mode additionally
    // requires m odd and gcd(i, m) = 1, the standing hypotheses of the
    // family results.
    Field(unsigned m, unsigned i, std::uint32_t modulus = 0, bool theorem_mode = false);

    unsigned degree() const { return m_; }          // m
    unsigned frob_exponent() const { return i_; }   // i
    std::uint64_t q() const { return q_; }          // 2^i
    std::uint64_t exp_d() const { return d_; }      // q^2 + q + 1
    std::uint32_t modulus() const { return mod_; }
    std::uint64_t order() const { return order_; }  // 2^m - 1
    bool theorem_mode() const { return theorem_mode_; }

    Fe zero() const { return make(0); }
    Fe one() const { return make(1); }
    Fe from_bits(std::uint32_t bits) const;
    std::uint32_t bits(Fe x) const { check(x); return x.v; }

    Fe add(Fe x, Fe y) const { check(x); check(y); return make(x.v ^ y.v); }
    Fe mul(Fe x, Fe y) const { check(x); check(y); return make(mul_bits(x.v, y.v)); }
    Fe sqr(Fe x) const { check(x); return make(sqr_bits(x.v)); }
    Fe inv(Fe x) const;
    Fe pow(Fe x, std::uint64_t e) const;
    Fe frob(Fe x) const;              // x^q, i.e. i repeated squarings
    Fe pow_d(Fe x) const;             // x^{q^2+q+1} = frob(frob(x)) * frob(x) * x
    int trace(Fe x) const;            // absolute trace, in {0,1}
    bool artin_schreier_solvable(Fe c) const { return trace(c) == 0; }

    bool is_zero(Fe x) const { check(x); return x.v == 0; }
    bool is_one(Fe x) const { check(x); return x.v == 1; }

    static bool is_irreducible(std::uint32_t poly, unsigned m);
    static std::uint32_t smallest_irreducible(unsigned m);

private:
    unsigned m_;
    unsigned i_;
    std::uint64_t q_;
    std::uint64_t d_;
    std::uint32_t mod_;       // including the degree-m bit
    std::uint64_t order_;
    bool theorem_mode_;
#ifndef NDEBUG
    std::uint32_t tag_;
#endif
    std::uint16_t sqr_spread_[256];  // byte -> bits interleaved with zeros

    std::uint32_t reduce(std::uint64_t acc) const;
    std::uint32_t mul_bits(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t sqr_bits(std::uint32_t a) const;

    Fe make(std::uint32_t v) const {
        Fe x;
        x.v = v;
#ifndef NDEBUG
        x.tag = tag_;
#endif
        return x;
    }
    void check(Fe x) const {
#ifndef NDEBUG
        assert(x.tag == tag_ && "element used with a foreign field context");
#endif
        (void)x;
    }
};

std::string to_hex(Fe x);                  // lowercase, "0x.." with LSB = alpha^0 coefficient
std::string modulus_hex(const Field& fd);  // same encoding, degree-m bit included

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace apntri
