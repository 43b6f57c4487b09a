#ifndef ASQF_SMALLFIELD_HPP
#define ASQF_SMALLFIELD_HPP

#include <cstdint>
#include <vector>

#include "asqf/error.hpp"

namespace asqf {

/// Table-driven arithmetic for a small finite field F_q, q = p^s odd.
///
/// Elements are indices 0 .. q-1. The index encodes the polynomial-basis
/// coordinates over F_p in base p, least significant digit first, so 0 is
/// the zero element, 1 is the multiplicative identity, and for prime fields
/// the index is simply the residue. Index order is the canonical element
/// order used everywhere (enumeration, lexicographic modulus selection).
///
/// q is capped at 1024 so the q*q tables stay small. That is far above
/// every field this library is meant for; exact classification work is
/// enumeration-bounded long before table size matters.
struct SmallField {
    uint32_t p = 0;                    ///< characteristic
    uint32_t s = 0;                    ///< extension degree over F_p
    uint32_t q = 0;                    ///< p^s
    std::vector<uint16_t> modulus;     ///< monic degree-s modulus over F_p; empty when s == 1
    std::vector<uint16_t> add_t;       ///< q*q addition table
    std::vector<uint16_t> mul_t;       ///< q*q multiplication table
    std::vector<uint16_t> neg_t;       ///< additive inverses
    std::vector<uint16_t> inv_t;       ///< multiplicative inverses, inv_t[0] = 0 (unused)
    std::vector<int8_t> eta_t;         ///< cached quadratic character; empty below the cache threshold

    uint16_t add(uint16_t a, uint16_t b) const { return add_t[size_t(a) * q + b]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_t[size_t(a) * q + b]; }
    uint16_t neg(uint16_t a) const { return neg_t[a]; }
    uint16_t sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }

    uint16_t inv(uint16_t a) const {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero in F_q");
        return inv_t[a];
    }

    uint16_t div(uint16_t a, uint16_t b) const { return mul(a, inv(b)); }

    uint16_t pow(uint16_t a, uint64_t e) const {
        uint16_t r = 1;
        uint16_t base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    /// Quadratic character: 0 for 0, +1 for nonzero squares, -1 otherwise.
    /// Computed as a^((q-1)/2) on the fly for small q, from the cached table
    /// once q crosses the cache threshold.
    int eta(uint16_t a) const {
        if (a == 0) return 0;
        if (!eta_t.empty()) return eta_t[a];
        uint16_t v = pow(a, (q - 1) / 2);
        return v == 1 ? 1 : -1;
    }

    /// Size above which eta is precomputed instead of exponentiated per call.
    static constexpr uint32_t kEtaCacheThreshold = 64;
};

/// Tables for the prime field F_p. Requires p an odd prime (p <= 1021).
SmallField make_prime_smallfield(uint32_t p);

/// Tables for F_{p^s} = F_p[y]/(modulus), s >= 2, modulus monic irreducible
/// of degree s over F_p (coefficients low to high, length s+1).
SmallField make_extension_smallfield(const SmallField& fp, const std::vector<uint16_t>& modulus);

} // namespace asqf

#endif
