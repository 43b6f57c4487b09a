#ifndef ASQF_GF_HPP
#define ASQF_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asqf/error.hpp"
#include "asqf/fqpoly.hpp"
#include "asqf/smallfield.hpp"

namespace asqf {

class FFElem;

/// Immutable description of a finite field tower
///
///     F_p  <  F_q = F_p[y]/(base_modulus),  q = p^s, q odd
///     F_q  <  F_{q^n} = F_q[x]/(top_modulus)
///
/// together with everything precomputed that element arithmetic and the
/// classification routines need: reduction rows for multiplication, the
/// coordinate matrices of the Frobenius powers x -> x^(q^i), the trace
/// functional, and the Gram matrix Tr(t^i t^j) of the trace bilinear form
/// in the polynomial basis 1, t, ..., t^(n-1).
///
/// Contexts are created through make_field and handed around as
/// shared_ptr<const FieldCtx>. Elements keep a plain pointer to their
/// context; mixing elements from two contexts is an error even if the
/// parameters coincide, because the moduli define the coordinates.
class FieldCtx {
public:
    uint32_t p = 0;          ///< characteristic (odd prime)
    uint32_t s = 0;          ///< [F_q : F_p]
    uint32_t n = 0;          ///< [F_{q^n} : F_q]
    uint32_t q = 0;          ///< p^s
    uint64_t order = 0;      ///< q^n
    uint64_t budget = 0;     ///< enumeration budget (element count)
    uint64_t ctx_id = 0;     ///< unique id, for error messages

    SmallField fp;           ///< tables for F_p
    SmallField fq;           ///< tables for F_q (same object as fp when s == 1)
    fqp::Poly top_modulus;   ///< monic degree-n modulus of the top extension

    // ---- element construction -------------------------------------------

    FFElem zero() const;
    FFElem one() const;
    /// Image of an F_q scalar (index) in the big field.
    FFElem from_fq(uint16_t c) const;
    /// The residue class of x, i.e. the generator t of the polynomial basis.
    FFElem gen() const;
    /// Element with the given coordinate vector (length <= n, low first).
    FFElem from_coords(const std::vector<uint16_t>& c) const;
    /// Element number `idx` in enumeration order: the coordinate vector is
    /// the base-q expansion of idx, low digit first. Element 0 is zero,
    /// element 1 is one.
    FFElem element_from_index(uint64_t idx) const;
    uint64_t index_of(const FFElem& x) const;

    // ---- arithmetic -------------------------------------------------------

    FFElem add(const FFElem& a, const FFElem& b) const;
    FFElem sub(const FFElem& a, const FFElem& b) const;
    FFElem neg(const FFElem& a) const;
    FFElem mul(const FFElem& a, const FFElem& b) const;
    FFElem inv(const FFElem& a) const;
    FFElem div(const FFElem& a, const FFElem& b) const;
    FFElem pow(const FFElem& a, uint64_t e) const;

    /// x^(q^i) for 0 <= i < n, from the precomputed coordinate maps.
    FFElem frobenius(const FFElem& x, uint32_t i) const;

    /// Absolute trace down to F_q, returned as an element of the big field.
    FFElem trace(const FFElem& x) const;
    /// Absolute trace as an F_q scalar (always exact, no membership doubt).
    uint16_t trace_scalar(const FFElem& x) const;
    /// Relative trace onto the intermediate field F_{q^k}, for k | n.
    FFElem trace_k(const FFElem& x, uint32_t k) const;
    /// Norm down to F_q, returned as an element of the big field.
    FFElem norm(const FFElem& x) const;
    uint16_t norm_scalar(const FFElem& x) const;

    /// Quadratic character of a nonzero element of the *base* field F_q,
    /// passed as its image in the big field: +1 for squares, -1 for
    /// nonsquares, 0 for zero. Throws NotInBaseField when x is not in F_q.
    int quadratic_character(const FFElem& x) const;

    bool is_in_base_field(const FFElem& x) const;
    /// Membership in the intermediate field F_{q^k} (k | n), i.e. x^(q^k) == x.
    bool is_in_subfield(const FFElem& x, uint32_t k) const;
    /// The F_q scalar an element of the base field corresponds to.
    uint16_t as_fq(const FFElem& x) const;

    /// Throws BudgetExceeded unless q^n <= budget. Enumeration loops call
    /// this once and then walk element_from_index(0 .. order-1).
    void check_enumeration_budget() const;

    /// Gram matrix entry Tr(t^i t^j) of the trace form, as an F_q scalar.
    uint16_t gram(uint32_t i, uint32_t j) const { return gram_[size_t(i) * n + j]; }

    uint16_t inv2() const { return inv2_; }

    /// Basis images (t^j)^(q^i) as coordinate vectors; row-major n x n per i.
    const std::vector<uint16_t>& frob_row(uint32_t i, uint32_t j) const;

private:
    friend std::shared_ptr<const FieldCtx> make_field(uint32_t, uint32_t, uint32_t,
                                                      const std::optional<std::vector<uint16_t>>&,
                                                      const std::optional<std::vector<uint16_t>>&,
                                                      uint64_t);
    FieldCtx() = default;
    void build_tables();
    void require_same_ctx(const FFElem& a, const FFElem& b) const;
    void require_ctx(const FFElem& a) const;

    std::vector<uint16_t> red_rows_;                    ///< x^(n+k) mod f, k = 0..n-2
    std::vector<std::vector<std::vector<uint16_t>>> frob_; ///< frob_[i][j] = coords of (t^j)^(q^i)
    std::vector<uint16_t> tr_row_;                      ///< Tr(t^j) as F_q scalars
    std::vector<uint16_t> gram_;                        ///< Tr(t^i t^j)
    uint16_t inv2_ = 0;

    std::vector<uint16_t> mul_coords(const std::vector<uint16_t>& a,
                                     const std::vector<uint16_t>& b) const;
};

using Ctx = std::shared_ptr<const FieldCtx>;

/// Build a field tower. p must be an odd prime (p = 2 is rejected, the
/// quadratic form theory needs odd characteristic), s, n >= 1.
///
/// base_modulus, when given, lists the s+1 F_p coefficients (low to high) of
/// a monic irreducible; top_modulus likewise over F_q with n+1 entries.
/// When absent, the lexicographically smallest monic irreducible of the
/// right degree is selected, scanning coefficient tuples (c_0, ..., c_{d-1})
/// in lexicographic order. The selection is deterministic, so equal
/// parameters always produce the same tower.
///
/// budget caps every enumeration of F_{q^n} (default 200000 elements).
Ctx make_field(uint32_t p, uint32_t s, uint32_t n,
               const std::optional<std::vector<uint16_t>>& base_modulus = std::nullopt,
               const std::optional<std::vector<uint16_t>>& top_modulus = std::nullopt,
               uint64_t budget = 200000);

/// Element of F_{q^n}: a coordinate vector in the polynomial basis of the
/// top extension, each coordinate an F_q index. Value type; all arithmetic
/// lives on FieldCtx, with operators forwarding for convenience.
class FFElem {
public:
    FFElem() = default;
    FFElem(const FieldCtx* ctx, std::vector<uint16_t> coords)
        : ctx_(ctx), c_(std::move(coords)) {}

    const FieldCtx* ctx() const { return ctx_; }
    const std::vector<uint16_t>& coords() const { return c_; }

    bool is_zero() const {
        for (uint16_t v : c_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const FFElem& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
    bool operator!=(const FFElem& o) const { return !(*this == o); }

    FFElem operator+(const FFElem& o) const { return ctx_->add(*this, o); }
    FFElem operator-(const FFElem& o) const { return ctx_->sub(*this, o); }
    FFElem operator*(const FFElem& o) const { return ctx_->mul(*this, o); }
    FFElem operator-() const { return ctx_->neg(*this); }

    std::string to_string() const;

private:
    friend class FieldCtx;
    const FieldCtx* ctx_ = nullptr;
    std::vector<uint16_t> c_;
};

/// Forward iteration over all q^n elements in index order, budget-checked
/// at construction.
class ElementRange {
public:
    explicit ElementRange(const Ctx& ctx) : ctx_(ctx.get()) {
        ctx_->check_enumeration_budget();
    }

    class iterator {
    public:
        iterator(const FieldCtx* c, uint64_t i) : ctx_(c), i_(i) {}
        FFElem operator*() const { return ctx_->element_from_index(i_); }
        iterator& operator++() { ++i_; return *this; }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }
    private:
        const FieldCtx* ctx_;
        uint64_t i_;
    };

    iterator begin() const { return iterator(ctx_, 0); }
    iterator end() const { return iterator(ctx_, ctx_->order); }

private:
    const FieldCtx* ctx_;
};

} // namespace asqf

#endif
