#include "asqf/gf.hpp"

#include <atomic>
#include <sstream>

namespace asqf {

namespace {

std::atomic<uint64_t> g_ctx_counter{1};

} // namespace

// ---- FieldCtx internals ----------------------------------------------------

void FieldCtx::require_ctx(const FFElem& a) const {
    if (a.ctx() != this)
        throw Error(ErrorKind::ContextMismatch,
                    "element does not belong to field context #" + std::to_string(ctx_id));
}

void FieldCtx::require_same_ctx(const FFElem& a, const FFElem& b) const {
    require_ctx(a);
    require_ctx(b);
}

FFElem FieldCtx::zero() const { return FFElem(this, std::vector<uint16_t>(n, 0)); }

FFElem FieldCtx::one() const { return from_fq(1); }

FFElem FieldCtx::from_fq(uint16_t c) const {
    if (c >= q) throw Error(ErrorKind::InvalidInput, "F_q index out of range");
    std::vector<uint16_t> v(n, 0);
    v[0] = c;
    return FFElem(this, std::move(v));
}

FFElem FieldCtx::gen() const {
    std::vector<uint16_t> v(n, 0);
    if (n == 1) {
        // F_q[x]/(x + c): the class of x is the constant -c.
        v[0] = fq.neg(top_modulus[0]);
    } else {
        v[1] = 1;
    }
    return FFElem(this, std::move(v));
}

FFElem FieldCtx::from_coords(const std::vector<uint16_t>& c) const {
    if (c.size() > n) throw Error(ErrorKind::DegreeMismatch, "coordinate vector longer than n");
    std::vector<uint16_t> v(n, 0);
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= q) throw Error(ErrorKind::InvalidInput, "coordinate out of range");
        v[i] = c[i];
    }
    return FFElem(this, std::move(v));
}

FFElem FieldCtx::element_from_index(uint64_t idx) const {
    if (idx >= order) throw Error(ErrorKind::InvalidInput, "element index out of range");
    std::vector<uint16_t> v(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        v[i] = uint16_t(idx % q);
        idx /= q;
    }
    return FFElem(this, std::move(v));
}

uint64_t FieldCtx::index_of(const FFElem& x) const {
    require_ctx(x);
    uint64_t idx = 0;
    for (uint32_t i = n; i-- > 0;) idx = idx * q + x.coords()[i];
    return idx;
}

FFElem FieldCtx::add(const FFElem& a, const FFElem& b) const {
    require_same_ctx(a, b);
    std::vector<uint16_t> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = fq.add(a.coords()[i], b.coords()[i]);
    return FFElem(this, std::move(v));
}

FFElem FieldCtx::sub(const FFElem& a, const FFElem& b) const {
    require_same_ctx(a, b);
    std::vector<uint16_t> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = fq.sub(a.coords()[i], b.coords()[i]);
    return FFElem(this, std::move(v));
}

FFElem FieldCtx::neg(const FFElem& a) const {
    require_ctx(a);
    std::vector<uint16_t> v(n);
    for (uint32_t i = 0; i < n; ++i) v[i] = fq.neg(a.coords()[i]);
    return FFElem(this, std::move(v));
}

std::vector<uint16_t> FieldCtx::mul_coords(const std::vector<uint16_t>& a,
                                           const std::vector<uint16_t>& b) const {
    // Schoolbook product, then reduction of x^(n+k) via the precomputed rows.
    std::vector<uint16_t> prod(2 * n - 1, 0);
    for (uint32_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (uint32_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] = fq.add(prod[i + j], fq.mul(a[i], b[j]));
        }
    }
    std::vector<uint16_t> v(prod.begin(), prod.begin() + n);
    for (uint32_t k = 0; k + n < 2 * n - 1; ++k) {
        uint16_t c = prod[n + k];
        if (c == 0) continue;
        const uint16_t* row = &red_rows_[size_t(k) * n];
        for (uint32_t j = 0; j < n; ++j) v[j] = fq.add(v[j], fq.mul(c, row[j]));
    }
    return v;
}

FFElem FieldCtx::mul(const FFElem& a, const FFElem& b) const {
    require_same_ctx(a, b);
    return FFElem(this, mul_coords(a.coords(), b.coords()));
}

FFElem FieldCtx::inv(const FFElem& a) const {
    require_ctx(a);
    if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    fqp::Poly ap(a.coords());
    fqp::normalize(ap);
    fqp::Poly r = fqp::invmod(fq, ap, top_modulus);
    r.resize(n, 0);
    return FFElem(this, std::move(r));
}

FFElem FieldCtx::div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }

FFElem FieldCtx::pow(const FFElem& a, uint64_t e) const {
    require_ctx(a);
    FFElem r = one();
    FFElem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

const std::vector<uint16_t>& FieldCtx::frob_row(uint32_t i, uint32_t j) const {
    return frob_[i][j];
}

FFElem FieldCtx::frobenius(const FFElem& x, uint32_t i) const {
    require_ctx(x);
    if (i >= n) throw Error(ErrorKind::ShiftOutOfRange, "frobenius power must satisfy 0 <= i < n");
    std::vector<uint16_t> v(n, 0);
    for (uint32_t j = 0; j < n; ++j) {
        uint16_t c = x.coords()[j];
        if (c == 0) continue;
        const auto& img = frob_[i][j];
        for (uint32_t d = 0; d < n; ++d) v[d] = fq.add(v[d], fq.mul(c, img[d]));
    }
    return FFElem(this, std::move(v));
}

uint16_t FieldCtx::trace_scalar(const FFElem& x) const {
    require_ctx(x);
    uint16_t t = 0;
    for (uint32_t j = 0; j < n; ++j) t = fq.add(t, fq.mul(x.coords()[j], tr_row_[j]));
    return t;
}

FFElem FieldCtx::trace(const FFElem& x) const { return from_fq(trace_scalar(x)); }

FFElem FieldCtx::trace_k(const FFElem& x, uint32_t k) const {
    require_ctx(x);
    if (k == 0 || n % k != 0)
        throw Error(ErrorKind::NotADivisor, "trace_k: k must divide n");
    FFElem acc = x;
    for (uint32_t i = k; i < n; i += k) acc = add(acc, frobenius(x, i));
    return acc;
}

FFElem FieldCtx::norm(const FFElem& x) const {
    require_ctx(x);
    FFElem acc = x;
    for (uint32_t i = 1; i < n; ++i) acc = mul(acc, frobenius(x, i));
    if (!is_in_base_field(acc))
        throw Error(ErrorKind::InternalCheckFailed, "norm did not land in the base field");
    return acc;
}

uint16_t FieldCtx::norm_scalar(const FFElem& x) const { return as_fq(norm(x)); }

int FieldCtx::quadratic_character(const FFElem& x) const {
    return fq.eta(as_fq(x));
}

bool FieldCtx::is_in_base_field(const FFElem& x) const {
    require_ctx(x);
    for (uint32_t i = 1; i < n; ++i)
        if (x.coords()[i] != 0) return false;
    return true;
}

bool FieldCtx::is_in_subfield(const FFElem& x, uint32_t k) const {
    require_ctx(x);
    if (k == 0 || n % k != 0)
        throw Error(ErrorKind::NotADivisor, "is_in_subfield: k must divide n");
    if (k == n) return true;
    return frobenius(x, k) == x;
}

uint16_t FieldCtx::as_fq(const FFElem& x) const {
    if (!is_in_base_field(x))
        throw Error(ErrorKind::NotInBaseField, "element is not in F_q");
    return x.coords()[0];
}

void FieldCtx::check_enumeration_budget() const {
    if (order > budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "enumeration of " + std::to_string(order) + " elements exceeds budget " +
                        std::to_string(budget));
}

void FieldCtx::build_tables() {
    // Reduction rows: coordinates of x^(n+k) mod top_modulus, k = 0..n-2.
    red_rows_.assign(size_t(n > 0 ? n - 1 : 0) * n, 0);
    {
        // x^n = -(f_0 + f_1 x + ... + f_{n-1} x^{n-1})
        std::vector<uint16_t> cur(n, 0);
        for (uint32_t j = 0; j < n; ++j) cur[j] = fq.neg(top_modulus[j]);
        for (uint32_t k = 0; k + 1 < n; ++k) {
            for (uint32_t j = 0; j < n; ++j) red_rows_[size_t(k) * n + j] = cur[j];
            // multiply cur by x and reduce using the row for x^n
            std::vector<uint16_t> nxt(n, 0);
            uint16_t top = cur[n - 1];
            for (uint32_t j = n - 1; j >= 1; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top != 0)
                for (uint32_t j = 0; j < n; ++j)
                    nxt[j] = fq.add(nxt[j], fq.mul(top, fq.neg(top_modulus[j])));
            cur = std::move(nxt);
        }
    }

    inv2_ = fq.inv(fq.add(1, 1));

    // Frobenius tables. frob_[0] is the identity; frob_[1][j] = (t^q)^j;
    // higher rows apply the q-power map repeatedly.
    frob_.assign(n, std::vector<std::vector<uint16_t>>(n, std::vector<uint16_t>(n, 0)));
    for (uint32_t j = 0; j < n; ++j) frob_[0][j][j] = 1;
    if (n > 1) {
        FFElem t = gen();
        FFElem tq = pow(t, q);
        FFElem cur = one();
        for (uint32_t j = 0; j < n; ++j) {
            frob_[1][j] = cur.coords();
            cur = mul(cur, tq);
        }
        for (uint32_t i = 2; i < n; ++i) {
            for (uint32_t j = 0; j < n; ++j) {
                std::vector<uint16_t> v(n, 0);
                for (uint32_t c = 0; c < n; ++c) {
                    uint16_t w = frob_[i - 1][j][c];
                    if (w == 0) continue;
                    for (uint32_t d = 0; d < n; ++d)
                        v[d] = fq.add(v[d], fq.mul(w, frob_[1][c][d]));
                }
                frob_[i][j] = std::move(v);
            }
        }
    }

    // Trace functional and Gram matrix of the trace form.
    tr_row_.assign(n, 0);
    for (uint32_t j = 0; j < n; ++j) {
        std::vector<uint16_t> sum(n, 0);
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t d = 0; d < n; ++d) sum[d] = fq.add(sum[d], frob_[i][j][d]);
        for (uint32_t d = 1; d < n; ++d)
            if (sum[d] != 0)
                throw Error(ErrorKind::InternalCheckFailed, "trace of basis element not in F_q");
        tr_row_[j] = sum[0];
    }

    gram_.assign(size_t(n) * n, 0);
    {
        FFElem t = gen();
        std::vector<uint16_t> tr_pow(2 * n - 1, 0);
        FFElem cur = one();
        for (uint32_t k = 0; k < 2 * n - 1; ++k) {
            tr_pow[k] = trace_scalar(cur);
            cur = mul(cur, t);
        }
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = 0; j < n; ++j) gram_[size_t(i) * n + j] = tr_pow[i + j];
    }
}

// ---- make_field -------------------------------------------------------------

Ctx make_field(uint32_t p, uint32_t s, uint32_t n,
               const std::optional<std::vector<uint16_t>>& base_modulus,
               const std::optional<std::vector<uint16_t>>& top_modulus,
               uint64_t budget) {
    if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "characteristic 2 is not supported");
    if (s == 0 || n == 0)
        throw Error(ErrorKind::DegreeMismatch, "extension degrees must be >= 1");

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p = p;
    ctx->s = s;
    ctx->n = n;
    ctx->budget = budget;
    ctx->ctx_id = g_ctx_counter.fetch_add(1);
    ctx->fp = make_prime_smallfield(p);

    if (s == 1) {
        if (base_modulus && !base_modulus->empty())
            throw Error(ErrorKind::DegreeMismatch, "base modulus given for s = 1");
        ctx->fq = ctx->fp;
    } else {
        std::vector<uint16_t> m;
        if (base_modulus && !base_modulus->empty()) {
            m = *base_modulus;
            if (m.size() != size_t(s) + 1)
                throw Error(ErrorKind::DegreeMismatch, "base modulus must have degree s");
        } else {
            fqp::Poly sel = fqp::lex_smallest_irreducible(ctx->fp, s);
            m.assign(sel.begin(), sel.end());
        }
        ctx->fq = make_extension_smallfield(ctx->fp, m);
    }
    ctx->q = ctx->fq.q;

    uint64_t order = 1;
    for (uint32_t i = 0; i < n; ++i) {
        if (order > (uint64_t(1) << 62) / ctx->q)
            throw Error(ErrorKind::BudgetExceeded, "q^n too large for exact integer bookkeeping");
        order *= ctx->q;
    }
    ctx->order = order;

    if (top_modulus && !top_modulus->empty()) {
        if (top_modulus->size() != size_t(n) + 1)
            throw Error(ErrorKind::DegreeMismatch, "top modulus must have degree n");
        fqp::Poly f(top_modulus->begin(), top_modulus->end());
        if (f.back() != 1) throw Error(ErrorKind::InvalidInput, "top modulus must be monic");
        for (uint16_t c : f)
            if (c >= ctx->q) throw Error(ErrorKind::InvalidInput, "top modulus coefficient out of range");
        if (n == 1) {
            if (f.size() != 2 || f[1] != 1)
                throw Error(ErrorKind::DegreeMismatch, "top modulus must have degree 1");
        } else if (!fqp::is_irreducible(ctx->fq, f)) {
            throw Error(ErrorKind::ReducibleModulus, "top modulus is reducible over F_q");
        }
        ctx->top_modulus = f;
    } else {
        ctx->top_modulus = fqp::lex_smallest_irreducible(ctx->fq, n);
    }
    ctx->top_modulus.resize(size_t(n) + 1, 0);

    ctx->build_tables();
    return ctx;
}

std::string FFElem::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    os << ')';
    return os.str();
}

} // namespace asqf
