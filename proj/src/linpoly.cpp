#include "asqf/linpoly.hpp"

namespace asqf {

LinPoly make_linpoly(const Ctx& ctx, const std::vector<FFElem>& coeffs) {
    const FieldCtx* K = ctx.get();
    if (coeffs.size() > K->n)
        throw Error(ErrorKind::DegreeMismatch, "more than n q-power coefficients");
    LinPoly L;
    L.ctx = K;
    L.a.assign(K->n, K->zero());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].ctx() != K)
            throw Error(ErrorKind::ContextMismatch, "coefficient from a different field context");
        L.a[i] = coeffs[i];
    }
    return L;
}

LinPoly linpoly_zero(const Ctx& ctx) { return make_linpoly(ctx, {}); }

LinPoly linpoly_monomial(const Ctx& ctx, const FFElem& a, uint32_t i) {
    const FieldCtx* K = ctx.get();
    if (i >= K->n) throw Error(ErrorKind::ShiftOutOfRange, "q-power exponent must satisfy i < n");
    LinPoly L;
    L.ctx = K;
    L.a.assign(K->n, K->zero());
    L.a[i] = a;
    return L;
}

FFElem eval(const LinPoly& L, const FFElem& x) {
    const FieldCtx& K = *L.ctx;
    FFElem acc = K.zero();
    for (uint32_t i = 0; i < K.n; ++i) {
        if (L.a[i].is_zero()) continue;
        acc = K.add(acc, K.mul(L.a[i], K.frobenius(x, i)));
    }
    return acc;
}

LinPoly add(const LinPoly& A, const LinPoly& B) {
    if (A.ctx != B.ctx) throw Error(ErrorKind::ContextMismatch, "linpoly add across contexts");
    const FieldCtx& K = *A.ctx;
    LinPoly R = A;
    for (uint32_t i = 0; i < K.n; ++i) R.a[i] = K.add(A.a[i], B.a[i]);
    return R;
}

LinPoly sub(const LinPoly& A, const LinPoly& B) {
    if (A.ctx != B.ctx) throw Error(ErrorKind::ContextMismatch, "linpoly sub across contexts");
    const FieldCtx& K = *A.ctx;
    LinPoly R = A;
    for (uint32_t i = 0; i < K.n; ++i) R.a[i] = K.sub(A.a[i], B.a[i]);
    return R;
}

LinPoly scale(const LinPoly& A, const FFElem& c) {
    const FieldCtx& K = *A.ctx;
    LinPoly R = A;
    for (uint32_t i = 0; i < K.n; ++i) R.a[i] = K.mul(c, A.a[i]);
    return R;
}

LinPoly adjoint(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    LinPoly R;
    R.ctx = L.ctx;
    R.a.assign(K.n, K.zero());
    R.a[0] = L.a[0];
    for (uint32_t i = 1; i < K.n; ++i) {
        if (L.a[i].is_zero()) continue;
        R.a[K.n - i] = K.add(R.a[K.n - i], K.frobenius(L.a[i], K.n - i));
    }
    return R;
}

LinPoly symmetrize(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    FFElem half = K.from_fq(K.inv2());
    return scale(add(L, adjoint(L)), half);
}

bool is_self_adjoint(const LinPoly& L) { return adjoint(L) == L; }

LinPoly compose_mod(const LinPoly& A, const LinPoly& B) {
    if (A.ctx != B.ctx) throw Error(ErrorKind::ContextMismatch, "compose across contexts");
    const FieldCtx& K = *A.ctx;
    LinPoly R;
    R.ctx = A.ctx;
    R.a.assign(K.n, K.zero());
    for (uint32_t i = 0; i < K.n; ++i) {
        if (A.a[i].is_zero()) continue;
        for (uint32_t j = 0; j < K.n; ++j) {
            if (B.a[j].is_zero()) continue;
            uint32_t k = (i + j) % K.n;
            R.a[k] = K.add(R.a[k], K.mul(A.a[i], K.frobenius(B.a[j], i)));
        }
    }
    return R;
}

FqMat linpoly_matrix(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    FqMat m(K.n, K.n);
    FFElem t = K.gen();
    FFElem basis = K.one();
    for (uint32_t j = 0; j < K.n; ++j) {
        FFElem img = eval(L, basis);
        for (uint32_t i = 0; i < K.n; ++i) m.at(i, j) = img.coords()[i];
        basis = K.mul(basis, t);
    }
    return m;
}

std::vector<FFElem> SubspaceBasis::elements() const {
    uint64_t count = 1;
    for (size_t i = 0; i < rows.rows; ++i) count *= ctx->q;
    if (count > ctx->budget)
        throw Error(ErrorKind::BudgetExceeded,
                    "enumeration of " + std::to_string(count) +
                        " subspace elements exceeds budget " + std::to_string(ctx->budget));
    std::vector<FFElem> out;
    out.reserve(count);
    std::vector<uint16_t> c(rows.cols);
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::fill(c.begin(), c.end(), uint16_t(0));
        uint64_t rem = idx;
        for (size_t i = 0; i < rows.rows; ++i) {
            uint16_t d = uint16_t(rem % ctx->q);
            rem /= ctx->q;
            if (d == 0) continue;
            for (size_t j = 0; j < rows.cols; ++j)
                c[j] = ctx->fq.add(c[j], ctx->fq.mul(d, rows.at(i, j)));
        }
        out.push_back(ctx->from_coords(c));
    }
    return out;
}

SubspaceBasis kernel_basis(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    SubspaceBasis W;
    W.ctx = L.ctx;
    W.rows = fq_kernel(K.fq, linpoly_matrix(L));
    return W;
}

SubspaceBasis image_basis(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    SubspaceBasis W;
    W.ctx = L.ctx;
    W.rows = fq_row_space(K.fq, fq_transpose(linpoly_matrix(L)));
    return W;
}

SubspaceBasis perp_basis(const SubspaceBasis& W) {
    const FieldCtx& K = *W.ctx;
    // Tr(y w) = y^T G c for coordinate vectors y of the unknown and c of w,
    // G the Gram matrix of the trace form. One linear constraint per basis
    // row of W.
    FqMat constraints(W.rows.rows, K.n);
    for (size_t r = 0; r < W.rows.rows; ++r)
        for (uint32_t i = 0; i < K.n; ++i) {
            uint16_t acc = 0;
            for (uint32_t j = 0; j < K.n; ++j)
                acc = K.fq.add(acc, K.fq.mul(K.gram(i, j), W.rows.at(r, j)));
            constraints.at(r, i) = acc;
        }
    SubspaceBasis P;
    P.ctx = W.ctx;
    P.rows = fq_kernel(K.fq, constraints);
    return P;
}

FFMat dickson_matrix(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    FFMat M(&K, K.n, K.n);
    for (uint32_t i = 0; i < K.n; ++i)
        for (uint32_t j = 0; j < K.n; ++j) {
            uint32_t idx = (j + K.n - i) % K.n;
            M.at(i, j) = K.frobenius(L.a[idx], i);
        }
    return M;
}

FFMat dickson_leading(const FFMat& M, size_t k) {
    if (k < 1 || k > M.rows)
        throw Error(ErrorKind::RankViewOutOfRange, "leading submatrix needs 1 <= k <= n");
    const FieldCtx* K = M.a.front().ctx();
    FFMat S(K, k, k);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) S.at(i, j) = M.at(i, j);
    return S;
}

FFMat dickson_shifted(const FFMat& M, size_t r) {
    if (r < 1 || r >= M.rows)
        throw Error(ErrorKind::RankViewOutOfRange, "shifted submatrix needs 1 <= r < n");
    const FieldCtx* K = M.a.front().ctx();
    FFMat S(K, r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) S.at(i, j) = M.at(i + 1, j);
    return S;
}

fqp::Poly lstar(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    fqp::Poly P(K.n, 0);
    for (uint32_t i = 0; i < K.n; ++i) {
        if (!K.is_in_base_field(L.a[i]))
            throw Error(ErrorKind::CoefficientsNotInBaseField,
                        "associate polynomial needs all coefficients in F_q");
        P[i] = K.as_fq(L.a[i]);
    }
    fqp::normalize(P);
    return P;
}

} // namespace asqf
