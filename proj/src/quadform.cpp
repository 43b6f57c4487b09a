#include "asqf/quadform.hpp"

#include <random>

namespace asqf {

namespace {

// Sign (-1)^e as an integer.
int neg1_pow(uint64_t e) { return (e & 1) ? -1 : 1; }

FFElem minor_det(const FieldCtx& K, const FFMat& M, const std::vector<size_t>& rows,
                 const std::vector<size_t>& cols) {
    FFMat S(&K, rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) S.at(i, j) = M.at(rows[i], cols[j]);
    return ff_det(K, std::move(S));
}

uint64_t int_pow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

FqMat associated_matrix(const LinPoly& ell, const std::vector<FFElem>& basis) {
    const FieldCtx& K = *ell.ctx;
    if (basis.size() != K.n) throw Error(ErrorKind::NotABasis, "basis must have n elements");
    FqMat B(K.n, K.n);
    for (uint32_t j = 0; j < K.n; ++j) {
        if (basis[j].ctx() != &K)
            throw Error(ErrorKind::ContextMismatch, "basis element from a different context");
        for (uint32_t i = 0; i < K.n; ++i) B.at(i, j) = basis[j].coords()[i];
    }
    if (fq_rank(K.fq, B) != K.n)
        throw Error(ErrorKind::NotABasis, "given elements are F_q-linearly dependent");

    std::vector<FFElem> img;
    img.reserve(K.n);
    for (uint32_t j = 0; j < K.n; ++j) img.push_back(eval(ell, basis[j]));

    FqMat C(K.n, K.n);
    for (uint32_t i = 0; i < K.n; ++i)
        for (uint32_t j = i; j < K.n; ++j) {
            uint16_t tij = K.trace_scalar(K.mul(basis[i], img[j]));
            uint16_t tji = K.trace_scalar(K.mul(basis[j], img[i]));
            uint16_t v = K.fq.mul(K.inv2(), K.fq.add(tij, tji));
            C.at(i, j) = v;
            C.at(j, i) = v;
        }
    return C;
}

DiagResult diagonalize(const SmallField& F, const FqMat& C) {
    if (C.rows != C.cols) throw Error(ErrorKind::DegreeMismatch, "diagonalize: non-square matrix");
    size_t n = C.rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (C.at(i, j) != C.at(j, i))
                throw Error(ErrorKind::InvalidInput, "diagonalize: matrix not symmetric");

    FqMat A = C;
    FqMat S = FqMat::identity(n); // invariant: S^T C S == A

    auto swap_sym = [&](size_t i, size_t j) {
        for (size_t r = 0; r < n; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (size_t c = 0; c < n; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (size_t r = 0; r < n; ++r) std::swap(S.at(r, i), S.at(r, j));
    };
    // column i += c * column j, mirrored on rows
    auto add_sym = [&](size_t i, size_t j, uint16_t c) {
        for (size_t r = 0; r < n; ++r) A.at(r, i) = F.add(A.at(r, i), F.mul(c, A.at(r, j)));
        for (size_t cc = 0; cc < n; ++cc) A.at(i, cc) = F.add(A.at(i, cc), F.mul(c, A.at(j, cc)));
        for (size_t r = 0; r < n; ++r) S.at(r, i) = F.add(S.at(r, i), F.mul(c, S.at(r, j)));
    };

    size_t done = 0;
    for (size_t k = 0; k < n; ++k) {
        if (A.at(k, k) == 0) {
            size_t j = k + 1;
            while (j < n && A.at(j, j) == 0) ++j;
            if (j < n) {
                swap_sym(k, j);
            } else {
                // whole trailing diagonal is zero: repair with the smallest
                // off-diagonal nonzero entry, if any
                size_t bi = n, bj = n;
                for (size_t i = k; i < n && bi == n; ++i)
                    for (size_t jj = i + 1; jj < n; ++jj)
                        if (A.at(i, jj) != 0) {
                            bi = i;
                            bj = jj;
                            break;
                        }
                if (bi == n) break; // trailing block is zero, we are done
                add_sym(bi, bj, 1); // makes A[bi][bi] = 2 A[bi][bj] != 0 in odd characteristic
                if (bi != k) swap_sym(k, bi);
            }
        }
        uint16_t piv = A.at(k, k);
        uint16_t piv_inv = F.inv(piv);
        for (size_t i = k + 1; i < n; ++i) {
            uint16_t c = A.at(k, i);
            if (c == 0) continue;
            add_sym(i, k, F.neg(F.mul(c, piv_inv)));
        }
        ++done;
    }

    DiagResult res;
    res.d.assign(n, 0);
    for (size_t k = 0; k < n; ++k) res.d[k] = A.at(k, k);
    res.r = done;
    for (size_t k = 0; k < done; ++k)
        if (res.d[k] == 0)
            throw Error(ErrorKind::InternalCheckFailed, "diagonalize: zero pivot recorded");
    for (size_t k = done; k < n; ++k)
        if (res.d[k] != 0)
            throw Error(ErrorKind::InternalCheckFailed, "diagonalize: nonzero entry after break");

    auto Pinv = fq_inverse(F, S);
    if (!Pinv)
        throw Error(ErrorKind::InternalCheckFailed, "diagonalize: transform matrix singular");
    res.P = *Pinv;

    // P^T D P must reproduce C exactly.
    FqMat D(n, n);
    for (size_t k = 0; k < n; ++k) D.at(k, k) = res.d[k];
    FqMat check = fq_mul(F, fq_mul(F, fq_transpose(res.P), D), res.P);
    if (!(check == C))
        throw Error(ErrorKind::InternalCheckFailed, "diagonalize: P^T D P != C");
    return res;
}

namespace {

QuadClass class_from_diag(const SmallField& F, const DiagResult& dr, const char* method) {
    QuadClass c;
    c.r = int(dr.r);
    c.method = method;
    if (dr.r == 0) {
        c.epsilon = 1;
        c.degenerate = true;
        return c;
    }
    uint16_t prod = 1;
    for (size_t i = 0; i < dr.r; ++i) prod = F.mul(prod, dr.d[i]);
    c.epsilon = F.eta(prod);
    c.degenerate = false;
    return c;
}

std::vector<FFElem> polynomial_basis(const FieldCtx& K) {
    std::vector<FFElem> b;
    b.reserve(K.n);
    FFElem t = K.gen();
    FFElem cur = K.one();
    for (uint32_t j = 0; j < K.n; ++j) {
        b.push_back(cur);
        cur = K.mul(cur, t);
    }
    return b;
}

// A fixed pseudorandom second basis, used to confirm that the diagonal
// route is basis independent.
std::vector<FFElem> alternative_basis(const FieldCtx& K) {
    std::mt19937_64 rng(0x414c54424153ULL);
    for (int attempt = 0; attempt < 64; ++attempt) {
        FqMat B(K.n, K.n);
        for (auto& v : B.a) v = uint16_t(rng() % K.q);
        if (fq_rank(K.fq, B) != K.n) continue;
        std::vector<FFElem> basis;
        basis.reserve(K.n);
        for (uint32_t j = 0; j < K.n; ++j) {
            std::vector<uint16_t> coords(K.n);
            for (uint32_t i = 0; i < K.n; ++i) coords[i] = B.at(i, j);
            basis.push_back(K.from_coords(coords));
        }
        return basis;
    }
    throw Error(ErrorKind::InternalCheckFailed, "could not draw an invertible basis matrix");
}

} // namespace

QuadClass classify_via_diag(const LinPoly& ell) {
    const FieldCtx& K = *ell.ctx;
    LinPoly L = symmetrize(ell);
    if (L.is_zero()) return QuadClass{0, 1, true, "diag"};

    FqMat C = associated_matrix(ell, polynomial_basis(K));
    QuadClass c1 = class_from_diag(K.fq, diagonalize(K.fq, C), "diag");

    FqMat C2 = associated_matrix(ell, alternative_basis(K));
    QuadClass c2 = class_from_diag(K.fq, diagonalize(K.fq, C2), "diag");
    if (!c1.same_class(c2))
        throw Error(ErrorKind::InternalCheckFailed,
                    "diagonal classification depends on the basis");
    if (c1.r == 0)
        throw Error(ErrorKind::InternalCheckFailed, "nonzero L produced the zero form");
    return c1;
}

QuadClass classify_via_dickson(const LinPoly& ell) {
    const FieldCtx& K = *ell.ctx;
    LinPoly L = symmetrize(ell);
    if (L.is_zero()) return QuadClass{0, 1, true, "dickson"};

    FFMat M = dickson_matrix(L);
    size_t r = ff_rank(K, M);
    if (r == 0)
        throw Error(ErrorKind::InternalCheckFailed, "nonzero L has zero Dickson matrix");

    QuadClass c;
    c.r = int(r);
    c.degenerate = false;
    c.method = "dickson";

    if (r == K.n) {
        FFElem det = ff_det(K, M);
        uint16_t v;
        try {
            v = K.as_fq(det);
        } catch (const Error&) {
            throw Error(ErrorKind::InternalCheckFailed, "det M_L not in F_q");
        }
        c.epsilon = neg1_pow(K.n - 1) * K.fq.eta(v);
    } else {
        FFElem det_r = ff_det(K, dickson_leading(M, r));
        if (det_r.is_zero())
            throw Error(ErrorKind::InternalCheckFailed, "leading r x r minor vanished at rank r");
        FFElem det_s = ff_det(K, dickson_shifted(M, r));
        if (K.pow(det_r, K.q + 1) != K.mul(det_s, det_s))
            throw Error(ErrorKind::InternalCheckFailed,
                        "minor identity (det M^(r))^(q+1) = (det M^(r,1))^2 failed");
        c.epsilon = (K.pow(det_r, (K.q + 1) / 2) == det_s) ? 1 : -1;

        // Independent epsilon when l literally has degree q^m with 2m = n - r.
        if ((K.n - r) % 2 == 0) {
            uint32_t m = (K.n - uint32_t(r)) / 2;
            if (ell.qdeg() == int(m) && m > 0) {
                const FFElem& a = ell.a[m];
                uint64_t geom = 0, qp = 1;
                for (uint32_t i = 0; i < m; ++i) {
                    geom += qp;
                    qp *= K.q;
                }
                uint64_t e = 2 * int_pow(K.q, uint32_t(r)) * geom;
                FFElem val = K.mul(K.pow(a, e), det_r);
                uint16_t vf;
                try {
                    vf = K.as_fq(val);
                } catch (const Error&) {
                    throw Error(ErrorKind::InternalCheckFailed,
                                "a^(2 q^r (q^m-1)/(q-1)) det M^(r) not in F_q");
                }
                int eps3 = neg1_pow(K.n - 1) * K.fq.eta(vf);
                if (eps3 != c.epsilon)
                    throw Error(ErrorKind::InternalCheckFailed,
                                "leading-coefficient epsilon disagrees with minor epsilon");
            }
        }
    }
    return c;
}

uint16_t form_value(const LinPoly& ell, const FFElem& x) {
    const FieldCtx& K = *ell.ctx;
    return K.trace_scalar(K.mul(x, eval(ell, x)));
}

uint64_t root_count(const FieldCtx& K, int r, int epsilon, uint16_t lambda) {
    if (r < 0 || uint32_t(r) > K.n) throw Error(ErrorKind::InvalidInput, "rank out of range");
    int64_t qn1 = int64_t(K.order / K.q); // q^(n-1)
    int64_t v;
    if (r % 2 == 0) {
        int s = neg1_pow(uint64_t(K.q - 1) / 2 * uint64_t(r / 2));
        int64_t dev = int64_t(K.order / K.q / int_pow(K.q, uint32_t(r / 2)));
        if (lambda == 0)
            v = qn1 + int64_t(s * epsilon) * int64_t(K.q - 1) * dev;
        else
            v = qn1 - int64_t(s * epsilon) * dev;
    } else {
        if (lambda == 0) {
            v = qn1;
        } else {
            int s = neg1_pow(uint64_t(K.q - 1) / 2 * uint64_t((r - 1) / 2));
            int64_t dev = int64_t(K.order / K.q / int_pow(K.q, uint32_t((r - 1) / 2)));
            v = qn1 + int64_t(s * epsilon * K.fq.eta(lambda)) * dev;
        }
    }
    if (v < 0) throw Error(ErrorKind::InternalCheckFailed, "negative root count");
    return uint64_t(v);
}

std::vector<uint64_t> root_count_distribution(const FieldCtx& K, int r, int epsilon) {
    std::vector<uint64_t> d(K.q);
    for (uint32_t l = 0; l < K.q; ++l) d[l] = root_count(K, r, epsilon, uint16_t(l));
    return d;
}

uint64_t root_count_bruteforce(const LinPoly& ell, uint16_t lambda) {
    const FieldCtx& K = *ell.ctx;
    K.check_enumeration_budget();
    uint64_t cnt = 0;
    for (uint64_t i = 0; i < K.order; ++i)
        if (form_value(ell, K.element_from_index(i)) == lambda) ++cnt;
    return cnt;
}

std::pair<QuadClass, std::vector<uint64_t>> classify_via_bruteforce(const LinPoly& ell) {
    const FieldCtx& K = *ell.ctx;
    K.check_enumeration_budget();
    std::vector<uint64_t> counts(K.q, 0);
    for (uint64_t i = 0; i < K.order; ++i)
        ++counts[form_value(ell, K.element_from_index(i))];

    uint64_t total = 0;
    for (uint64_t c : counts) total += c;
    if (total != K.order)
        throw Error(ErrorKind::InternalCheckFailed, "root counts do not sum to q^n");

    std::vector<std::pair<int, int>> matches;
    for (int r = 0; r <= int(K.n); ++r) {
        for (int eps : {1, -1}) {
            if (r == 0 && eps == -1) continue; // the zero form is (0, +1) by convention
            bool ok = true;
            for (uint32_t l = 0; l < K.q && ok; ++l)
                ok = (root_count(K, r, eps, uint16_t(l)) == counts[l]);
            if (ok) matches.emplace_back(r, eps);
        }
    }
    if (matches.empty())
        throw Error(ErrorKind::NoConsistentClass,
                    "observed distribution matches no (r, epsilon)");
    if (matches.size() > 1)
        throw Error(ErrorKind::NoConsistentClass,
                    "observed distribution matches several (r, epsilon) pairs");

    QuadClass c;
    c.r = matches[0].first;
    c.epsilon = matches[0].second;
    c.degenerate = (c.r == 0);
    c.method = "bruteforce";
    return {c, counts};
}

QuadClass classify_n4(const FFElem& a, const FFElem& b, const FFElem& c) {
    const FieldCtx& K = *a.ctx();
    if (b.ctx() != &K || c.ctx() != &K)
        throw Error(ErrorKind::ContextMismatch, "coefficients from different contexts");
    if (K.n != 4) throw Error(ErrorKind::DegreeMismatch, "closed-form classifier needs n = 4");
    FFElem two = K.from_fq(K.fq.add(1, 1));
    LinPoly ell;
    ell.ctx = &K;
    ell.a = {c, K.mul(two, b), K.mul(two, a), K.zero()};
    LinPoly L = symmetrize(ell);
    if (L.is_zero())
        throw Error(ErrorKind::DegenerateForm, "symmetrized polynomial is zero");

    FFMat M = dickson_matrix(L);
    FFElem d2_lead = minor_det(K, M, {0, 1}, {0, 1});
    FFElem d2_mid = minor_det(K, M, {0, 1}, {1, 2});
    FFElem d2_right = minor_det(K, M, {0, 1}, {2, 3});
    FFElem d3_lead = minor_det(K, M, {0, 1, 2}, {0, 1, 2});
    FFElem d3_right = minor_det(K, M, {0, 1, 2}, {1, 2, 3});
    FFElem d4 = ff_det(K, M);

    bool r1 = d2_lead.is_zero() && d2_mid.is_zero() && d2_right.is_zero();
    bool r2 = !d2_lead.is_zero() && d3_lead.is_zero() && d3_right.is_zero();
    bool r3 = !d3_lead.is_zero() && d4.is_zero();
    bool r4 = !d4.is_zero();
    if (int(r1) + int(r2) + int(r3) + int(r4) != 1)
        throw Error(ErrorKind::InternalCheckFailed, "n4 minor conditions not exclusive");

    QuadClass out;
    out.degenerate = false;
    out.method = "n4";
    uint64_t h = (K.q + 1) / 2;
    if (r1) {
        out.r = 1;
        out.epsilon = (K.pow(M.at(0, 0), h) == M.at(0, 1)) ? 1 : -1;
    } else if (r2) {
        out.r = 2;
        out.epsilon = (K.pow(d2_lead, h) == minor_det(K, M, {1, 2}, {0, 1})) ? 1 : -1;
    } else if (r3) {
        out.r = 3;
        out.epsilon = (K.pow(d3_lead, h) == minor_det(K, M, {1, 2, 3}, {0, 1, 2})) ? 1 : -1;
    } else {
        out.r = 4;
        uint16_t v;
        try {
            v = K.as_fq(d4);
        } catch (const Error&) {
            throw Error(ErrorKind::InternalCheckFailed, "det M_L not in F_q");
        }
        out.epsilon = -K.fq.eta(v);
    }
    return out;
}

std::vector<TrTerm> tr_decompose(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    if (L.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot decompose the zero map");
    if (!is_self_adjoint(L))
        throw Error(ErrorKind::NotSelfAdjoint, "trace decomposition needs a self-adjoint L");

    SubspaceBasis img = image_basis(L);
    size_t r = img.dim();
    FqMat beta_t = fq_transpose(img.rows); // n x r, columns are the beta basis

    // c[i][j]: coordinates of L(t^j) in the beta basis.
    FqMat Lmat = linpoly_matrix(L);
    FqMat cmat(r, K.n);
    for (uint32_t j = 0; j < K.n; ++j) {
        std::vector<uint16_t> col(K.n);
        for (uint32_t i = 0; i < K.n; ++i) col[i] = Lmat.at(i, j);
        auto sol = fq_solve(K.fq, beta_t, col);
        if (!sol)
            throw Error(ErrorKind::InternalCheckFailed, "image of basis vector not in im L");
        for (size_t i = 0; i < r; ++i) cmat.at(i, j) = (*sol)[i];
    }

    // alpha_i: the unique element with Tr(alpha_i t^j) = c[i][j] for all j.
    FqMat G(K.n, K.n);
    for (uint32_t i = 0; i < K.n; ++i)
        for (uint32_t j = 0; j < K.n; ++j) G.at(i, j) = K.gram(i, j);
    std::vector<FFElem> alpha;
    FqMat alpha_rows(r, K.n);
    for (size_t i = 0; i < r; ++i) {
        std::vector<uint16_t> rhs(K.n);
        for (uint32_t j = 0; j < K.n; ++j) rhs[j] = cmat.at(i, j);
        auto y = fq_solve(K.fq, G, rhs);
        if (!y) throw Error(ErrorKind::InternalCheckFailed, "trace Gram system inconsistent");
        for (uint32_t j = 0; j < K.n; ++j) alpha_rows.at(i, j) = (*y)[j];
        alpha.push_back(K.from_coords(*y));
    }

    // The alphas must span exactly im L.
    if (!(fq_row_space(K.fq, alpha_rows) == img.rows))
        throw Error(ErrorKind::InternalCheckFailed, "alpha span differs from im L");

    // beta_i = sum_j Cmat[j][i] alpha_j with Cmat symmetric over F_q.
    FqMat alpha_t = fq_transpose(alpha_rows); // n x r
    FqMat Cmat(r, r);
    for (size_t i = 0; i < r; ++i) {
        std::vector<uint16_t> bcol(K.n);
        for (uint32_t j = 0; j < K.n; ++j) bcol[j] = img.rows.at(i, j);
        auto sol = fq_solve(K.fq, alpha_t, bcol);
        if (!sol) throw Error(ErrorKind::InternalCheckFailed, "beta not in alpha span");
        for (size_t j = 0; j < r; ++j) Cmat.at(j, i) = (*sol)[j];
    }
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j)
            if (Cmat.at(i, j) != Cmat.at(j, i))
                throw Error(ErrorKind::InternalCheckFailed, "transition matrix not symmetric");

    DiagResult dr = diagonalize(K.fq, Cmat);
    if (dr.r != r)
        throw Error(ErrorKind::InternalCheckFailed, "transition matrix is singular");

    // alpha'_j = sum_i P[j][i] alpha_i carries C = P^T D P onto the diagonal.
    std::vector<TrTerm> terms;
    for (size_t j = 0; j < r; ++j) {
        FFElem aj = K.zero();
        for (size_t i = 0; i < r; ++i) {
            uint16_t pc = dr.P.at(j, i);
            if (pc == 0) continue;
            aj = K.add(aj, K.mul(K.from_fq(pc), alpha[i]));
        }
        terms.push_back(TrTerm{dr.d[j], aj});
    }

    // Rebuild sum_t d_t alpha_t^(q^k + 1) and compare coefficientwise.
    for (uint32_t k = 0; k < K.n; ++k) {
        FFElem coeff = K.zero();
        for (const auto& term : terms) {
            FFElem contrib = K.mul(term.alpha, K.frobenius(term.alpha, k));
            coeff = K.add(coeff, K.mul(K.from_fq(term.d), contrib));
        }
        if (coeff != L.a[k])
            throw Error(ErrorKind::InternalCheckFailed,
                        "trace decomposition does not rebuild L");
    }
    return terms;
}

} // namespace asqf
