#include "asqf/curves.hpp"

#include <functional>
#include <numeric>

namespace asqf {

namespace {

int neg1_pow(uint64_t e) { return (e & 1) ? -1 : 1; }

uint64_t int_pow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (b != 0 && r > UINT64_MAX / b)
            throw Error(ErrorKind::BudgetExceeded, "power exceeds 64-bit range");
        r *= b;
    }
    return r;
}

uint64_t isqrt128(unsigned __int128 v) {
    if (v == 0) return 0;
    unsigned __int128 lo = 0, hi = (unsigned __int128)1 << 64;
    while (lo + 1 < hi) {
        unsigned __int128 mid = lo + (hi - lo) / 2;
        if (mid * mid <= v)
            lo = mid;
        else
            hi = mid;
    }
    return uint64_t(lo);
}

uint32_t v2(uint32_t x) {
    uint32_t v = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++v;
    }
    return v;
}

LinPoly make_lp(const FieldCtx& K, std::vector<std::pair<uint32_t, FFElem>> terms) {
    LinPoly L;
    L.ctx = &K;
    L.a.assign(K.n, K.zero());
    for (auto& [i, c] : terms) L.a[i] = K.add(L.a[i], c);
    return L;
}

// x^(q^i + 1)
FFElem qpow1(const FieldCtx& K, const FFElem& x, uint32_t i) {
    return K.mul(K.frobenius(x, i), x);
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Maximal: return "Maximal";
    case Verdict::Minimal: return "Minimal";
    default: return "Neither";
    }
}

uint64_t genus(uint64_t q, uint32_t m) { return curve_genus(q, 1, m); }

uint64_t curve_genus(uint64_t q, uint32_t k, uint32_t m) {
    unsigned __int128 g = (unsigned __int128)(int_pow(q, k) - 1) * int_pow(q, m) / 2;
    if (g > (unsigned __int128)UINT64_MAX)
        throw Error(ErrorKind::BudgetExceeded, "genus exceeds 64-bit range");
    return uint64_t(g);
}

HWWindow hasse_weil(uint64_t q, uint32_t n, uint32_t m, uint32_t k) {
    uint64_t qn = int_pow(q, n);
    uint64_t g = curve_genus(q, k, m);
    if (g > UINT64_MAX / 2) throw Error(ErrorKind::BudgetExceeded, "window exceeds 64-bit range");
    uint64_t twog = 2 * g; // (q^k - 1) q^m
    unsigned __int128 D = (unsigned __int128)twog * twog;
    if (qn > 1 && D > ~(unsigned __int128)0 / qn)
        throw Error(ErrorKind::BudgetExceeded, "window exceeds 128-bit range");
    D *= qn;
    uint64_t root = isqrt128(D);
    if (n % 2 == 0 && (unsigned __int128)root * root != D)
        throw Error(ErrorKind::InternalCheckFailed, "even-n window endpoint not an integer");
    if (root > uint64_t(INT64_MAX) || qn > uint64_t(INT64_MAX) - 1 - root)
        throw Error(ErrorKind::BudgetExceeded, "window exceeds 64-bit range");
    HWWindow w;
    w.upper = int64_t(qn) + 1 + int64_t(root);
    w.lower = int64_t(qn) + 1 - int64_t(root);
    w.endpoints_attainable = (n % 2 == 0);
    return w;
}

CurveReport point_count(const LinPoly& ell, uint32_t k) {
    const FieldCtx& K = *ell.ctx;
    if (ell.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "curve needs ell != 0");
    if (k == 0 || K.n % k != 0) throw Error(ErrorKind::NotADivisor, "k must divide n");

    CurveReport rep;
    rep.k = k;
    rep.m = ell.qdeg();
    rep.genus = curve_genus(K.q, k, uint32_t(rep.m));
    HWWindow w = hasse_weil(K.q, K.n, uint32_t(rep.m), k);
    rep.hw_lower = w.lower;
    rep.hw_upper = w.upper;
    rep.endpoints_attainable = w.endpoints_attainable;
    rep.cls = classify_via_dickson(ell);

    // Representatives of the F_q*-cosets of F_{q^k}*: nonzero combinations
    // of a basis of the subfield (the kernel of x^(q^k) - x; for k = n that
    // kernel computation degrades gracefully to the whole space) whose first
    // nonzero combination coefficient is 1. Scaling u by lambda in F_q*
    // scales the form Tr(x . u ell(x)) by lambda, which fixes the even-rank
    // character sums and cancels the odd-rank ones across the coset, so one
    // representative decides its whole coset.
    LinPoly frob_k = make_lp(K, {{k % K.n, K.one()}, {0, K.neg(K.one())}});
    SubspaceBasis sub = kernel_basis(frob_k);
    if (sub.dim() != k)
        throw Error(ErrorKind::InternalCheckFailed, "subfield has wrong dimension");
    std::vector<FFElem> reps;
    std::vector<uint16_t> c(k, 0);
    std::function<void(uint32_t, bool)> walk = [&](uint32_t i, bool seen) {
        if (i == k) {
            if (!seen) return;
            std::vector<uint16_t> coords(K.n, 0);
            for (uint32_t j = 0; j < k; ++j)
                for (uint32_t t = 0; t < K.n; ++t)
                    coords[t] = K.fq.add(coords[t], K.fq.mul(c[j], sub.rows.at(j, t)));
            reps.push_back(K.from_coords(coords));
            return;
        }
        c[i] = 0;
        walk(i + 1, seen);
        if (!seen) {
            c[i] = 1;
            walk(i + 1, true);
        } else {
            for (uint32_t v = 1; v < K.q; ++v) {
                c[i] = uint16_t(v);
                walk(i + 1, true);
            }
        }
        c[i] = 0;
    };
    walk(0, false);
    uint64_t qk = int_pow(K.q, k);
    if (reps.size() != (qk - 1) / (K.q - 1))
        throw Error(ErrorKind::InternalCheckFailed, "wrong number of coset representatives");

    __int128 total = __int128(K.order); // the u = 0 term
    for (const FFElem& u : reps) {
        QuadClass cu = classify_via_dickson(scale(ell, u));
        if (cu.r % 2 != 0) continue;
        int64_t t;
        if (cu.r == 0) {
            t = int64_t(K.order);
        } else {
            int s = neg1_pow(uint64_t(K.q - 1) / 2 * uint64_t(cu.r / 2));
            t = int64_t(s * cu.epsilon) * int64_t(K.order / int_pow(K.q, uint32_t(cu.r / 2)));
        }
        total += __int128(int64_t(K.q - 1)) * t;
    }
    if (total <= 0 || total % __int128(qk) != 0)
        throw Error(ErrorKind::InternalCheckFailed, "affine count not divisible by q^k");
    if (total >= __int128(INT64_MAX))
        throw Error(ErrorKind::BudgetExceeded, "point count exceeds 64-bit range");
    rep.N = uint64_t(total) + 1;

    if (int64_t(rep.N) < rep.hw_lower || int64_t(rep.N) > rep.hw_upper)
        throw Error(ErrorKind::InternalCheckFailed, "point count escapes the Hasse-Weil window");

    if (K.n % 2 == 0) {
        if (int64_t(rep.N) == rep.hw_upper)
            rep.verdict = Verdict::Maximal;
        else if (int64_t(rep.N) == rep.hw_lower)
            rep.verdict = Verdict::Minimal;
        else
            rep.verdict = Verdict::Neither;
    } else {
        rep.verdict = Verdict::Neither;
    }

    if (k == 1 && K.n % 2 == 0) {
        // r = n - 2m is exactly the endpoint condition, and the endpoint is
        // the upper one exactly when epsilon = (-1)^((q-1)r/4).
        bool lemma_hit = (rep.cls.r == int(K.n) - 2 * rep.m);
        bool endpoint_hit = (rep.verdict != Verdict::Neither);
        if (lemma_hit != endpoint_hit)
            throw Error(ErrorKind::InternalCheckFailed,
                        "rank criterion disagrees with the window endpoint");
        if (lemma_hit) {
            int want = neg1_pow(uint64_t(K.q - 1) / 2 * uint64_t(rep.cls.r / 2));
            Verdict v = (rep.cls.epsilon == want) ? Verdict::Maximal : Verdict::Minimal;
            if (v != rep.verdict)
                throw Error(ErrorKind::InternalCheckFailed,
                            "epsilon criterion disagrees with the window endpoint");
        }
    }
    return rep;
}

uint64_t point_count_bruteforce(const LinPoly& ell, uint32_t k) {
    const FieldCtx& K = *ell.ctx;
    if (ell.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "curve needs ell != 0");
    if (k == 0 || K.n % k != 0) throw Error(ErrorKind::NotADivisor, "k must divide n");
    K.check_enumeration_budget();
    uint64_t zeros = 0;
    for (uint64_t i = 0; i < K.order; ++i) {
        FFElem x = K.element_from_index(i);
        if (K.trace_k(K.mul(x, eval(ell, x)), k).is_zero()) ++zeros;
    }
    return 1 + int_pow(K.q, k) * zeros;
}

uint64_t pair_count_oracle(const LinPoly& ell, uint32_t k) {
    const FieldCtx& K = *ell.ctx;
    if (ell.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "curve needs ell != 0");
    if (k == 0 || K.n % k != 0) throw Error(ErrorKind::NotADivisor, "k must divide n");
    if (K.order > 81)
        throw Error(ErrorKind::BudgetExceeded, "pair enumeration limited to q^n <= 81");
    uint64_t count = 1; // the point at infinity
    for (uint64_t i = 0; i < K.order; ++i) {
        FFElem x = K.element_from_index(i);
        FFElem rhs = K.mul(x, eval(ell, x));
        for (uint64_t j = 0; j < K.order; ++j) {
            FFElem y = K.element_from_index(j);
            if (K.sub(K.frobenius(y, k % K.n), y) == rhs) ++count;
        }
    }
    return count;
}

bool family_trinomial_test(const Ctx& K, uint16_t a, uint16_t b, uint16_t c) {
    const SmallField& F = K->fq;
    if (K->n <= 4) throw Error(ErrorKind::InvalidInput, "quartic criterion needs n > 4");
    if (a == 0) throw Error(ErrorKind::InvalidInput, "leading coefficient a must be nonzero");

    fqp::Poly quartic = {a, b, c, b, a};
    fqp::Poly g = fqp::gcd(F, quartic, fqp::xn_minus_1(F, K->n));
    bool crit = (fqp::deg(g) == 4);

    uint16_t two = F.add(1, 1);
    LinPoly ell = make_linpoly(
        K, {K->from_fq(c), K->from_fq(F.mul(two, b)), K->from_fq(F.mul(two, a))});
    size_t dim = kernel_basis(symmetrize(ell)).dim();
    if (dim != size_t(fqp::deg(g)))
        throw Error(ErrorKind::InternalCheckFailed, "kernel dimension differs from gcd degree");
    if (crit) {
        QuadClass cls = classify_via_dickson(ell);
        int want = neg1_pow(K->n - 1) * ((K->n & 1) ? F.eta(a) : 1);
        if (cls.r != int(K->n) - 4 || cls.epsilon != want)
            throw Error(ErrorKind::InternalCheckFailed,
                        "classifier disagrees with the quartic-family formula");
    }
    return crit;
}

std::vector<FFElem> f_seq(const FFElem& a, const FFElem& b, uint32_t upto) {
    const FieldCtx& K = *a.ctx();
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "f-sequence needs b != 0");
    if (upto > K.n) throw Error(ErrorKind::ShiftOutOfRange, "index beyond n");
    FFElem z = K.mul(K.mul(a, a), K.inv(K.mul(b, K.frobenius(b, 1 % K.n))));
    std::vector<FFElem> f;
    f.reserve(upto + 1);
    f.push_back(K.one());
    if (upto >= 1) f.push_back(K.neg(K.one()));
    for (uint32_t kk = 2; kk <= upto; ++kk)
        f.push_back(K.neg(K.add(f[kk - 1], K.mul(K.frobenius(z, kk - 2), f[kk - 2]))));
    return f;
}

GSeq g_seq(const SmallField& F, uint16_t x0, uint32_t upto) {
    if (upto > 120) throw Error(ErrorKind::BudgetExceeded, "binomials exceed 128-bit range");
    GSeq out;
    out.rec.reserve(upto + 1);
    out.rec.push_back(1);
    if (upto >= 1) out.rec.push_back(F.neg(1));
    for (uint32_t k = 2; k <= upto; ++k)
        out.rec.push_back(F.neg(F.add(out.rec[k - 1], F.mul(x0, out.rec[k - 2]))));

    out.closed.reserve(upto + 1);
    for (uint32_t k = 0; k <= upto; ++k) {
        // (-1)^k sum_i (-1)^i binom(k-i, i) x0^i
        uint16_t acc = 0;
        uint16_t xp = 1;
        for (uint32_t i = 0; 2 * i <= k; ++i) {
            unsigned __int128 binom = 1;
            for (uint32_t j = 0; j < i; ++j) binom = binom * (k - i - j) / (j + 1);
            uint16_t term = F.mul(uint16_t(binom % F.p), xp);
            acc = (i & 1) ? F.sub(acc, term) : F.add(acc, term);
            xp = F.mul(xp, x0);
        }
        out.closed.push_back((k & 1) ? F.neg(acc) : acc);
    }
    return out;
}

bool prop_kernel2_test(const FFElem& a, const FFElem& b) {
    const FieldCtx& K = *a.ctx();
    if (b.ctx() != &K) throw Error(ErrorKind::ContextMismatch, "a and b from different contexts");
    if (K.n < 4) throw Error(ErrorKind::DegreeMismatch, "criterion needs n >= 4");
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorKind::InvalidInput, "criterion needs a, b nonzero");

    LinPoly L = make_lp(K, {{0, b}, {1, a}, {K.n - 1, K.frobenius(a, K.n - 1)}});
    if (!is_self_adjoint(L))
        throw Error(ErrorKind::InternalCheckFailed, "binomial L is not self-adjoint");

    std::vector<FFElem> f = f_seq(a, b, K.n);
    FFElem Na = K.norm(a);
    FFElem Nb = K.norm(b);
    bool f_form = f[K.n - 1].is_zero() && K.sub(Na, K.mul(Nb, f[K.n])).is_zero();

    FFMat M = dickson_matrix(L);
    FFElem d2 = ff_det(K, dickson_leading(M, K.n - 2));
    FFElem d3 = ff_det(K, dickson_leading(M, K.n - 3));
    FFElem a2 = K.mul(a, a);
    FFElem lhs1 = K.sub(K.mul(K.frobenius(a2, K.n - 3), d3),
                        K.mul(K.frobenius(b, K.n - 2), d2));
    FFElem term = K.mul(K.frobenius(a2, K.n - 2), d2);
    FFElem lhs2 = (K.n & 1) ? K.sub(Na, term) : K.add(Na, term);
    bool det_form = lhs1.is_zero() && lhs2.is_zero();

    bool direct = (kernel_basis(L).dim() == 2);
    if (f_form != det_form || f_form != direct)
        throw Error(ErrorKind::InternalCheckFailed, "kernel-2 criteria disagree");
    return direct;
}

BinomialKernelResult binomial_kernel_test(const FFElem& a, const FFElem& b, uint32_t m,
                                          uint32_t l) {
    const FieldCtx& K = *a.ctx();
    if (b.ctx() != &K) throw Error(ErrorKind::ContextMismatch, "a and b from different contexts");
    if (!(0 < l && l < m && 2 * m < K.n))
        throw Error(ErrorKind::ParameterOrderViolated, "need 0 < l < m < n/2");
    if (a.is_zero() || b.is_zero())
        throw Error(ErrorKind::InvalidInput, "binomial needs a, b nonzero");

    BinomialKernelResult res;
    res.selfadjoint_twist = (qpow1(K, a, l) == qpow1(K, b, m));

    uint32_t d = std::gcd(m, m - l);
    uint32_t e = std::lcm(m + l, m - l);
    bool divisible = (K.n % (m + l) == 0) && (K.n % (m - l) == 0);

    if (divisible) {
        K.check_enumeration_budget();
        uint64_t qd = int_pow(K.q, d);
        uint64_t qml = int_pow(K.q, m - l);
        bool branch1 = (v2(l) >= v2(m - l));
        uint64_t e1 = 0, ne = K.n / e;
        if (!branch1) {
            if ((qml - 1) % (qd + 1) != 0)
                throw Error(ErrorKind::InternalCheckFailed, "q^d + 1 does not divide q^(m-l) - 1");
            e1 = (qml - 1) / (qd + 1);
        }
        for (uint64_t idx = 1; idx < K.order && !res.witness; ++idx) {
            FFElem gamma = K.element_from_index(idx);
            FFElem delta = K.div(a, qpow1(K, gamma, m));
            if (K.frobenius(delta, m - l) != delta) continue;
            if (K.neg(K.mul(qpow1(K, gamma, l), delta)) != b) continue;
            bool ok;
            if (branch1) {
                ok = (ne % K.p == 0);
            } else {
                uint64_t g2 = std::gcd(ne, qd + 1);
                ok = K.pow(delta, e1 * g2) == K.one() &&
                     (K.pow(delta, e1) != K.one() || ne % K.p == 0);
            }
            if (ok) res.witness = std::make_pair(gamma, delta);
        }
    }
    res.kernel_2m = res.witness.has_value();

    if (res.selfadjoint_twist) {
        LinPoly ell = make_lp(K, {{m, a}, {l, b}});
        bool direct = (kernel_basis(symmetrize(ell)).dim() == 2 * m);
        if (direct != res.kernel_2m)
            throw Error(ErrorKind::InternalCheckFailed,
                        "witness prediction disagrees with the direct kernel");
    }
    return res;
}

int subfield_epsilon(const FFElem& gamma, const FFElem& delta, uint32_t m, uint32_t l) {
    const FieldCtx& K = *gamma.ctx();
    if (delta.ctx() != &K)
        throw Error(ErrorKind::ContextMismatch, "gamma and delta from different contexts");
    if (!(0 < l && l < m && 2 * m < K.n))
        throw Error(ErrorKind::ParameterOrderViolated, "need 0 < l < m < n/2");
    if (v2(l) < v2(m - l))
        throw Error(ErrorKind::HypothesisViolated, "needs v2(l) >= v2(m - l)");
    if (K.n % (m + l) != 0 || K.n % (m - l) != 0)
        throw Error(ErrorKind::HypothesisViolated, "needs (m + l) | n and (m - l) | n");
    uint32_t e = std::lcm(m + l, m - l);
    if ((K.n / e) % K.p != 0)
        throw Error(ErrorKind::HypothesisViolated, "needs p | n / lcm(m + l, m - l)");
    if (gamma.is_zero() || delta.is_zero())
        throw Error(ErrorKind::InvalidInput, "gamma and delta must be nonzero");
    if (K.frobenius(delta, m - l) != delta)
        throw Error(ErrorKind::NotInSubfield, "delta must lie in F_{q^(m-l)}");

    uint32_t d = std::gcd(m, m - l);
    uint16_t n2d = K.norm_scalar(K.mul(K.from_fq(K.fq.add(1, 1)), delta));
    uint64_t exp = uint64_t(K.n) - 1 + uint64_t(K.q - 1) / 2 * (K.n / d - 1) * m;
    int eps = neg1_pow(exp) * K.fq.eta(n2d);

    LinPoly ell = make_lp(K, {{m, K.mul(qpow1(K, gamma, m), delta)},
                              {l, K.neg(K.mul(qpow1(K, gamma, l), delta))}});
    QuadClass cls = classify_via_dickson(ell);
    if (cls.r != int(K.n) - int(2 * m) || cls.epsilon != eps)
        throw Error(ErrorKind::InternalCheckFailed,
                    "classifier disagrees with the subfield epsilon formula");
    return eps;
}

std::pair<LinPoly, CurveReport> rank2_build(const Ctx& K, uint16_t d1, uint16_t d2,
                                            const FFElem& alpha1, const FFElem& alpha2) {
    const FieldCtx& C = *K;
    if (C.n % 2 != 0) throw Error(ErrorKind::InvalidInput, "construction needs n even");
    if (d1 == 0 || d2 == 0) throw Error(ErrorKind::InvalidInput, "d1, d2 must be nonzero");
    if (alpha1.is_zero() || alpha2.is_zero() ||
        C.is_in_base_field(C.div(alpha1, alpha2)))
        throw Error(ErrorKind::AlphasDependent, "alpha1/alpha2 must lie outside F_q");

    FFElem e1 = C.from_fq(d1);
    FFElem e2 = C.from_fq(d2);
    std::vector<FFElem> acoef(C.n);
    for (uint32_t i = 0; i < C.n; ++i)
        acoef[i] = C.add(C.mul(e1, qpow1(C, alpha1, i)), C.mul(e2, qpow1(C, alpha2, i)));
    if (!acoef[C.n / 2].is_zero())
        throw Error(ErrorKind::CancellationConditionFails,
                    "d1 alpha1^(q^(n/2)+1) + d2 alpha2^(q^(n/2)+1) != 0");

    FFElem two = C.from_fq(C.fq.add(1, 1));
    std::vector<FFElem> lcoef(C.n, C.zero());
    lcoef[0] = acoef[0];
    for (uint32_t i = 1; i < C.n / 2; ++i) lcoef[i] = C.mul(two, acoef[i]);
    LinPoly ell = make_linpoly(K, lcoef);
    if (ell.qdeg() != int(C.n / 2) - 1)
        throw Error(ErrorKind::InternalCheckFailed, "deg ell is not q^(n/2 - 1)");
    if (!(symmetrize(ell) == make_linpoly(K, acoef)))
        throw Error(ErrorKind::InternalCheckFailed, "ell does not symmetrize back to L");

    CurveReport rep = point_count(ell, 1);
    int eta12 = C.fq.eta(C.fq.mul(d1, d2));
    if (rep.cls.r != 2 || rep.cls.epsilon != eta12)
        throw Error(ErrorKind::InternalCheckFailed, "rank-2 class (2, eta(d1 d2)) not observed");
    Verdict want = (neg1_pow(uint64_t(C.q - 1) / 2) * eta12 == 1) ? Verdict::Maximal
                                                                  : Verdict::Minimal;
    if (rep.verdict != want)
        throw Error(ErrorKind::InternalCheckFailed, "verdict differs from the eta(d1 d2) rule");
    return {ell, rep};
}

} // namespace asqf
