#include "asqf/circulant.hpp"

namespace asqf {

namespace {

constexpr uint64_t kCycloSeed = 0x63697263756c616eULL;

int neg1_pow(uint64_t e) { return (e & 1) ? -1 : 1; }

// x^k * P, no reduction
fqp::Poly shift(const fqp::Poly& P, size_t k) {
    if (fqp::is_zero(P)) return {};
    fqp::Poly out(P.size() + k, 0);
    for (size_t i = 0; i < P.size(); ++i) out[i + k] = P[i];
    return out;
}

} // namespace

uint16_t norm_product(const SmallField& F, const fqp::Poly& P,
                      const std::vector<std::pair<fqp::Poly, int>>& q_factors) {
    uint16_t out = 1;
    for (const auto& [h, mult] : q_factors) {
        fqp::Poly u = fqp::mod(F, P, h);
        if (fqp::is_zero(u)) return 0;
        uint16_t nm = fqp::norm_mod(F, u, h);
        for (int i = 0; i < mult; ++i) out = F.mul(out, nm);
    }
    return out;
}

CircData circ_data(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    if (L.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "circulant route needs L != 0");

    CircData d;
    d.lstar = lstar(L);
    fqp::Poly xn1 = fqp::xn_minus_1(K.fq, K.n);
    d.g = fqp::gcd(K.fq, d.lstar, xn1);
    d.G = fqp::divexact(K.fq, d.lstar, d.g);
    d.Q = fqp::divexact(K.fq, xn1, d.g);
    d.r = K.n - size_t(fqp::deg(d.g));
    d.c = d.g.empty() ? 0 : d.g[0];

    fqp::Poly t = d.g;
    fqp::Poly xp1 = {1, 1}; // x + 1, whose root is -1
    while (fqp::deg(t) >= 1 && fqp::eval(K.fq, t, K.fq.neg(1)) == 0) {
        t = fqp::divexact(K.fq, t, xp1);
        ++d.mu;
    }

    d.q_factors = fqp::factorize(K.fq, d.Q, kCycloSeed);
    size_t total = 0;
    for (const auto& [h, mult] : d.q_factors) total += size_t(fqp::deg(h)) * size_t(mult);
    if (total != d.r)
        throw Error(ErrorKind::InternalCheckFailed, "factor degrees do not sum to r");
    return d;
}

size_t circ_rank(const LinPoly& L) { return circ_data(L).r; }

FFElem circ_subdet(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    CircData d = circ_data(L);
    // omega^{-r} = omega^{n-r} on roots of x^n - 1
    uint16_t v = norm_product(K.fq, shift(d.G, K.n - d.r), d.q_factors);
    if (v == 0)
        throw Error(ErrorKind::InternalCheckFailed, "G vanished at a root of Q");
    return K.from_fq(v);
}

FFElem circ_subdet_resultant(const LinPoly& L) {
    const FieldCtx& K = *L.ctx;
    CircData d = circ_data(L);
    // prod omega_j = (-1)^r Q(0), so det M^(r) = ((-1)^r Q(0))^{-r} Res(Q, G)
    uint16_t res = fqp::resultant(K.fq, d.Q, d.G);
    if (res == 0)
        throw Error(ErrorKind::InternalCheckFailed, "Res(Q, G) vanished");
    uint16_t q0 = fqp::eval(K.fq, d.Q, 0);
    uint16_t prod_omega = (d.r & 1) ? K.fq.neg(q0) : q0;
    uint16_t v = K.fq.mul(K.fq.pow(K.fq.inv(prod_omega), d.r), res);
    return K.from_fq(v);
}

int circ_epsilon(const LinPoly& L,
                 std::optional<std::pair<uint32_t, uint16_t>> ell_info) {
    const FieldCtx& K = *L.ctx;
    const SmallField& F = K.fq;
    if (L.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "circulant route needs L != 0");
    if (!is_self_adjoint(L))
        throw Error(ErrorKind::NotSelfAdjoint, "epsilon cases need a self-adjoint L");

    CircData d = circ_data(L);
    uint16_t vprime = norm_product(F, d.G, d.q_factors); // prod G(omega_j)
    if (vprime == 0)
        throw Error(ErrorKind::InternalCheckFailed, "G vanished at a root of Q");
    if (F.mul(d.c, d.c) != 1)
        throw Error(ErrorKind::InternalCheckFailed, "constant term of gcd has c^2 != 1");

    std::vector<std::pair<const char*, int>> items;

    {
        // epsilon = 1 iff (prod G(omega_j))^((q-1)/2) = (-1)^(r-1) c^((q-1)r/2 + 1)
        uint16_t lhs = F.pow(vprime, uint64_t(F.q - 1) / 2);
        uint64_t ce = uint64_t(F.q - 1) / 2 * d.r + 1;
        uint16_t rhs = (ce & 1) ? d.c : 1;
        if ((d.r - 1) & 1) rhs = F.neg(rhs);
        items.emplace_back("constant-term", lhs == rhs ? 1 : -1);
    }

    {
        // epsilon = (-1)^((n-1-mu)((q-1)r/2 + 1)) eta(prod G(omega_j))
        uint64_t e = (uint64_t(K.n) - 1 - d.mu) * (uint64_t(F.q - 1) / 2 * d.r + 1);
        items.emplace_back("multiplicity", neg1_pow(e) * F.eta(vprime));
    }

    if (d.r == K.n) {
        // epsilon = (-1)^(n-1) eta(prod L*(omega_j))
        uint16_t w = norm_product(F, d.lstar, d.q_factors);
        items.emplace_back("full-rank", neg1_pow(K.n - 1) * F.eta(w));
    }

    if (ell_info) {
        auto [m, a] = *ell_info;
        if (a == 0 || m == 0 || d.r != size_t(K.n) - 2 * size_t(m))
            throw Error(ErrorKind::HypothesisViolated,
                        "leading-coefficient case needs r = n - 2m with a != 0");
        // epsilon = (-1)^((n-1)((q-1)m/2 + 1)) eta(2a)^n
        uint64_t e = (uint64_t(K.n) - 1) * (uint64_t(F.q - 1) / 2 * m + 1);
        int eta2a = F.eta(F.mul(F.add(1, 1), a));
        int val = neg1_pow(e) * ((K.n & 1) ? eta2a : 1);
        items.emplace_back("leading-coefficient", val);
    }

    for (size_t i = 1; i < items.size(); ++i)
        if (items[i].second != items[0].second)
            throw Error(ErrorKind::InternalCheckFailed,
                        std::string("epsilon cases disagree: ") + items[0].first +
                            " vs " + items[i].first);
    return items[0].second;
}

QuadClass circ_classify(const LinPoly& L,
                        std::optional<std::pair<uint32_t, uint16_t>> ell_info) {
    QuadClass c;
    c.r = int(circ_rank(L));
    c.epsilon = circ_epsilon(L, ell_info);
    c.degenerate = false;
    c.method = "circulant";
    return c;
}

std::optional<std::pair<uint32_t, uint16_t>> circ_ell_info(const LinPoly& ell) {
    const FieldCtx& K = *ell.ctx;
    for (const auto& c : ell.a)
        if (!K.is_in_base_field(c)) return std::nullopt;
    int m = ell.qdeg();
    if (m < 1) return std::nullopt;
    LinPoly L = symmetrize(ell);
    if (L.is_zero()) return std::nullopt;
    if (circ_rank(L) + 2 * size_t(m) != size_t(K.n)) return std::nullopt;
    return std::make_pair(uint32_t(m), K.as_fq(ell.a[size_t(m)]));
}

} // namespace asqf
