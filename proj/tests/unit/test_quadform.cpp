#include <doctest.h>

#include <numeric>
#include <random>

#include "asqf/quadform.hpp"
#include "helpers.hpp"

using namespace asqf;
using test::thrown_kind;

namespace {

LinPoly random_linpoly(const Ctx& K, std::mt19937_64& rng) {
    std::vector<FFElem> c;
    for (uint32_t i = 0; i < K->n; ++i) c.push_back(test::random_elem(*K, rng));
    return make_linpoly(K, c);
}

} // namespace

TEST_CASE("associated matrix in the polynomial basis") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    std::vector<FFElem> basis = {F.one(), F.gen()};

    // ell = x gives B(i, j) = Tr(t^i t^j): Tr(1) = 2, Tr(t) = 0, Tr(t^2) = 1
    FqMat B = associated_matrix(make_linpoly(K, {F.one()}), basis);
    CHECK(B.at(0, 0) == 2);
    CHECK(B.at(0, 1) == 0);
    CHECK(B.at(1, 0) == 0);
    CHECK(B.at(1, 1) == 1);

    FqMat Z = associated_matrix(linpoly_zero(K), basis);
    CHECK(Z == FqMat(2, 2));

    // the matrix only sees the symmetrized part
    LinPoly tw = linpoly_monomial(K, F.gen(), 1);
    CHECK(associated_matrix(tw, basis) == FqMat(2, 2));

    CHECK(thrown_kind([&] {
        associated_matrix(make_linpoly(K, {F.one()}), {F.one(), F.from_fq(2)});
    }) == ErrorKind::NotABasis);
}

TEST_CASE("congruence diagonalization") {
    SmallField F = make_prime_smallfield(3);
    FqMat zero(2, 2);
    DiagResult dz = diagonalize(F, zero);
    CHECK(dz.r == 0);

    FqMat D(2, 2);
    D.at(0, 0) = 2;
    D.at(1, 1) = 1;
    DiagResult dd = diagonalize(F, D);
    CHECK(dd.r == 2);
    CHECK(dd.d == std::vector<uint16_t>{2, 1});

    // P^T diag(d) P = C on random symmetric matrices
    std::mt19937_64 rng(31);
    for (const uint32_t q : {3u, 5u}) {
        SmallField Fq = make_prime_smallfield(q);
        for (int t = 0; t < 100; ++t) {
            size_t n = 2 + rng() % 3;
            FqMat C(n, n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = i; j < n; ++j) C.at(i, j) = C.at(j, i) = uint16_t(rng() % q);
            DiagResult d = diagonalize(Fq, C);
            FqMat Dm(n, n);
            for (size_t i = 0; i < n; ++i) Dm.at(i, i) = i < d.d.size() ? d.d[i] : 0;
            CHECK(fq_mul(Fq, fq_transpose(d.P), fq_mul(Fq, Dm, d.P)) == C);
            CHECK(d.r == fq_rank(Fq, C));
            for (size_t i = 0; i < d.r; ++i) CHECK(d.d[i] != 0);
            for (size_t i = d.r; i < d.d.size(); ++i) CHECK(d.d[i] == 0);
        }
    }
}

TEST_CASE("classification anchors at (3,2)") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    LinPoly id = make_linpoly(K, {F.one()});

    QuadClass d = classify_via_diag(id);
    CHECK(d.r == 2);
    CHECK(d.epsilon == -1); // eta(2 * 1) = eta(2) = -1
    CHECK(!d.degenerate);
    CHECK(d.method == "diag");

    QuadClass m = classify_via_dickson(id);
    CHECK(m.same_class(d));
    auto bf = classify_via_bruteforce(id);
    CHECK(bf.first.same_class(d));
    CHECK(bf.second[0] == 5); // Tr(x^2) = 0 has 5 roots in F_9

    // zero symmetrization: the zero form
    LinPoly tw = linpoly_monomial(K, F.gen(), 1);
    QuadClass dz = classify_via_diag(tw);
    CHECK(dz.degenerate);
    CHECK(dz.r == 0);
    CHECK(dz.epsilon == 1);
    CHECK(classify_via_dickson(tw).same_class(dz));
    CHECK(classify_via_bruteforce(tw).first.same_class(dz));
}

TEST_CASE("classification anchor at (3,4)") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;
    LinPoly ell = linpoly_monomial(K, F.from_fq(2), 1); // 2 x^q
    QuadClass c = classify_via_dickson(ell);
    CHECK(c.r == 2);
    CHECK(c.epsilon == 1);
    CHECK(classify_via_diag(ell).same_class(c));
    CHECK(classify_via_bruteforce(ell).first.same_class(c));
}

TEST_CASE("root counts") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    // rank 2, epsilon -1 at q = 3, n = 2
    CHECK(root_count(F, 2, -1, 0) == 5);
    CHECK(root_count(F, 2, -1, 1) == 2);
    CHECK(root_count(F, 2, -1, 2) == 2);
    // zero form
    CHECK(root_count(F, 0, 1, 0) == 9);
    CHECK(root_count(F, 0, 1, 1) == 0);
    // odd rank: N_0 = q^(n-1)
    CHECK(root_count(F, 1, 1, 0) == 3);
    // l = x + x^q gives Tr(x l(x)) = a^2 in coordinates x = a + bt,
    // a rank-1 form with d_1 = 1: values (0,1,2) hit (3,6,0) times
    {
        LinPoly odd1 = make_linpoly(K, {K->one(), K->one()});
        QuadClass oc = classify_via_diag(odd1);
        CHECK(oc.r == 1);
        CHECK(oc.epsilon == 1);
        CHECK(root_count(F, oc.r, oc.epsilon, 0) == 3);
        CHECK(root_count(F, oc.r, oc.epsilon, 1) == 6);
        CHECK(root_count(F, oc.r, oc.epsilon, 2) == 0);
        CHECK(root_count_bruteforce(odd1, 1) == 6);
    }

    // distribution always sums to q^n, and matches enumeration
    Ctx K4 = make_field(3, 1, 4);
    std::mt19937_64 rng(32);
    for (int t = 0; t < 30; ++t) {
        LinPoly ell = random_linpoly(K4, rng);
        auto [cls, observed] = classify_via_bruteforce(ell);
        std::vector<uint64_t> predicted = root_count_distribution(*K4, cls.r, cls.epsilon);
        CHECK(observed == predicted);
        CHECK(std::accumulate(observed.begin(), observed.end(), uint64_t(0)) == 81);
        for (uint16_t lam = 0; lam < 3; ++lam)
            CHECK(root_count_bruteforce(ell, lam) == observed[lam]);
    }
}

TEST_CASE("form values") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    LinPoly id = make_linpoly(K, {F.one()});
    for (const FFElem& x : ElementRange(K))
        CHECK(form_value(id, x) == F.trace_scalar(F.mul(x, x)));
}

TEST_CASE("closed form for quartic towers") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;

    auto make_ell = [&](const FFElem& a, const FFElem& b, const FFElem& c) {
        FFElem two = F.from_fq(2);
        return add(add(linpoly_monomial(K, F.mul(two, a), 2), linpoly_monomial(K, F.mul(two, b), 1)),
                   make_linpoly(K, {c}));
    };

    QuadClass c1 = classify_n4(F.zero(), F.zero(), F.one());
    CHECK(c1.same_class(classify_via_dickson(make_ell(F.zero(), F.zero(), F.one()))));
    QuadClass c2 = classify_n4(F.zero(), F.one(), F.zero());
    CHECK(c2.same_class(classify_via_dickson(make_ell(F.zero(), F.one(), F.zero()))));
    CHECK(c2.r == 2);

    std::mt19937_64 rng(33);
    for (int t = 0; t < 500; ++t) {
        FFElem a = test::random_elem(F, rng);
        FFElem b = test::random_elem(F, rng);
        FFElem c = test::random_elem(F, rng);
        LinPoly ell = make_ell(a, b, c);
        if (symmetrize(ell).is_zero()) {
            CHECK(thrown_kind([&] { classify_n4(a, b, c); }) == ErrorKind::DegenerateForm);
            continue;
        }
        CHECK(classify_n4(a, b, c).same_class(classify_via_dickson(ell)));
    }
    CHECK(thrown_kind([&] { classify_n4(F.zero(), F.zero(), F.zero()); }) ==
          ErrorKind::DegenerateForm);
}

TEST_CASE("trace decomposition") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    LinPoly id = make_linpoly(K, {F.one()});
    std::vector<TrTerm> terms = tr_decompose(id);
    REQUIRE(!terms.empty());

    auto rebuild = [&](const Ctx& Kc, const std::vector<TrTerm>& ts) {
        const FieldCtx& Fc = *Kc;
        LinPoly acc = linpoly_zero(Kc);
        for (const TrTerm& t : ts) {
            // d alpha Tr(alpha x) as a linearized polynomial
            std::vector<FFElem> c;
            for (uint32_t i = 0; i < Fc.n; ++i)
                c.push_back(Fc.mul(Fc.mul(Fc.from_fq(t.d), t.alpha), Fc.frobenius(t.alpha, i)));
            acc = add(acc, make_linpoly(Kc, c));
        }
        return acc;
    };
    CHECK(rebuild(K, terms) == id);

    uint16_t prod = 1;
    for (const TrTerm& t : terms) prod = F.fq.mul(prod, t.d);
    CHECK(F.fq.eta(prod) == classify_via_diag(id).epsilon);
    CHECK(terms.size() == 2);

    CHECK(thrown_kind([&] {
        Ctx K4 = make_field(3, 1, 4);
        tr_decompose(linpoly_monomial(K4, K4->one(), 1));
    }) == ErrorKind::NotSelfAdjoint);

    Ctx K4 = make_field(3, 1, 4);
    std::mt19937_64 rng(34);
    for (int t = 0; t < 100; ++t) {
        LinPoly L = symmetrize(random_linpoly(K4, rng));
        if (L.is_zero()) continue;
        std::vector<TrTerm> ts = tr_decompose(L);
        CHECK(rebuild(K4, ts) == L);
        CHECK(ts.size() == size_t(classify_via_dickson(L).r));
    }
}
