#include <doctest.h>

#include <random>
#include <vector>

#include "asqf/linpoly.hpp"
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

TEST_CASE("construction and evaluation") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    FFElem t = F.gen();

    LinPoly id = make_linpoly(K, {F.one()});
    CHECK(id.a.size() == 2);
    CHECK(id.qdeg() == 0);
    CHECK(eval(id, t) == t);

    LinPoly zero = linpoly_zero(K);
    CHECK(zero.is_zero());
    CHECK(zero.qdeg() == -1);
    CHECK(eval(zero, t) == F.zero());

    LinPoly frob = linpoly_monomial(K, F.one(), 1);
    CHECK(eval(frob, t) == F.neg(t)); // t^3 = -t
    CHECK(thrown_kind([&] { linpoly_monomial(K, F.one(), 2); }) == ErrorKind::ShiftOutOfRange);
    CHECK(thrown_kind([&] {
        make_linpoly(K, {F.one(), F.one(), F.one()});
    }) == ErrorKind::DegreeMismatch);

    // additivity and F_q-linearity on random inputs
    Ctx K4 = make_field(3, 1, 4);
    std::mt19937_64 rng(21);
    for (int i = 0; i < 100; ++i) {
        LinPoly L = random_linpoly(K4, rng);
        FFElem x = test::random_elem(*K4, rng), y = test::random_elem(*K4, rng);
        CHECK(eval(L, K4->add(x, y)) == K4->add(eval(L, x), eval(L, y)));
        FFElem c = K4->from_fq(uint16_t(rng() % 3));
        CHECK(eval(L, K4->mul(c, x)) == K4->mul(c, eval(L, x)));
    }
}

TEST_CASE("adjoint") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;
    LinPoly id = make_linpoly(K, {F.one()});
    CHECK(adjoint(id) == id);
    CHECK(adjoint(linpoly_monomial(K, F.one(), 1)) == linpoly_monomial(K, F.one(), 3));

    std::mt19937_64 rng(22);
    for (int i = 0; i < 100; ++i) {
        LinPoly L = random_linpoly(K, rng);
        CHECK(adjoint(adjoint(L)) == L);
        LinPoly M = random_linpoly(K, rng);
        CHECK(adjoint(add(L, M)) == add(adjoint(L), adjoint(M)));
        // trace pairing: Tr(y L(x)) = Tr(x adj(L)(y))
        FFElem x = test::random_elem(F, rng), y = test::random_elem(F, rng);
        CHECK(F.trace_scalar(F.mul(y, eval(L, x))) ==
              F.trace_scalar(F.mul(x, eval(adjoint(L), y))));
    }

    // the pairing identity, exhaustively in a small field
    Ctx K3 = make_field(3, 1, 3);
    std::mt19937_64 rng3(23);
    for (int i = 0; i < 10; ++i) {
        LinPoly L = random_linpoly(K3, rng3);
        LinPoly A = adjoint(L);
        for (const FFElem& x : ElementRange(K3))
            for (const FFElem& y : ElementRange(K3))
                CHECK(K3->trace_scalar(K3->mul(y, eval(L, x))) ==
                      K3->trace_scalar(K3->mul(x, eval(A, y))));
    }
}

TEST_CASE("symmetrization") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    LinPoly id = make_linpoly(K, {F.one()});
    CHECK(symmetrize(id) == id);
    CHECK(is_self_adjoint(id));

    // t x^q is antiselfadjoint at (3, 2): its symmetrization vanishes
    LinPoly tw = linpoly_monomial(K, F.gen(), 1);
    CHECK(symmetrize(tw).is_zero());
    CHECK(!is_self_adjoint(tw));

    std::mt19937_64 rng(24);
    Ctx K4 = make_field(3, 1, 4);
    for (int i = 0; i < 100; ++i) {
        LinPoly L = random_linpoly(K4, rng);
        LinPoly S = symmetrize(L);
        CHECK(is_self_adjoint(S));
        CHECK(symmetrize(S) == S);
        // the symmetrized part generates the same quadratic form
        FFElem x = test::random_elem(*K4, rng);
        CHECK(K4->trace_scalar(K4->mul(x, eval(L, x))) ==
              K4->trace_scalar(K4->mul(x, eval(S, x))));
    }
    for (const FFElem& b : ElementRange(K))
        CHECK(F.trace_scalar(F.mul(b, eval(tw, b))) == 0);
}

TEST_CASE("composition") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;
    LinPoly id = make_linpoly(K, {F.one()});
    std::mt19937_64 rng(25);
    for (int i = 0; i < 100; ++i) {
        LinPoly A = random_linpoly(K, rng);
        LinPoly B = random_linpoly(K, rng);
        CHECK(compose_mod(id, A) == A);
        CHECK(compose_mod(A, id) == A);
        FFElem x = test::random_elem(F, rng);
        CHECK(eval(compose_mod(A, B), x) == eval(A, eval(B, x)));
    }
    // x^q composed with x^(q^(n-1)) is the identity mod x^(q^n) - x
    CHECK(compose_mod(linpoly_monomial(K, F.one(), 1), linpoly_monomial(K, F.one(), 3)) == id);
}

TEST_CASE("kernel, image, perp") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;
    LinPoly id = make_linpoly(K, {F.one()});
    CHECK(kernel_basis(id).dim() == 0);
    CHECK(image_basis(id).dim() == 4);
    CHECK(kernel_basis(linpoly_zero(K)).dim() == 4);

    // the trace map has kernel of dimension n - 1 and image F_q
    LinPoly tr = make_linpoly(K, {F.one(), F.one(), F.one(), F.one()});
    CHECK(kernel_basis(tr).dim() == 3);
    CHECK(image_basis(tr).dim() == 1);

    SubspaceBasis whole = image_basis(id);
    SubspaceBasis null = kernel_basis(id);
    CHECK(perp_basis(whole) == null);
    CHECK(perp_basis(null) == whole);
    CHECK(null.elements().size() == 1);
    CHECK(image_basis(tr).elements().size() == 3);

    std::mt19937_64 rng(26);
    for (int i = 0; i < 100; ++i) {
        LinPoly L = random_linpoly(K, rng);
        CHECK(kernel_basis(L).dim() + image_basis(L).dim() == 4);
        CHECK(perp_basis(image_basis(L)) == kernel_basis(adjoint(L)));
        SubspaceBasis W = image_basis(L);
        CHECK(perp_basis(perp_basis(W)) == W);
    }
}

TEST_CASE("dickson matrix") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;
    LinPoly id = make_linpoly(K, {F.one()});
    FFMat M = dickson_matrix(id);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j)
            CHECK(M.at(i, j) == (i == j ? F.one() : F.zero()));

    LinPoly L = add(linpoly_monomial(K, F.one(), 1), linpoly_monomial(K, F.one(), 3));
    FFMat ML = dickson_matrix(L);
    std::vector<uint16_t> want_row0 = {0, 1, 0, 1}, want_row1 = {1, 0, 1, 0};
    for (size_t j = 0; j < 4; ++j) {
        CHECK(ML.at(0, j) == (want_row0[j] ? F.one() : F.zero()));
        CHECK(ML.at(1, j) == (want_row1[j] ? F.one() : F.zero()));
    }
    CHECK(ff_rank(F, ML) == 2);
    CHECK(kernel_basis(L).dim() == 2);

    for (uint32_t n : {2u, 3u, 4u}) {
        Ctx Kn = make_field(3, 1, n);
        std::mt19937_64 rng(27 + n);
        for (int i = 0; i < 70; ++i) {
            LinPoly R = random_linpoly(Kn, rng);
            CHECK(ff_rank(*Kn, dickson_matrix(R)) + kernel_basis(R).dim() == n);
        }
    }

    CHECK(thrown_kind([&] { dickson_shifted(ML, 4); }) == ErrorKind::RankViewOutOfRange);
    FFMat lead2 = dickson_leading(ML, 2);
    CHECK(lead2.rows == 2);
    FFMat sh2 = dickson_shifted(ML, 2);
    CHECK(sh2.at(0, 0) == ML.at(1, 0));
    CHECK(sh2.at(1, 1) == ML.at(2, 1));
}

TEST_CASE("associate polynomial") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;
    CHECK(lstar(make_linpoly(K, {F.one()})) == fqp::Poly{1});
    CHECK(lstar(make_linpoly(K, {F.one(), F.one(), F.one(), F.one()})) == fqp::Poly{1, 1, 1, 1});
    CHECK(lstar(add(linpoly_monomial(K, F.one(), 1), linpoly_monomial(K, F.one(), 3))) ==
          fqp::Poly{0, 1, 0, 1});
    CHECK(thrown_kind([&] { lstar(linpoly_monomial(K, F.gen(), 1)); }) ==
          ErrorKind::CoefficientsNotInBaseField);
}

TEST_CASE("scale and arithmetic") {
    Ctx K = make_field(5, 1, 2);
    const FieldCtx& F = *K;
    std::mt19937_64 rng(28);
    for (int i = 0; i < 50; ++i) {
        LinPoly A = random_linpoly(K, rng), B = random_linpoly(K, rng);
        FFElem c = test::random_elem(F, rng);
        CHECK(add(A, B) == add(B, A));
        CHECK(sub(add(A, B), B) == A);
        FFElem x = test::random_elem(F, rng);
        CHECK(eval(scale(A, c), x) == F.mul(c, eval(A, x)));
    }
}
