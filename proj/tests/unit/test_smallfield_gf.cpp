#include <doctest.h>

#include <set>
#include <vector>

#include "asqf/gf.hpp"
#include "helpers.hpp"

using namespace asqf;
using test::thrown_kind;

TEST_CASE("prime smallfield tables") {
    SmallField F = make_prime_smallfield(3);
    CHECK(F.q == 3);
    CHECK(F.add(1, 2) == 0);
    CHECK(F.mul(2, 2) == 1);
    CHECK(F.neg(1) == 2);
    CHECK(F.inv(2) == 2);
    CHECK(F.sub(0, 1) == 2);
    CHECK(F.pow(2, 5) == 2);
    CHECK(F.eta(0) == 0);
    CHECK(F.eta(1) == 1);
    CHECK(F.eta(2) == -1); // -1 is a nonsquare mod 3
    CHECK(thrown_kind([&] { F.inv(0); }) == ErrorKind::DivisionByZero);
    CHECK(thrown_kind([] { make_prime_smallfield(2); }) == ErrorKind::EvenCharacteristic);
    CHECK(thrown_kind([] { make_prime_smallfield(9); }) == ErrorKind::NotPrime);
}

TEST_CASE("extension smallfield F_9") {
    SmallField F3 = make_prime_smallfield(3);
    SmallField F9 = make_extension_smallfield(F3, {1, 0, 1}); // y^2 + 1
    CHECK(F9.q == 9);
    // y has index 3 (coords (0,1) base 3); y^2 = -1 = 2
    CHECK(F9.mul(3, 3) == 2);
    // -1 is a fourth power here, hence a square: q = 9 is 1 mod 4
    CHECK(F9.eta(2) == 1);
    for (uint16_t a = 1; a < 9; ++a) {
        CHECK(F9.mul(a, F9.inv(a)) == 1);
        CHECK(F9.pow(a, 8) == 1);
    }
    CHECK(thrown_kind([&] { make_extension_smallfield(F3, {0, 1, 1}); }) ==
          ErrorKind::ReducibleModulus);
}

TEST_CASE("tower construction and modulus selection") {
    Ctx K = make_field(3, 1, 2);
    CHECK(K->p == 3);
    CHECK(K->q == 3);
    CHECK(K->n == 2);
    CHECK(K->order == 9);
    // lexicographically smallest monic irreducible quadratic over F_3
    CHECK(K->top_modulus == fqp::Poly{1, 0, 1});

    CHECK(thrown_kind([] { make_field(2, 1, 3); }) == ErrorKind::EvenCharacteristic);
    CHECK(thrown_kind([] { make_field(15, 1, 2); }) == ErrorKind::NotPrime);
    CHECK(thrown_kind([] {
        make_field(3, 1, 2, std::nullopt, std::vector<uint16_t>{0, 1, 1});
    }) == ErrorKind::ReducibleModulus);
}

TEST_CASE("generator of the (3,2) tower squares to -1") {
    Ctx K = make_field(3, 1, 2);
    FFElem t = K->gen();
    CHECK(K->mul(t, t) == K->neg(K->one()));
    CHECK(t.to_string() == "(0,1)");
}

TEST_CASE("element enumeration") {
    Ctx K = make_field(3, 1, 2);
    std::vector<FFElem> all;
    for (const FFElem& x : ElementRange(K)) all.push_back(x);
    REQUIRE(all.size() == 9);
    CHECK(all[0] == K->zero());
    CHECK(all[1] == K->one());
    std::set<std::vector<uint16_t>> seen;
    for (uint64_t i = 0; i < 9; ++i) {
        FFElem x = K->element_from_index(i);
        CHECK(K->index_of(x) == i);
        seen.insert(x.coords());
    }
    CHECK(seen.size() == 9);

    Ctx K4 = make_field(3, 1, 4);
    std::set<std::vector<uint16_t>> seen4;
    for (const FFElem& x : ElementRange(K4)) seen4.insert(x.coords());
    CHECK(seen4.size() == 81);
}

TEST_CASE("enumeration budget") {
    Ctx K = make_field(3, 1, 4, std::nullopt, std::nullopt, 10);
    CHECK(thrown_kind([&] { K->check_enumeration_budget(); }) == ErrorKind::BudgetExceeded);
    CHECK(thrown_kind([&] { ElementRange r(K); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("field axioms on random elements") {
    for (auto [p, n] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 3}, {5, 2}}) {
        Ctx K = make_field(p, 1, n);
        const FieldCtx& F = *K;
        std::mt19937_64 rng(42);
        for (int t = 0; t < 200; ++t) {
            FFElem a = test::random_elem(F, rng);
            FFElem b = test::random_elem(F, rng);
            FFElem c = test::random_elem(F, rng);
            CHECK(a + b == b + a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == F.zero());
            if (!a.is_zero()) {
                CHECK(F.mul(a, F.inv(a)) == F.one());
                CHECK(F.pow(a, F.order - 1) == F.one());
            }
        }
        CHECK(thrown_kind([&] { F.inv(F.zero()); }) == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("frobenius maps") {
    Ctx K = make_field(3, 1, 2);
    FFElem t = K->gen();
    CHECK(K->frobenius(t, 1) == K->neg(t)); // t^3 = t^2 t = -t
    CHECK(K->frobenius(t, 0) == t);

    Ctx K4 = make_field(3, 1, 4);
    const FieldCtx& F = *K4;
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        FFElem x = test::random_elem(F, rng);
        uint32_t a = uint32_t(rng() % F.n), b = uint32_t(rng() % F.n);
        uint64_t e = 1;
        for (uint32_t j = 0; j < a; ++j) e *= F.q;
        CHECK(F.frobenius(x, a) == F.pow(x, e));
        CHECK(F.frobenius(F.frobenius(x, a), b) == F.frobenius(x, (a + b) % F.n));
        FFElem y = test::random_elem(F, rng);
        CHECK(F.frobenius(F.add(x, y), a) == F.add(F.frobenius(x, a), F.frobenius(y, a)));
        CHECK(F.frobenius(F.mul(x, y), a) == F.mul(F.frobenius(x, a), F.frobenius(y, a)));
    }
}

TEST_CASE("trace and norm") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    FFElem t = F.gen();
    CHECK(F.trace(F.zero()) == F.zero());
    CHECK(F.trace(t) == F.zero()); // t + t^3 = t - t
    CHECK(F.trace_scalar(t) == 0);
    for (uint16_t c = 0; c < 3; ++c) {
        // trace of a scalar is n c, norm is c^n
        CHECK(F.trace_scalar(F.from_fq(c)) == F.fq.mul(2 % 3, c));
        CHECK(F.norm_scalar(F.from_fq(c)) == F.fq.mul(c, c));
    }
    CHECK(F.norm(t) == F.one()); // t t^3 = t^4 = (t^2)^2 = 1
    CHECK(F.norm(F.one()) == F.one());

    // trace is onto and each fiber has order/q elements
    Ctx K4 = make_field(3, 1, 4);
    std::vector<uint64_t> fibers(3, 0);
    for (const FFElem& x : ElementRange(K4)) ++fibers[K4->trace_scalar(x)];
    CHECK(fibers == std::vector<uint64_t>{27, 27, 27});

    // multiplicativity of the norm
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        FFElem a = test::random_elem(*K4, rng), b = test::random_elem(*K4, rng);
        CHECK(K4->norm_scalar(K4->mul(a, b)) ==
              K4->fq.mul(K4->norm_scalar(a), K4->norm_scalar(b)));
    }
}

TEST_CASE("relative trace and subfield membership") {
    Ctx K = make_field(3, 1, 4);
    const FieldCtx& F = *K;
    FFElem t = F.gen();
    CHECK(F.is_in_base_field(F.from_fq(2)));
    CHECK(!F.is_in_base_field(t));
    CHECK(F.is_in_subfield(t, 4));
    CHECK(!F.is_in_subfield(t, 2));
    CHECK(F.as_fq(F.from_fq(2)) == 2);
    CHECK(thrown_kind([&] { F.as_fq(t); }) == ErrorKind::NotInBaseField);
    CHECK(thrown_kind([&] { F.trace_k(t, 3); }) == ErrorKind::NotADivisor);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        FFElem x = test::random_elem(F, rng);
        CHECK(F.trace_k(x, 1) == F.trace(x));
        CHECK(F.trace_k(x, 4) == x);
        CHECK(F.is_in_subfield(F.trace_k(x, 2), 2));
        FFElem y = test::random_elem(F, rng);
        CHECK(F.trace_k(F.add(x, y), 2) == F.add(F.trace_k(x, 2), F.trace_k(y, 2)));
    }
}

TEST_CASE("quadratic character on the base field") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    CHECK(F.quadratic_character(F.one()) == 1);
    CHECK(F.quadratic_character(F.zero()) == 0);
    CHECK(F.quadratic_character(F.from_fq(2)) == -1);
    CHECK(thrown_kind([&] { F.quadratic_character(F.gen()); }) == ErrorKind::NotInBaseField);
}

TEST_CASE("context mixing is rejected") {
    Ctx K1 = make_field(3, 1, 2);
    Ctx K2 = make_field(3, 1, 2);
    CHECK(thrown_kind([&] { K1->add(K1->one(), K2->one()); }) == ErrorKind::ContextMismatch);
}

TEST_CASE("from_coords and gram matrix") {
    Ctx K = make_field(3, 1, 2);
    const FieldCtx& F = *K;
    CHECK(F.from_coords({1, 2}) == F.add(F.one(), F.mul(F.from_fq(2), F.gen())));
    CHECK(F.from_coords({1}) == F.one());
    // gram(i, j) = Tr(t^i t^j): Tr(1) = 2, Tr(t) = 0, Tr(t^2) = Tr(-1) = 1
    CHECK(F.gram(0, 0) == 2);
    CHECK(F.gram(0, 1) == 0);
    CHECK(F.gram(1, 1) == 1);
    CHECK(F.fq.mul(F.inv2(), 2) == 1);
}
