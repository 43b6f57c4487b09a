#include <doctest.h>

#include <random>

#include "asqf/fqpoly.hpp"
#include "asqf/smallfield.hpp"
#include "helpers.hpp"

using namespace asqf;
using fqp::Poly;
using test::thrown_kind;

namespace {

Poly random_poly(const SmallField& F, std::mt19937_64& rng, int maxdeg) {
    Poly a(size_t(rng() % uint64_t(maxdeg + 1)) + 1);
    for (auto& c : a) c = uint16_t(rng() % F.q);
    fqp::normalize(a);
    return a;
}

} // namespace

TEST_CASE("degree and normalization") {
    SmallField F = make_prime_smallfield(3);
    CHECK(fqp::deg({}) == -1);
    CHECK(fqp::is_zero({}));
    Poly a = {1, 2, 0, 0};
    fqp::normalize(a);
    CHECK(a == Poly{1, 2});
    CHECK(fqp::deg(a) == 1);
    CHECK(fqp::lead(a) == 2);
    CHECK(fqp::xn_minus_1(F, 4) == Poly{2, 0, 0, 0, 1});
}

TEST_CASE("ring operations and division") {
    SmallField F = make_prime_smallfield(3);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        Poly a = random_poly(F, rng, 6);
        Poly b = random_poly(F, rng, 4);
        if (fqp::is_zero(b)) continue;
        auto [q, r] = fqp::divmod(F, a, b);
        CHECK(fqp::add(F, fqp::mul(F, q, b), r) == a);
        CHECK(fqp::deg(r) < fqp::deg(b));
        CHECK(fqp::divexact(F, fqp::mul(F, a, b), b) == a);
        CHECK(fqp::sub(F, a, a) == Poly{});
        CHECK(fqp::mul(F, a, b) == fqp::mul(F, b, a));
    }
    CHECK(thrown_kind([&] { fqp::divexact(F, Poly{1, 1}, Poly{0, 1}); }) ==
          ErrorKind::InternalCheckFailed);
}

TEST_CASE("gcd anchors over F_3") {
    SmallField F = make_prime_smallfield(3);
    Poly x4m1 = fqp::xn_minus_1(F, 4);
    // x^3 + x = x (x^2 + 1), x^4 - 1 = (x^2 + 1)(x^2 - 1)
    CHECK(fqp::gcd(F, Poly{0, 1, 0, 1}, x4m1) == Poly{1, 0, 1});
    // 1 + x + x^2 + x^3 divides x^4 - 1
    CHECK(fqp::gcd(F, Poly{1, 1, 1, 1}, x4m1) == fqp::make_monic(F, Poly{1, 1, 1, 1}));
    Poly f = {2, 1, 2};
    CHECK(fqp::gcd(F, f, Poly{}) == fqp::make_monic(F, f));
    CHECK(thrown_kind([&] { fqp::gcd(F, Poly{}, Poly{}); }) == ErrorKind::BothZero);

    std::mt19937_64 rng(6);
    for (int t = 0; t < 100; ++t) {
        Poly a = random_poly(F, rng, 5), b = random_poly(F, rng, 5);
        if (fqp::is_zero(a) && fqp::is_zero(b)) continue;
        Poly g = fqp::gcd(F, a, b);
        if (fqp::is_zero(g)) continue;
        CHECK(fqp::is_zero(fqp::mod(F, a, g)));
        CHECK(fqp::is_zero(fqp::mod(F, b, g)));
    }
}

TEST_CASE("eval and derivative") {
    SmallField F = make_prime_smallfield(5);
    Poly a = {1, 0, 2}; // 2x^2 + 1
    CHECK(fqp::eval(F, a, 0) == 1);
    CHECK(fqp::eval(F, a, 2) == F.add(F.mul(2, 4), 1));
    CHECK(fqp::derivative(F, a) == Poly{0, 4});
    // derivative of x^5 vanishes in characteristic 5
    CHECK(fqp::derivative(F, Poly{0, 0, 0, 0, 0, 1}) == Poly{});
}

TEST_CASE("modular arithmetic") {
    SmallField F = make_prime_smallfield(3);
    Poly m = {1, 0, 1}; // x^2 + 1
    // x^4 = 1 mod m, so x^9 = x
    CHECK(fqp::powmod(F, Poly{0, 1}, 9, m) == Poly{0, 1});
    CHECK(fqp::powmod(F, Poly{0, 1}, 4, m) == Poly{1});
    std::mt19937_64 rng(8);
    for (int t = 0; t < 100; ++t) {
        Poly a = random_poly(F, rng, 1);
        if (fqp::is_zero(a)) continue;
        Poly inv = fqp::invmod(F, a, m);
        CHECK(fqp::mulmod(F, a, inv, m) == Poly{1});
    }
}

TEST_CASE("irreducibility and lexicographic selection") {
    SmallField F = make_prime_smallfield(3);
    CHECK(fqp::is_irreducible(F, Poly{1, 0, 1}));
    CHECK(!fqp::is_irreducible(F, Poly{0, 1, 1}));
    CHECK(!fqp::is_irreducible(F, Poly{2, 0, 1})); // x^2 - 1
    CHECK(fqp::lex_smallest_irreducible(F, 2) == Poly{1, 0, 1});
    Poly q4 = fqp::lex_smallest_irreducible(F, 4);
    CHECK(fqp::deg(q4) == 4);
    CHECK(fqp::is_irreducible(F, q4));

    SmallField F5 = make_prime_smallfield(5);
    Poly q3 = fqp::lex_smallest_irreducible(F5, 3);
    CHECK(fqp::deg(q3) == 3);
    CHECK(fqp::is_irreducible(F5, q3));
}

TEST_CASE("factorization") {
    SmallField F = make_prime_smallfield(3);
    Poly x4m1 = fqp::xn_minus_1(F, 4);
    auto fs = fqp::factorize(F, x4m1, 1);
    // (x + 1)(x + 2)(x^2 + 1)
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].first == Poly{1, 1});
    CHECK(fs[0].second == 1);
    CHECK(fs[1].first == Poly{2, 1});
    CHECK(fs[2].first == Poly{1, 0, 1});

    // multiplicities: x^6 - 1 = (x^2 - 1)^3 = (x + 1)^3 (x + 2)^3 in char 3
    auto fs6 = fqp::factorize(F, fqp::xn_minus_1(F, 6), 1);
    REQUIRE(fs6.size() == 2);
    CHECK(fs6[0].first == Poly{1, 1});
    CHECK(fs6[0].second == 3);
    CHECK(fs6[1].first == Poly{2, 1});
    CHECK(fs6[1].second == 3);

    // seed independence of the sorted output
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        Poly a = random_poly(F, rng, 6);
        if (fqp::deg(a) < 1) continue;
        CHECK(fqp::factorize(F, a, 1) == fqp::factorize(F, a, 999));
    }
}

TEST_CASE("resultant and norm") {
    SmallField F = make_prime_smallfield(3);
    // Res(x^2 + 1, x + 1) = value of x^2 + 1 at -1 = 2
    CHECK(fqp::resultant(F, Poly{1, 0, 1}, Poly{1, 1}) == 2);
    CHECK(fqp::resultant(F, Poly{1, 1}, Poly{1, 0, 1}) == 2);
    // norm of the residue of x in F_9 = F_3[x]/(x^2+1): x x^3 = -x^2 = 1
    CHECK(fqp::norm_mod(F, Poly{0, 1}, Poly{1, 0, 1}) == 1);
    CHECK(fqp::norm_mod(F, Poly{1, 0, 1}, Poly{1, 0, 1}) == 0);

    // for monic irreducible m, norm_mod(a, m) = Res(m, a)
    std::mt19937_64 rng(10);
    Poly m = fqp::lex_smallest_irreducible(F, 3);
    for (int t = 0; t < 100; ++t) {
        Poly a = random_poly(F, rng, 5);
        CHECK(fqp::norm_mod(F, a, m) == fqp::resultant(F, m, a));
    }
}
