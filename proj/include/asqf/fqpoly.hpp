#ifndef ASQF_FQPOLY_HPP
#define ASQF_FQPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "asqf/smallfield.hpp"

namespace asqf::fqp {

/// Dense univariate polynomial over a SmallField: coefficient indices low to
/// high, normalized so the leading coefficient is nonzero. The zero
/// polynomial is the empty vector and has degree -1.
using Poly = std::vector<uint16_t>;

int deg(const Poly& a);
void normalize(Poly& a);
bool is_zero(const Poly& a);
uint16_t lead(const Poly& a);

Poly add(const SmallField& F, const Poly& a, const Poly& b);
Poly sub(const SmallField& F, const Poly& a, const Poly& b);
Poly neg(const SmallField& F, const Poly& a);
Poly scale(const SmallField& F, const Poly& a, uint16_t c);
Poly mul(const SmallField& F, const Poly& a, const Poly& b);

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const SmallField& F, const Poly& a, const Poly& b);
Poly mod(const SmallField& F, const Poly& a, const Poly& b);

/// Exact quotient; throws InternalCheckFailed if b does not divide a.
Poly divexact(const SmallField& F, const Poly& a, const Poly& b);

Poly make_monic(const SmallField& F, const Poly& a);

/// Monic gcd. Both arguments zero is rejected as undefined.
Poly gcd(const SmallField& F, const Poly& a, const Poly& b);

uint16_t eval(const SmallField& F, const Poly& a, uint16_t x);
Poly derivative(const SmallField& F, const Poly& a);
Poly mulmod(const SmallField& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const SmallField& F, const Poly& base, uint64_t e, const Poly& m);

/// Inverse of a modulo m (extended Euclid); a and m must be coprime.
Poly invmod(const SmallField& F, const Poly& a, const Poly& m);

/// x^n - 1 as a polynomial (n >= 1).
Poly xn_minus_1(const SmallField& F, uint32_t n);

/// Irreducibility over F for deg a >= 1, by the standard Frobenius test:
/// x^(q^d) == x mod a and gcd(x^(q^(d/t)) - x, a) = 1 for prime t | d.
bool is_irreducible(const SmallField& F, const Poly& a);

/// The lexicographically smallest monic irreducible of degree d, scanning
/// coefficient tuples (c_0, ..., c_{d-1}) in lexicographic order with c_0
/// the most significant position.
Poly lex_smallest_irreducible(const SmallField& F, uint32_t d);

/// Complete factorization into monic irreducibles with multiplicities,
/// via squarefree decomposition, distinct-degree splitting, and
/// Cantor-Zassenhaus equal-degree splitting (q odd). The PRNG used for the
/// splitting is seeded deterministically from `seed`, and the returned list
/// is sorted by (degree, coefficient tuple) so the output does not depend
/// on the splitting order. The product of the factors (with multiplicity)
/// is checked against the input.
std::vector<std::pair<Poly, int>> factorize(const SmallField& F, const Poly& a, uint64_t seed);

/// Resultant Res(a, b) computed by the Euclidean remainder chain.
uint16_t resultant(const SmallField& F, const Poly& a, const Poly& b);

/// Norm of the residue class (a mod m) from F[x]/(m) down to F, for m monic
/// irreducible: the product of the q-power Frobenius conjugates. Returns an
/// element of F (0 when m | a).
uint16_t norm_mod(const SmallField& F, const Poly& a, const Poly& m);

} // namespace asqf::fqp

#endif
