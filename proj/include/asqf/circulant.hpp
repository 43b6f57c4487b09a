#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "asqf/linpoly.hpp"
#include "asqf/quadform.hpp"

namespace asqf {

/// Everything the circulant route derives from L before evaluating any
/// product: the associate polynomial L*, the monic g = gcd(L*, x^n - 1),
/// the canonical witness G = L*/g, the cofactor Q = (x^n - 1)/g whose
/// roots are the omega_j appearing in the product formulas, and Q's
/// irreducible factorization over F_q.
struct CircData {
    fqp::Poly lstar;
    fqp::Poly g;
    fqp::Poly G;
    fqp::Poly Q;
    size_t r = 0;   // n - deg g
    uint16_t c = 0; // constant term of g
    size_t mu = 0;  // multiplicity of -1 as a root of g
    std::vector<std::pair<fqp::Poly, int>> q_factors;
};

CircData circ_data(const LinPoly& L);

/// prod_{Q(omega)=0} P(omega), roots with multiplicity, evaluated as norms
/// from F_q[x]/(h) for each irreducible factor h of Q. Lands in F_q.
uint16_t norm_product(const SmallField& F, const fqp::Poly& P,
                      const std::vector<std::pair<fqp::Poly, int>>& q_factors);

/// rank M_L = n - deg gcd(L*, x^n - 1). L nonzero with F_q coefficients;
/// self-adjointness is not required here.
size_t circ_rank(const LinPoly& L);

/// det M_L^{(r)} = prod omega_j^{-r} G(omega_j) over the r roots of Q.
/// At full rank this is prod L*(omega_j). Returned as an element of the
/// extension field for direct comparison with the Dickson minors.
FFElem circ_subdet(const LinPoly& L);

/// Same value through Res(Q, G); kept as an independent route for tests.
FFElem circ_subdet_resultant(const LinPoly& L);

/// The sign of the form of a nonzero self-adjoint L with F_q coefficients.
/// Computes every case whose hypothesis holds and insists they agree:
/// the constant-term criterion, the (-1)-multiplicity formula, the full
/// rank formula, and (when ell_info = (m, a) describes an ell of degree
/// q^m with leading coefficient a) the leading-coefficient formula.
int circ_epsilon(const LinPoly& L,
                 std::optional<std::pair<uint32_t, uint16_t>> ell_info = std::nullopt);

/// Bundles rank and sign into the shared record, method tag "circulant".
QuadClass circ_classify(const LinPoly& L,
                        std::optional<std::pair<uint32_t, uint16_t>> ell_info = std::nullopt);

/// The (m, a) argument for the leading-coefficient case, when it applies
/// to this ell: every coefficient in F_q, qdeg >= 1, nonzero symmetrized
/// part of rank exactly n - 2 qdeg. Empty otherwise.
std::optional<std::pair<uint32_t, uint16_t>> circ_ell_info(const LinPoly& ell);

} // namespace asqf
