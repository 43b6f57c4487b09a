#ifndef ASQF_LINPOLY_HPP
#define ASQF_LINPOLY_HPP

#include <vector>

#include "asqf/ffmat.hpp"
#include "asqf/fqlinalg.hpp"
#include "asqf/gf.hpp"

namespace asqf {

/// q-linearized polynomial L(x) = sum_{i=0}^{n-1} a_i x^(q^i), reduced
/// modulo x^(q^n) - x, acting F_q-linearly on F_{q^n}. The coefficient
/// vector always has length n.
struct LinPoly {
    const FieldCtx* ctx = nullptr;
    std::vector<FFElem> a;

    bool is_zero() const {
        for (const auto& c : a)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Largest i with a_i != 0, or -1 for the zero polynomial. The
    /// polynomial degree of L is q^qdeg.
    int qdeg() const {
        for (int i = int(a.size()) - 1; i >= 0; --i)
            if (!a[i].is_zero()) return i;
        return -1;
    }

    bool operator==(const LinPoly& o) const { return ctx == o.ctx && a == o.a; }
    bool operator!=(const LinPoly& o) const { return !(*this == o); }
};

/// Build from at most n coefficients, low q-power first; pads with zeros.
LinPoly make_linpoly(const Ctx& ctx, const std::vector<FFElem>& coeffs);
LinPoly linpoly_zero(const Ctx& ctx);

/// Monomial a x^(q^i), 0 <= i < n.
LinPoly linpoly_monomial(const Ctx& ctx, const FFElem& a, uint32_t i);

FFElem eval(const LinPoly& L, const FFElem& x);

LinPoly add(const LinPoly& A, const LinPoly& B);
LinPoly sub(const LinPoly& A, const LinPoly& B);
LinPoly scale(const LinPoly& A, const FFElem& c);

/// Adjoint with respect to the trace form: Tr(y L(x)) = Tr(x adj(L)(y)).
/// Coefficientwise, the index-i coefficient a_i (i >= 1) moves to index n-i
/// as a_i^(q^(n-i)); the constant-index coefficient stays put.
LinPoly adjoint(const LinPoly& L);

/// (L + adjoint(L)) / 2, the self-adjoint part generating the same
/// quadratic form Tr(x L(x)).
LinPoly symmetrize(const LinPoly& L);

bool is_self_adjoint(const LinPoly& L);

/// Composition A(B(x)) reduced modulo x^(q^n) - x:
/// coefficient k is sum over i+j == k (mod n) of a_i b_j^(q^i).
LinPoly compose_mod(const LinPoly& A, const LinPoly& B);

/// Coordinate matrix of the F_q-linear map x -> L(x): column j holds the
/// coordinates of L(t^j).
FqMat linpoly_matrix(const LinPoly& L);

/// An F_q-subspace of F_{q^n} in canonical form: the rows of `rows` are the
/// reduced row-echelon basis, as coordinate vectors. Two subspaces are equal
/// iff their canonical matrices are equal. elements() enumerates all q^dim
/// members of the subspace, subject to the context's enumeration budget.
struct SubspaceBasis {
    const FieldCtx* ctx = nullptr;
    FqMat rows;

    size_t dim() const { return rows.rows; }
    std::vector<FFElem> elements() const;
    bool operator==(const SubspaceBasis& o) const { return ctx == o.ctx && rows == o.rows; }
};

SubspaceBasis kernel_basis(const LinPoly& L);
SubspaceBasis image_basis(const LinPoly& L);

/// Orthogonal complement under the trace form: {y : Tr(y w) = 0 for all w in W}.
SubspaceBasis perp_basis(const SubspaceBasis& W);

/// Dickson matrix M_L with entry (i, j) = a_{(j-i) mod n}^(q^i). Its rank
/// over F_{q^n} equals n minus the F_q-dimension of ker L.
FFMat dickson_matrix(const LinPoly& L);

/// Leading k x k submatrix (rows and columns 0..k-1), 1 <= k <= n.
FFMat dickson_leading(const FFMat& M, size_t k);

/// Shifted r x r submatrix: rows 1..r, columns 0..r-1 (0-indexed), 1 <= r < n.
/// For self-adjoint L of rank r this is the companion minor whose square is
/// (det leading r x r)^(q+1).
FFMat dickson_shifted(const FFMat& M, size_t r);

/// For L with every coefficient in F_q: the associate polynomial
/// L*(x) = sum a_i x^i in F_q[x]. Throws CoefficientsNotInBaseField.
fqp::Poly lstar(const LinPoly& L);

} // namespace asqf

#endif
