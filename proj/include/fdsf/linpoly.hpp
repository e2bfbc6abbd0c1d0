#ifndef FDSF_LINPOLY_HPP
#define FDSF_LINPOLY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fdsf/field.hpp"
#include "fdsf/poly_zp.hpp"
#include "fdsf/zp_matrix.hpp"

namespace fdsf {

// L(x) = Sum_{i=0}^{r-1} A_i x^{p^i} over GF(p^r). Coefficients are kept at
// length exactly r, so equal coefficient vectors means equal maps.
struct LinearizedPoly {
    FieldContext ctx;
    std::vector<FieldElement> coeffs;  // A_0 ... A_{r-1}

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
        return a.ctx == b.ctx && a.coeffs == b.coeffs;
    }
};

// Z_p-subspace of GF(p^r) given by a basis of coordinate vectors.
struct Subspace {
    FieldContext ctx;
    std::vector<std::vector<std::int64_t>> basis;
    int dimension;
};

LinearizedPoly lp_zero(const FieldContext& ctx);
LinearizedPoly lp_identity(const FieldContext& ctx);
// L with the given coefficient vector (padded/validated to length r).
LinearizedPoly lp_make(const FieldContext& ctx, std::vector<FieldElement> coeffs);
// Member of the prime-coefficient class L_p from residues (a_0,...,a_{r-1}).
LinearizedPoly lp_from_prime_coeffs(const FieldContext& ctx, const std::vector<std::int64_t>& a);

FieldElement lp_eval(const LinearizedPoly& l, const FieldElement& x);
// Symbolic composition l1(l2(x)) reduced mod x^{p^r} - x.
LinearizedPoly lp_compose(const LinearizedPoly& l1, const LinearizedPoly& l2);

// Matrix of the induced Z_p-linear map in basis b (column j = coords of L(alpha_j)),
// and its inverse: the unique linearized polynomial realizing a given matrix.
ZpMatrix lp_matrix(const LinearizedPoly& l, const Basis& b);
LinearizedPoly lp_from_matrix(const ZpMatrix& m, const Basis& b);

Subspace lp_kernel(const LinearizedPoly& l);
bool lp_is_invertible(const LinearizedPoly& l);

// Lemma: A^{p+1} != B^{p+1} implies Ax^p + Bx is invertible on GF(p^2).
// This is the predicate only; lp_is_invertible stays the authoritative test.
bool quadratic_invertibility(const FieldContext& ctx, const FieldElement& a, const FieldElement& b);

// Membership in L_p (all coefficients in the prime subfield).
bool lp_in_prime_class(const LinearizedPoly& l);
// l(x) = Sum A_i x^i; throws if some coefficient is outside the prime subfield.
PolyZp associate(const LinearizedPoly& l);
LinearizedPoly lp_from_associate(const FieldContext& ctx, const PolyZp& a);

// Least n >= 1 with l(x)^n = 1 mod x^r - 1 (equivalently: n-fold composition
// is the identity map); nullopt when the associate is not invertible.
std::optional<long long> lp_order(const LinearizedPoly& l);

// All p^r members of L_p, ascending by associate encoding.
std::vector<LinearizedPoly> enumerate_prime_class(const FieldContext& ctx);
// All (p^r)^r linearized polynomials; throws budget_error past the cap.
std::vector<LinearizedPoly> enumerate_all_linearized(const FieldContext& ctx,
                                                     long long budget = 1LL << 20);

// Everything commuting with l under composition. Enumerates all linearized
// polynomials unless a candidate set is supplied.
std::vector<LinearizedPoly> lp_commutant(const LinearizedPoly& l,
                                         const std::vector<LinearizedPoly>* candidates = nullptr,
                                         long long budget = 1LL << 20);

}  // namespace fdsf

#endif
