#ifndef FDSF_MODSYS_HPP
#define FDSF_MODSYS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdsf/fds.hpp"
#include "fdsf/mod_matrix.hpp"
#include "fdsf/poly_zp.hpp"

namespace fdsf {

// Order of an invertible matrix A modulo p^n together with the intermediate
// values of the lifting method: e = order mod p, beta = largest level with
// A^e = I (mod p^beta).
struct OrderCertificate {
    long long e;
    PolyZp minimal_poly_mod_p;
    int beta;
    long long total_order;
    std::string method;  // "lifted" or "direct"
};

// Least t >= 1 with A^t = I (mod p^n) by iterated multiplication; nullopt
// when det(A) is divisible by p. Serves as the oracle for the lifted method.
std::optional<long long> matrix_order_direct(const ModMatrix& a);

// Least-degree monic m with m(A) = 0 (mod p), found among monic divisors of
// the characteristic polynomial in (degree, encoding) order.
PolyZp minimal_polynomial_mod_p(const ModMatrix& a);

// The lifting method: e from the order mod p, beta from A^e, then the
// power-of-p factor (stepwise squaring in the p = 2, beta = 1 case, where
// the e * p^{n-beta} formula is not guaranteed).
OrderCertificate matrix_order_lifted(const ModMatrix& a);
// Same certificate shape with total_order found by direct iteration.
OrderCertificate order_certificate_direct(const ModMatrix& a);

// Extensional bijection between Z_p^n (digit tuples) and Z_{p^n} (residues);
// table[tuple-encoding] = residue.
struct Bijection {
    std::int64_t p;
    int n;
    std::vector<std::int64_t> table;

    Bijection(std::int64_t p, int n, std::vector<std::int64_t> table);
};

// The base-p digit expansion, least significant digit first (the identity on
// encodings).
Bijection digit_bijection(std::int64_t p, int n);

// Conjugates f over Z_{p^n}^r by the componentwise bijection g, yielding the
// table over Z_p^{nr} with an isomorphic state diagram.
FunctionTable conjugate_system(const FunctionTable& f, const Bijection& g);

// The linear system x -> A x as an explicit table over Z_{p^n}^dim.
FunctionTable linear_system_table(const ModMatrix& a);

}  // namespace fdsf

#endif
