#ifndef FDSF_POLY_ZP_HPP
#define FDSF_POLY_ZP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fdsf {

// Polynomial over Z_p, coefficients ascending by degree, always canonical:
// every coefficient in [0,p) and no trailing zeros (zero poly has empty coeffs).
class PolyZp {
public:
    PolyZp(std::int64_t p, std::vector<std::int64_t> coeffs);

    static PolyZp zero(std::int64_t p) { return PolyZp(p, {}); }
    static PolyZp constant(std::int64_t p, std::int64_t c) { return PolyZp(p, {c}); }
    static PolyZp x(std::int64_t p) { return PolyZp(p, {0, 1}); }
    // x^r - 1, the modulus used for associate-order computations.
    static PolyZp x_pow_minus_one(std::int64_t p, int r);
    // Decode Sum c_i p^i with c_i the coefficient of x^i.
    static PolyZp from_encoding(std::int64_t p, std::int64_t enc);

    std::int64_t p() const { return p_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    std::int64_t coeff(int i) const;
    std::int64_t encoding() const;

    std::int64_t eval(std::int64_t x) const;

    friend PolyZp operator+(const PolyZp& a, const PolyZp& b);
    friend PolyZp operator-(const PolyZp& a, const PolyZp& b);
    friend PolyZp operator*(const PolyZp& a, const PolyZp& b);
    friend bool operator==(const PolyZp& a, const PolyZp& b);

    std::string to_string() const;  // e.g. "x^3 + x + 1"

private:
    std::int64_t p_;
    std::vector<std::int64_t> c_;

    void normalize();
};

// Quotient and remainder; divisor must be nonzero.
std::pair<PolyZp, PolyZp> poly_divmod(const PolyZp& a, const PolyZp& b);
PolyZp poly_mod(const PolyZp& a, const PolyZp& b);
PolyZp poly_gcd(PolyZp a, PolyZp b);  // monic gcd
// u with u*a == 1 (mod m); throws std::domain_error if gcd(a,m) != 1.
PolyZp poly_inverse_mod(const PolyZp& a, const PolyZp& m);

// Trial division by all monic polynomials of degree 1..deg/2.
bool is_irreducible(const PolyZp& f);

}  // namespace fdsf

#endif
