#ifndef FDSF_FIELD_HPP
#define FDSF_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdsf/poly_zp.hpp"
#include "fdsf/zp_matrix.hpp"

namespace fdsf {

// Validated prime power p^n.
struct PrimePower {
    std::int64_t p;
    int n;
    std::int64_t value;  // p^n

    PrimePower(std::int64_t p_, int n_);
};

// Element of GF(p^r): coordinates in the polynomial basis 1, x, ..., x^{r-1}
// modulo the context's irreducible modulus.
struct FieldElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const FieldElement& a, const FieldElement& b) = default;
    friend auto operator<=>(const FieldElement& a, const FieldElement& b) = default;
};

// The ambient field GF(p^r). Immutable after construction; all operations are
// pure, so contexts can be shared freely across threads.
class FieldContext {
public:
    std::int64_t p() const { return p_; }
    int r() const { return r_; }
    const PolyZp& modulus() const { return modulus_; }
    std::int64_t element_count() const { return count_; }

    FieldElement zero() const { return FieldElement{std::vector<std::int64_t>(r_, 0)}; }
    FieldElement one() const { return from_int(1); }
    FieldElement from_int(std::int64_t c) const;  // constant c mod p, embedded in GF(p^r)

    // Element enumeration by integer encoding Sum c_i p^i.
    FieldElement from_index(std::int64_t idx) const;
    std::int64_t index_of(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;  // throws std::domain_error on zero
    FieldElement pow(const FieldElement& a, long long e) const;
    FieldElement scalar_mul(std::int64_t lambda, const FieldElement& a) const;
    // a^{p^i}; i is reduced mod r since x^{p^r} = x.
    FieldElement frobenius(const FieldElement& a, long long i) const;

    bool is_zero(const FieldElement& a) const;
    bool in_prime_subfield(const FieldElement& a) const;

    void check_element(const FieldElement& a) const;

    friend bool operator==(const FieldContext& a, const FieldContext& b);

    std::string spec_string() const;  // "GF(p^r)/c0,c1,...,cr"

private:
    friend FieldContext make_extension_field(std::int64_t, int, const std::optional<PolyZp>&);
    FieldContext(std::int64_t p, int r, PolyZp modulus, std::int64_t count);

    std::int64_t p_;
    int r_;
    PolyZp modulus_;
    std::int64_t count_;
};

// Builds GF(p^r). With no modulus, picks the canonical irreducible: the monic
// degree-r polynomial of least integer encoding. A supplied modulus must be
// monic of degree r and irreducible over Z_p.
FieldContext make_extension_field(std::int64_t p, int r,
                                  const std::optional<PolyZp>& modulus = std::nullopt);
// Parses "GF(p^r)/c0,c1,...,cr" (modulus optional: "GF(p^r)", "GF(p)").
FieldContext parse_field_spec(const std::string& spec);

// Ordered basis of GF(p^r) over Z_p.
class Basis {
public:
    enum class Kind { polynomial, normal, custom };

    static Basis polynomial(const FieldContext& ctx);
    static Basis custom(const FieldContext& ctx, std::vector<FieldElement> vectors);

    const FieldContext& ctx() const { return ctx_; }
    const std::vector<FieldElement>& vectors() const { return vecs_; }
    Kind kind() const { return kind_; }

    // Coordinates of a in this basis (solves the r x r system over Z_p).
    std::vector<std::int64_t> elem_to_vec(const FieldElement& a) const;
    // Sum v_i alpha_i.
    FieldElement vec_to_elem(const std::vector<std::int64_t>& v) const;

private:
    friend Basis find_normal_basis(const FieldContext& ctx);
    Basis(FieldContext ctx, std::vector<FieldElement> vecs, Kind kind);

    FieldContext ctx_;
    std::vector<FieldElement> vecs_;
    Kind kind_;
    ZpMatrix coord_;      // columns are basis coordinates
    ZpMatrix coord_inv_;
};

// First alpha in element-enumeration order whose conjugates
// {alpha, alpha^p, ..., alpha^{p^{r-1}}} are linearly independent.
Basis find_normal_basis(const FieldContext& ctx);

}  // namespace fdsf

#endif
