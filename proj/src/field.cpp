#include "fdsf/field.hpp"

#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

PrimePower::PrimePower(std::int64_t p_, int n_) : p(p_), n(n_), value(0) {
    if (!is_prime(p)) throw std::invalid_argument("PrimePower: p must be prime");
    if (n < 1) throw std::invalid_argument("PrimePower: exponent must be >= 1");
    value = checked_pow(p, n);
}

FieldContext::FieldContext(std::int64_t p, int r, PolyZp modulus, std::int64_t count)
    : p_(p), r_(r), modulus_(std::move(modulus)), count_(count) {}

FieldContext make_extension_field(std::int64_t p, int r, const std::optional<PolyZp>& modulus) {
    if (!is_prime(p)) throw std::invalid_argument("make_extension_field: p must be prime");
    if (r < 1) throw std::invalid_argument("make_extension_field: degree must be >= 1");
    std::int64_t count = checked_pow(p, r);
    if (modulus) {
        if (modulus->p() != p)
            throw std::invalid_argument("make_extension_field: modulus characteristic mismatch");
        if (modulus->degree() != r || !modulus->is_monic())
            throw std::invalid_argument("make_extension_field: modulus must be monic of degree r");
        if (!is_irreducible(*modulus))
            throw std::invalid_argument("make_extension_field: modulus is reducible over Z_p");
        return FieldContext(p, r, *modulus, count);
    }
    // Canonical modulus: monic x^r + (lower part), lower part by ascending encoding.
    for (std::int64_t low = 0; low < count; ++low) {
        std::vector<std::int64_t> c(r + 1, 0);
        std::int64_t v = low;
        for (int i = 0; i < r; ++i) {
            c[i] = v % p;
            v /= p;
        }
        c[r] = 1;
        PolyZp cand(p, std::move(c));
        if (is_irreducible(cand)) return FieldContext(p, r, cand, count);
    }
    throw std::logic_error("make_extension_field: no irreducible polynomial found");
}

FieldContext parse_field_spec(const std::string& spec) {
    // "GF(p^r)/c0,c1,...,cr" or "GF(p^r)" or "GF(p)"
    if (spec.rfind("GF(", 0) != 0)
        throw std::invalid_argument("field spec must start with GF(");
    size_t close = spec.find(')');
    if (close == std::string::npos) throw std::invalid_argument("field spec: missing )");
    std::string inner = spec.substr(3, close - 3);
    std::int64_t p;
    int r = 1;
    size_t caret = inner.find('^');
    try {
        if (caret == std::string::npos) {
            p = std::stoll(inner);
        } else {
            p = std::stoll(inner.substr(0, caret));
            r = std::stoi(inner.substr(caret + 1));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("field spec: bad p^r in " + spec);
    }
    std::optional<PolyZp> modulus;
    if (close + 1 < spec.size()) {
        if (spec[close + 1] != '/')
            throw std::invalid_argument("field spec: expected / after GF(p^r)");
        std::vector<std::int64_t> coeffs;
        std::string rest = spec.substr(close + 2);
        size_t pos = 0;
        while (pos <= rest.size()) {
            size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            try {
                coeffs.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw std::invalid_argument("field spec: bad coefficient '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        modulus = PolyZp(p, std::move(coeffs));
    }
    return make_extension_field(p, r, modulus);
}

std::string FieldContext::spec_string() const {
    std::string s = "GF(" + std::to_string(p_);
    if (r_ > 1) s += "^" + std::to_string(r_);
    s += ")/";
    for (int i = 0; i <= r_; ++i) {
        if (i) s += ",";
        s += std::to_string(modulus_.coeff(i));
    }
    return s;
}

FieldElement FieldContext::from_int(std::int64_t c) const {
    FieldElement e = zero();
    e.coords[0] = mod_norm(c, p_);
    return e;
}

FieldElement FieldContext::from_index(std::int64_t idx) const {
    if (idx < 0 || idx >= count_) throw std::invalid_argument("from_index: out of range");
    FieldElement e = zero();
    for (int i = 0; i < r_; ++i) {
        e.coords[i] = idx % p_;
        idx /= p_;
    }
    return e;
}

std::int64_t FieldContext::index_of(const FieldElement& a) const {
    check_element(a);
    std::int64_t idx = 0;
    for (int i = r_ - 1; i >= 0; --i) idx = idx * p_ + a.coords[i];
    return idx;
}

void FieldContext::check_element(const FieldElement& a) const {
    if (static_cast<int>(a.coords.size()) != r_)
        throw std::invalid_argument("field element has wrong coordinate count");
    for (auto c : a.coords)
        if (c < 0 || c >= p_) throw std::invalid_argument("field element coordinate out of range");
}

bool FieldContext::is_zero(const FieldElement& a) const {
    check_element(a);
    for (auto c : a.coords)
        if (c != 0) return false;
    return true;
}

bool FieldContext::in_prime_subfield(const FieldElement& a) const {
    check_element(a);
    for (int i = 1; i < r_; ++i)
        if (a.coords[i] != 0) return false;
    return true;
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    FieldElement out = zero();
    for (int i = 0; i < r_; ++i) out.coords[i] = mod_norm(a.coords[i] + b.coords[i], p_);
    return out;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    FieldElement out = zero();
    for (int i = 0; i < r_; ++i) out.coords[i] = mod_norm(a.coords[i] - b.coords[i], p_);
    return out;
}

FieldElement FieldContext::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldContext::scalar_mul(std::int64_t lambda, const FieldElement& a) const {
    check_element(a);
    lambda = mod_norm(lambda, p_);
    FieldElement out = zero();
    for (int i = 0; i < r_; ++i) out.coords[i] = a.coords[i] * lambda % p_;
    return out;
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
    check_element(a);
    check_element(b);
    PolyZp prod = PolyZp(p_, a.coords) * PolyZp(p_, b.coords);
    PolyZp red = poly_mod(prod, modulus_);
    FieldElement out = zero();
    for (int i = 0; i <= red.degree(); ++i) out.coords[i] = red.coeff(i);
    return out;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
    if (is_zero(a)) throw std::domain_error("field inverse of zero");
    PolyZp u = poly_inverse_mod(PolyZp(p_, a.coords), modulus_);
    FieldElement out = zero();
    for (int i = 0; i <= u.degree(); ++i) out.coords[i] = u.coeff(i);
    return out;
}

FieldElement FieldContext::pow(const FieldElement& a, long long e) const {
    check_element(a);
    FieldElement base = a;
    if (e < 0) {
        base = inv(a);
        e = -e;
    }
    FieldElement acc = one();
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElement FieldContext::frobenius(const FieldElement& a, long long i) const {
    check_element(a);
    if (i < 0) throw std::invalid_argument("frobenius: exponent must be >= 0");
    i %= r_;
    FieldElement out = a;
    for (long long k = 0; k < i; ++k) out = pow(out, p_);
    return out;
}

bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.p_ == b.p_ && a.r_ == b.r_ && a.modulus_ == b.modulus_;
}

Basis::Basis(FieldContext ctx, std::vector<FieldElement> vecs, Kind kind)
    : ctx_(std::move(ctx)),
      vecs_(std::move(vecs)),
      kind_(kind),
      coord_(ctx_.p(), ctx_.r(), ctx_.r()),
      coord_inv_(ctx_.p(), ctx_.r(), ctx_.r()) {
    const int r = ctx_.r();
    if (static_cast<int>(vecs_.size()) != r)
        throw std::invalid_argument("basis must contain exactly r elements");
    for (const auto& v : vecs_) ctx_.check_element(v);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i) coord_.set(i, j, vecs_[j].coords[i]);
    auto inv = coord_.inverse();
    if (!inv) throw std::invalid_argument("basis elements are linearly dependent");
    coord_inv_ = *inv;
}

Basis Basis::polynomial(const FieldContext& ctx) {
    std::vector<FieldElement> vecs;
    for (int i = 0; i < ctx.r(); ++i) {
        FieldElement e = ctx.zero();
        e.coords[i] = 1;
        vecs.push_back(std::move(e));
    }
    return Basis(ctx, std::move(vecs), Kind::polynomial);
}

Basis Basis::custom(const FieldContext& ctx, std::vector<FieldElement> vectors) {
    return Basis(ctx, std::move(vectors), Kind::custom);
}

Basis find_normal_basis(const FieldContext& ctx) {
    const int r = ctx.r();
    for (std::int64_t idx = 1; idx < ctx.element_count(); ++idx) {
        FieldElement alpha = ctx.from_index(idx);
        std::vector<FieldElement> conj(1, alpha);
        for (int i = 1; i < r; ++i) conj.push_back(ctx.frobenius(alpha, i));
        ZpMatrix m(ctx.p(), r, r);
        for (int j = 0; j < r; ++j)
            for (int i = 0; i < r; ++i) m.set(i, j, conj[j].coords[i]);
        if (m.rank() == r) return Basis(ctx, std::move(conj), Basis::Kind::normal);
    }
    // unreachable: every finite field has a normal basis
    throw std::logic_error("find_normal_basis: no normal element found");
}

std::vector<std::int64_t> Basis::elem_to_vec(const FieldElement& a) const {
    ctx_.check_element(a);
    return coord_inv_.apply(a.coords);
}

FieldElement Basis::vec_to_elem(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != ctx_.r())
        throw std::invalid_argument("vec_to_elem: wrong vector length");
    std::vector<std::int64_t> norm(v);
    for (auto& c : norm) c = mod_norm(c, ctx_.p());
    return FieldElement{coord_.apply(norm)};
}

}  // namespace fdsf
