#include "fdsf/poly_zp.hpp"

#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

PolyZp::PolyZp(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (!is_prime(p_)) throw std::invalid_argument("PolyZp: p must be prime");
    for (auto& c : c_) c = mod_norm(c, p_);
    normalize();
}

void PolyZp::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZp PolyZp::x_pow_minus_one(std::int64_t p, int r) {
    std::vector<std::int64_t> c(r + 1, 0);
    c[0] = p - 1;
    c[r] = 1;
    return PolyZp(p, std::move(c));
}

PolyZp PolyZp::from_encoding(std::int64_t p, std::int64_t enc) {
    std::vector<std::int64_t> c;
    for (std::int64_t v = enc; v > 0; v /= p) c.push_back(v % p);
    return PolyZp(p, std::move(c));
}

std::int64_t PolyZp::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

std::int64_t PolyZp::encoding() const {
    std::int64_t enc = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) enc = enc * p_ + c_[i];
    return enc;
}

std::int64_t PolyZp::eval(std::int64_t x) const {
    std::int64_t v = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) v = mod_norm(v * x + c_[i], p_);
    return v;
}

PolyZp operator+(const PolyZp& a, const PolyZp& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PolyZp: mixed characteristics");
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return PolyZp(a.p_, std::move(c));
}

PolyZp operator-(const PolyZp& a, const PolyZp& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PolyZp: mixed characteristics");
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return PolyZp(a.p_, std::move(c));
}

PolyZp operator*(const PolyZp& a, const PolyZp& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("PolyZp: mixed characteristics");
    if (a.is_zero() || b.is_zero()) return PolyZp::zero(a.p_);
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = (c[i + j] + a.c_[i] * b.c_[j]) % a.p_;
    return PolyZp(a.p_, std::move(c));
}

bool operator==(const PolyZp& a, const PolyZp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

std::pair<PolyZp, PolyZp> poly_divmod(const PolyZp& a, const PolyZp& b) {
    if (a.p() != b.p()) throw std::invalid_argument("PolyZp: mixed characteristics");
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    const std::int64_t p = a.p();
    std::vector<std::int64_t> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {PolyZp::zero(p), a};
    std::vector<std::int64_t> quo(a.degree() - db + 1, 0);
    std::int64_t lead_inv = inv_mod(b.coeff(db), p);
    for (int i = a.degree(); i >= db; --i) {
        std::int64_t c = rem[i];
        if (c == 0) continue;
        std::int64_t q = (c * lead_inv) % p;
        quo[i - db] = q;
        for (int j = 0; j <= db; ++j)
            rem[i - db + j] = mod_norm(rem[i - db + j] - q * b.coeff(j), p);
    }
    return {PolyZp(p, std::move(quo)), PolyZp(p, std::move(rem))};
}

PolyZp poly_mod(const PolyZp& a, const PolyZp& b) { return poly_divmod(a, b).second; }

PolyZp poly_gcd(PolyZp a, PolyZp b) {
    while (!b.is_zero()) {
        PolyZp r = poly_mod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    // scale monic
    std::int64_t inv = inv_mod(a.coeff(a.degree()), a.p());
    return a * PolyZp::constant(a.p(), inv);
}

PolyZp poly_inverse_mod(const PolyZp& a, const PolyZp& m) {
    const std::int64_t p = a.p();
    PolyZp r0 = m, r1 = poly_mod(a, m);
    PolyZp t0 = PolyZp::zero(p), t1 = PolyZp::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        PolyZp t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw std::domain_error("poly_inverse_mod: element not invertible");
    std::int64_t inv = inv_mod(r0.coeff(0), p);
    return poly_mod(t0 * PolyZp::constant(p, inv), m);
}

bool is_irreducible(const PolyZp& f) {
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const std::int64_t p = f.p();
    for (int dd = 1; dd <= d / 2; ++dd) {
        // all monic polynomials of degree dd: x^dd + (encoding < p^dd)
        std::int64_t count = checked_pow(p, dd);
        for (std::int64_t enc = 0; enc < count; ++enc) {
            std::vector<std::int64_t> c(dd + 1, 0);
            std::int64_t v = enc;
            for (int i = 0; i < dd; ++i) {
                c[i] = v % p;
                v /= p;
            }
            c[dd] = 1;
            if (poly_mod(f, PolyZp(p, std::move(c))).is_zero()) return false;
        }
    }
    return true;
}

std::string PolyZp::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0 || c_[i] != 1) s += std::to_string(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace fdsf
