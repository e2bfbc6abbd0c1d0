#include "fdsf/mod_matrix.hpp"

#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

ModMatrix::ModMatrix(std::int64_t p, int n, int dim)
    : p_(p), n_(n), dim_(dim), mod_(0), e_(static_cast<size_t>(dim) * dim, 0) {
    if (!is_prime(p)) throw std::invalid_argument("ModMatrix: p must be prime");
    if (n < 1) throw std::invalid_argument("ModMatrix: exponent must be >= 1");
    if (dim < 1) throw std::invalid_argument("ModMatrix: dimension must be >= 1");
    mod_ = checked_pow(p, n);
}

ModMatrix::ModMatrix(std::int64_t p, int n, int dim, std::vector<std::int64_t> entries)
    : ModMatrix(p, n, dim) {
    if (entries.size() != e_.size()) throw std::invalid_argument("ModMatrix: entry count mismatch");
    for (size_t k = 0; k < entries.size(); ++k) e_[k] = mod_norm(entries[k], mod_);
}

ModMatrix ModMatrix::identity(std::int64_t p, int n, int dim) {
    ModMatrix m(p, n, dim);
    for (int i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

void ModMatrix::set(int i, int j, std::int64_t v) {
    e_[static_cast<size_t>(i) * dim_ + j] = mod_norm(v, mod_);
}

ZpMatrix ModMatrix::mod_p() const {
    ZpMatrix m(p_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m.set(i, j, at(i, j) % p_);
    return m;
}

bool ModMatrix::is_identity_mod(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("is_identity_mod: level out of range");
    std::int64_t pk = checked_pow(p_, k);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (mod_norm(at(i, j) - (i == j ? 1 : 0), pk) != 0) return false;
    return true;
}

std::vector<std::int64_t> ModMatrix::apply(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("ModMatrix: vector length mismatch");
    std::vector<std::int64_t> out(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < dim_; ++j) s = (s + at(i, j) * v[j]) % mod_;
        out[i] = s;
    }
    return out;
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_) throw std::invalid_argument("ModMatrix: mixed moduli");
    if (a.dim_ != b.dim_) throw std::invalid_argument("ModMatrix: dimension mismatch");
    ModMatrix c(a.p_, a.n_, a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < a.dim_; ++j)
                c.set(i, j, c.at(i, j) + aik * b.at(k, j) % a.mod_);
        }
    return c;
}

bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.dim_ == b.dim_ && a.e_ == b.e_;
}

ModMatrix mat_pow(ModMatrix a, long long e) {
    if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
    ModMatrix acc = ModMatrix::identity(a.p(), a.n(), a.dim());
    while (e > 0) {
        if (e & 1) acc = acc * a;
        a = a * a;
        e >>= 1;
    }
    return acc;
}

long long gl_order_bound(std::int64_t p, int n, int dim) {
    const long long cap = 1LL << 62;
    auto mul_sat = [cap](long long& acc, long long f) {
        if (f < 1) f = 1;
        if (acc > cap / f)
            acc = cap;
        else
            acc *= f;
    };
    long long pd = 1;
    for (int i = 0; i < dim; ++i) mul_sat(pd, p);
    long long bound = 1, pi = 1;
    for (int i = 0; i < dim; ++i) {
        mul_sat(bound, pd - pi);
        mul_sat(pi, p);
    }
    for (int k = 0; k < (n - 1) * dim * dim; ++k) mul_sat(bound, p);
    return bound;
}

}  // namespace fdsf
