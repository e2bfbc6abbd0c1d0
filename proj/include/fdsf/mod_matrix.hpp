#ifndef FDSF_MOD_MATRIX_HPP
#define FDSF_MOD_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "fdsf/zp_matrix.hpp"

namespace fdsf {

// Square matrix over the ring Z_{p^n}, row-major entries in [0, p^n).
class ModMatrix {
public:
    ModMatrix(std::int64_t p, int n, int dim);
    ModMatrix(std::int64_t p, int n, int dim, std::vector<std::int64_t> entries);

    static ModMatrix identity(std::int64_t p, int n, int dim);

    std::int64_t p() const { return p_; }
    int n() const { return n_; }
    int dim() const { return dim_; }
    std::int64_t modulus() const { return mod_; }
    std::int64_t at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }
    void set(int i, int j, std::int64_t v);
    const std::vector<std::int64_t>& entries() const { return e_; }

    ZpMatrix mod_p() const;  // entrywise reduction mod p
    // A = I (mod p^k), k <= n.
    bool is_identity_mod(int k) const;
    bool is_identity() const { return is_identity_mod(n_); }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

    friend ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
    friend bool operator==(const ModMatrix& a, const ModMatrix& b);

private:
    std::int64_t p_;
    int n_;
    int dim_;
    std::int64_t mod_;
    std::vector<std::int64_t> e_;
};

ModMatrix mat_pow(ModMatrix a, long long e);

// |GL(dim, Z_{p^n})| = p^{(n-1)dim^2} * prod_{i<dim} (p^dim - p^i); saturates
// at a large sentinel instead of overflowing (it is only an iteration bound).
long long gl_order_bound(std::int64_t p, int n, int dim);

}  // namespace fdsf

#endif
