#ifndef FDSF_ZP_MATRIX_HPP
#define FDSF_ZP_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace fdsf {

// Dense matrix over the prime field Z_p, row-major.
class ZpMatrix {
public:
    ZpMatrix(std::int64_t p, int rows, int cols);
    ZpMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries);

    static ZpMatrix identity(std::int64_t p, int n);
    // Row-major digits: entry k (= row*cols + col) carries weight p^k.
    static ZpMatrix from_encoding(std::int64_t p, int n, std::int64_t enc);

    std::int64_t p() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, std::int64_t v);
    const std::vector<std::int64_t>& entries() const { return e_; }
    std::int64_t encoding() const;

    ZpMatrix transpose() const;
    bool is_identity() const;

    friend ZpMatrix operator*(const ZpMatrix& a, const ZpMatrix& b);
    friend bool operator==(const ZpMatrix& a, const ZpMatrix& b);

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;  // A*v

    int rank() const;
    std::int64_t det() const;
    std::optional<ZpMatrix> inverse() const;
    // Basis of the null space {v : A v = 0}, deterministic (free columns ascending).
    std::vector<std::vector<std::int64_t>> null_space() const;
    // One solution of A x = b, or nullopt if inconsistent.
    std::optional<std::vector<std::int64_t>> solve(const std::vector<std::int64_t>& b) const;

private:
    std::int64_t p_;
    int rows_, cols_;
    std::vector<std::int64_t> e_;
};

}  // namespace fdsf

#endif
