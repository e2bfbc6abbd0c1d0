#include "fdsf/zp_matrix.hpp"

#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

namespace {

// Row-echelon elimination shared by rank/det/solve/null_space. Returns the
// pivot column of each pivot row; `rhs` (if present) is eliminated alongside.
struct Echelon {
    std::vector<std::vector<std::int64_t>> a;
    std::vector<std::int64_t> rhs;
    std::vector<int> pivot_col;
    std::int64_t det = 1;
};

Echelon eliminate(const ZpMatrix& m, const std::vector<std::int64_t>* b) {
    const std::int64_t p = m.p();
    Echelon ech;
    ech.a.assign(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) ech.a[i][j] = m.at(i, j);
    if (b) ech.rhs = *b;

    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (ech.a[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row) {
            std::swap(ech.a[piv], ech.a[row]);
            if (b) std::swap(ech.rhs[piv], ech.rhs[row]);
            ech.det = mod_norm(-ech.det, p);
        }
        std::int64_t inv = inv_mod(ech.a[row][col], p);
        ech.det = ech.det * ech.a[row][col] % p;
        for (int j = col; j < m.cols(); ++j) ech.a[row][j] = ech.a[row][j] * inv % p;
        if (b) ech.rhs[row] = ech.rhs[row] * inv % p;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || ech.a[i][col] == 0) continue;
            std::int64_t f = ech.a[i][col];
            for (int j = col; j < m.cols(); ++j)
                ech.a[i][j] = mod_norm(ech.a[i][j] - f * ech.a[row][j], p);
            if (b) ech.rhs[i] = mod_norm(ech.rhs[i] - f * ech.rhs[row], p);
        }
        ech.pivot_col.push_back(col);
        ++row;
    }
    return ech;
}

}  // namespace

ZpMatrix::ZpMatrix(std::int64_t p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {
    if (!is_prime(p)) throw std::invalid_argument("ZpMatrix: p must be prime");
    if (rows < 1 || cols < 1) throw std::invalid_argument("ZpMatrix: empty dimensions");
}

ZpMatrix::ZpMatrix(std::int64_t p, int rows, int cols, std::vector<std::int64_t> entries)
    : ZpMatrix(p, rows, cols) {
    if (entries.size() != e_.size()) throw std::invalid_argument("ZpMatrix: entry count mismatch");
    for (size_t k = 0; k < entries.size(); ++k) e_[k] = mod_norm(entries[k], p_);
}

ZpMatrix ZpMatrix::identity(std::int64_t p, int n) {
    ZpMatrix m(p, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ZpMatrix ZpMatrix::from_encoding(std::int64_t p, int n, std::int64_t enc) {
    ZpMatrix m(p, n, n);
    for (size_t k = 0; k < m.e_.size(); ++k) {
        m.e_[k] = enc % p;
        enc /= p;
    }
    return m;
}

std::int64_t ZpMatrix::encoding() const {
    std::int64_t enc = 0;
    for (size_t k = e_.size(); k-- > 0;) enc = enc * p_ + e_[k];
    return enc;
}

void ZpMatrix::set(int i, int j, std::int64_t v) {
    e_[static_cast<size_t>(i) * cols_ + j] = mod_norm(v, p_);
}

ZpMatrix ZpMatrix::transpose() const {
    ZpMatrix t(p_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool ZpMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

ZpMatrix operator*(const ZpMatrix& a, const ZpMatrix& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("ZpMatrix: mixed moduli");
    if (a.cols_ != b.rows_) throw std::invalid_argument("ZpMatrix: dimension mismatch");
    ZpMatrix c(a.p_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                c.set(i, j, c.at(i, j) + aik * b.at(k, j) % a.p_);
        }
    return c;
}

bool operator==(const ZpMatrix& a, const ZpMatrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

std::vector<std::int64_t> ZpMatrix::apply(const std::vector<std::int64_t>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("ZpMatrix: vector length mismatch");
    std::vector<std::int64_t> out(rows_, 0);
    for (int i = 0; i < rows_; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < cols_; ++j) s = (s + at(i, j) * v[j]) % p_;
        out[i] = s;
    }
    return out;
}

int ZpMatrix::rank() const { return static_cast<int>(eliminate(*this, nullptr).pivot_col.size()); }

std::int64_t ZpMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("ZpMatrix: det of non-square matrix");
    Echelon ech = eliminate(*this, nullptr);
    if (static_cast<int>(ech.pivot_col.size()) < rows_) return 0;
    return ech.det;
}

std::optional<ZpMatrix> ZpMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("ZpMatrix: inverse of non-square matrix");
    // Eliminate [A | I] column by column.
    ZpMatrix aug(p_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.set(i, j, at(i, j));
        aug.set(i, cols_ + i, 1);
    }
    Echelon ech = eliminate(aug, nullptr);
    for (int i = 0; i < rows_; ++i)
        if (i >= static_cast<int>(ech.pivot_col.size()) || ech.pivot_col[i] != i) return std::nullopt;
    ZpMatrix inv(p_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.set(i, j, ech.a[i][cols_ + j]);
    return inv;
}

std::vector<std::vector<std::int64_t>> ZpMatrix::null_space() const {
    Echelon ech = eliminate(*this, nullptr);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : ech.pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::int64_t>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::int64_t> v(cols_, 0);
        v[free] = 1;
        for (size_t r = 0; r < ech.pivot_col.size(); ++r)
            v[ech.pivot_col[r]] = mod_norm(-ech.a[r][free], p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<std::int64_t>> ZpMatrix::solve(const std::vector<std::int64_t>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("ZpMatrix: rhs length mismatch");
    std::vector<std::int64_t> rhs(b);
    for (auto& v : rhs) v = mod_norm(v, p_);
    Echelon ech = eliminate(*this, &rhs);
    for (int i = static_cast<int>(ech.pivot_col.size()); i < rows_; ++i)
        if (ech.rhs[i] != 0) return std::nullopt;
    std::vector<std::int64_t> x(cols_, 0);
    for (size_t r = 0; r < ech.pivot_col.size(); ++r) x[ech.pivot_col[r]] = ech.rhs[r];
    return x;
}

}  // namespace fdsf
