#include "fdsf/modsys.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

std::optional<long long> matrix_order_direct(const ModMatrix& a) {
    if (a.mod_p().det() == 0) return std::nullopt;
    const long long bound = gl_order_bound(a.p(), a.n(), a.dim());
    ModMatrix acc = a;
    for (long long t = 1; t <= bound; ++t) {
        if (acc.is_identity()) return t;
        acc = acc * a;
    }
    throw std::logic_error("matrix_order_direct: order exceeded the group bound");
}

namespace {

// Characteristic polynomial det(xI - A) mod p by cofactor expansion over
// Z_p[x]; fine at desk-scale dimensions.
PolyZp char_poly_mod_p(const ModMatrix& a) {
    const std::int64_t p = a.p();
    const int d = a.dim();
    std::vector<std::vector<PolyZp>> m(d, std::vector<PolyZp>(d, PolyZp::zero(p)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::int64_t c = mod_norm(-a.at(i, j), p);
            m[i][j] = i == j ? PolyZp(p, {c, 1}) : PolyZp::constant(p, c);
        }

    std::vector<int> cols(d);
    for (int j = 0; j < d; ++j) cols[j] = j;
    auto det = [&](auto&& self, std::vector<int>& cs, int row) -> PolyZp {
        if (cs.size() == 1) return m[row][cs[0]];
        PolyZp acc = PolyZp::zero(p);
        for (size_t k = 0; k < cs.size(); ++k) {
            int col = cs[k];
            std::vector<int> rest;
            for (size_t t = 0; t < cs.size(); ++t)
                if (t != k) rest.push_back(cs[t]);
            PolyZp sub = self(self, rest, row + 1);
            PolyZp term = m[row][col] * sub;
            acc = (k % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    return det(det, cols, 0);
}

ModMatrix eval_poly_at_matrix_mod_p(const PolyZp& f, const ModMatrix& a) {
    ModMatrix am(a.p(), 1, a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) am.set(i, j, a.at(i, j));
    ModMatrix acc(a.p(), 1, a.dim());
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * am;
        for (int k = 0; k < a.dim(); ++k) acc.set(k, k, acc.at(k, k) + f.coeff(i));
    }
    return acc;
}

bool is_zero_matrix(const ModMatrix& m) {
    for (auto v : m.entries())
        if (v != 0) return false;
    return true;
}

// Largest k <= n with B = I (mod p^k); 0 if B != I even mod p.
int congruence_level(const ModMatrix& b) {
    int level = 0;
    while (level < b.n() && b.is_identity_mod(level + 1)) ++level;
    return level;
}

}  // namespace

PolyZp minimal_polynomial_mod_p(const ModMatrix& a) {
    const std::int64_t p = a.p();
    PolyZp chi = char_poly_mod_p(a);
    for (int d = 1; d <= a.dim(); ++d) {
        std::int64_t count = checked_pow(p, d);
        for (std::int64_t enc = 0; enc < count; ++enc) {
            std::vector<std::int64_t> c(d + 1, 0);
            std::int64_t v = enc;
            for (int i = 0; i < d; ++i) {
                c[i] = v % p;
                v /= p;
            }
            c[d] = 1;
            PolyZp cand(p, std::move(c));
            if (!poly_mod(chi, cand).is_zero()) continue;
            if (is_zero_matrix(eval_poly_at_matrix_mod_p(cand, a))) return cand;
        }
    }
    throw std::logic_error("minimal_polynomial_mod_p: characteristic polynomial did not annihilate");
}

OrderCertificate matrix_order_lifted(const ModMatrix& a) {
    if (a.mod_p().det() == 0)
        throw std::invalid_argument("matrix_order_lifted: matrix is singular mod p");
    const std::int64_t p = a.p();
    const int n = a.n();

    // e: order of A mod p, by direct iteration in GL(dim, p)
    ModMatrix a1(p, 1, a.dim(), a.entries());
    long long e = *matrix_order_direct(a1);

    PolyZp minpoly = minimal_polynomial_mod_p(a);
    ModMatrix b = mat_pow(a, e);
    int beta = congruence_level(b);

    long long total;
    if (beta >= n) {
        total = e;
    } else if (p != 2 || beta >= 2) {
        total = e;
        for (int k = 0; k < n - beta; ++k) total *= p;
    } else {
        // p = 2, beta = 1: square stepwise, re-reading the level each time
        total = e;
        int level = beta;
        while (level < n) {
            b = b * b;
            total *= 2;
            level = congruence_level(b);
        }
    }
    return OrderCertificate{e, minpoly, beta, total, "lifted"};
}

OrderCertificate order_certificate_direct(const ModMatrix& a) {
    auto t = matrix_order_direct(a);
    if (!t) throw std::invalid_argument("order_certificate_direct: matrix is singular mod p");
    ModMatrix a1(a.p(), 1, a.dim(), a.entries());
    long long e = *matrix_order_direct(a1);
    int beta = congruence_level(mat_pow(a, e));
    return OrderCertificate{e, minimal_polynomial_mod_p(a), beta, *t, "direct"};
}

Bijection::Bijection(std::int64_t p_, int n_, std::vector<std::int64_t> table_)
    : p(p_), n(n_), table(std::move(table_)) {
    std::int64_t count = checked_pow(p, n);
    if (static_cast<std::int64_t>(table.size()) != count)
        throw std::invalid_argument("Bijection: table must cover Z_p^n");
    std::vector<char> seen(count, 0);
    for (auto v : table) {
        if (v < 0 || v >= count || seen[v])
            throw std::invalid_argument("Bijection: table is not a bijection onto Z_{p^n}");
        seen[v] = 1;
    }
}

Bijection digit_bijection(std::int64_t p, int n) {
    std::int64_t count = checked_pow(p, n);
    std::vector<std::int64_t> t(count);
    for (std::int64_t i = 0; i < count; ++i) t[i] = i;
    return Bijection(p, n, std::move(t));
}

FunctionTable conjugate_system(const FunctionTable& f, const Bijection& g) {
    validate_table(f);
    if (f.space.kind() != StateSpace::Kind::zm_vectors)
        throw std::invalid_argument("conjugate_system: table must live over Z_{p^n} vectors");
    std::int64_t pn = checked_pow(g.p, g.n);
    if (f.space.m() != pn)
        throw std::invalid_argument("conjugate_system: coordinate modulus must equal p^n");
    const int r = f.space.n();

    // g^r maps a Z_p^{nr} state (nr digits) to a Z_{p^n}^r state blockwise.
    StateSpace from = StateSpace::zm_vectors(g.p, g.n * r);
    std::vector<std::int64_t> gr(from.size());
    for (std::int64_t idx = 0; idx < from.size(); ++idx) {
        std::vector<std::int64_t> digits = from.coords(idx);
        std::vector<std::int64_t> residues(r);
        for (int blk = 0; blk < r; ++blk) {
            std::int64_t enc = 0;
            for (int i = g.n - 1; i >= 0; --i) enc = enc * g.p + digits[blk * g.n + i];
            residues[blk] = g.table[enc];
        }
        gr[idx] = f.space.index_of(residues);
    }
    std::vector<std::int64_t> inv(gr.size());
    for (size_t i = 0; i < gr.size(); ++i) inv[gr[i]] = static_cast<std::int64_t>(i);

    FunctionTable out{from, std::vector<std::int64_t>(from.size())};
    for (std::int64_t x = 0; x < from.size(); ++x) out.map[x] = inv[f.map[gr[x]]];
    return out;
}

FunctionTable linear_system_table(const ModMatrix& a) {
    StateSpace space = StateSpace::zm_vectors(a.modulus(), a.dim());
    FunctionTable f{space, std::vector<std::int64_t>(space.size())};
    for (std::int64_t idx = 0; idx < space.size(); ++idx)
        f.map[idx] = space.index_of(a.apply(space.coords(idx)));
    return f;
}

}  // namespace fdsf
