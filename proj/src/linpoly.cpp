#include "fdsf/linpoly.hpp"

#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

namespace {

void check_same_ctx(const LinearizedPoly& a, const LinearizedPoly& b) {
    if (!(a.ctx == b.ctx)) throw std::invalid_argument("linearized polynomials from different fields");
}

// Gaussian elimination over GF(p^r): solves the square system a x = rhs.
// Every Moore system we feed in is nonsingular; throws otherwise.
std::vector<FieldElement> field_solve(const FieldContext& ctx,
                                      std::vector<std::vector<FieldElement>> a,
                                      std::vector<FieldElement> rhs) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if (!ctx.is_zero(a[i][col])) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("field_solve: singular system");
        std::swap(a[piv], a[col]);
        std::swap(rhs[piv], rhs[col]);
        FieldElement inv = ctx.inv(a[col][col]);
        for (int j = col; j < n; ++j) a[col][j] = ctx.mul(inv, a[col][j]);
        rhs[col] = ctx.mul(inv, rhs[col]);
        for (int i = 0; i < n; ++i) {
            if (i == col || ctx.is_zero(a[i][col])) continue;
            FieldElement f = a[i][col];
            for (int j = col; j < n; ++j) a[i][j] = ctx.sub(a[i][j], ctx.mul(f, a[col][j]));
            rhs[i] = ctx.sub(rhs[i], ctx.mul(f, rhs[col]));
        }
    }
    return rhs;
}

}  // namespace

LinearizedPoly lp_zero(const FieldContext& ctx) {
    return LinearizedPoly{ctx, std::vector<FieldElement>(ctx.r(), ctx.zero())};
}

LinearizedPoly lp_identity(const FieldContext& ctx) {
    LinearizedPoly l = lp_zero(ctx);
    l.coeffs[0] = ctx.one();
    return l;
}

LinearizedPoly lp_make(const FieldContext& ctx, std::vector<FieldElement> coeffs) {
    if (static_cast<int>(coeffs.size()) > ctx.r())
        throw std::invalid_argument("lp_make: more than r coefficients");
    for (const auto& c : coeffs) ctx.check_element(c);
    coeffs.resize(ctx.r(), ctx.zero());
    return LinearizedPoly{ctx, std::move(coeffs)};
}

LinearizedPoly lp_from_prime_coeffs(const FieldContext& ctx, const std::vector<std::int64_t>& a) {
    if (static_cast<int>(a.size()) > ctx.r())
        throw std::invalid_argument("lp_from_prime_coeffs: more than r coefficients");
    LinearizedPoly l = lp_zero(ctx);
    for (size_t i = 0; i < a.size(); ++i) l.coeffs[i] = ctx.from_int(a[i]);
    return l;
}

FieldElement lp_eval(const LinearizedPoly& l, const FieldElement& x) {
    const FieldContext& ctx = l.ctx;
    FieldElement acc = ctx.zero();
    FieldElement xp = x;  // x^{p^i}
    for (int i = 0; i < ctx.r(); ++i) {
        acc = ctx.add(acc, ctx.mul(l.coeffs[i], xp));
        if (i + 1 < ctx.r()) xp = ctx.pow(xp, ctx.p());
    }
    return acc;
}

LinearizedPoly lp_compose(const LinearizedPoly& l1, const LinearizedPoly& l2) {
    check_same_ctx(l1, l2);
    const FieldContext& ctx = l1.ctx;
    const int r = ctx.r();
    LinearizedPoly out = lp_zero(ctx);
    for (int i = 0; i < r; ++i) {
        if (ctx.is_zero(l1.coeffs[i])) continue;
        for (int j = 0; j < r; ++j) {
            if (ctx.is_zero(l2.coeffs[j])) continue;
            int k = (i + j) % r;  // x^{p^{i+j}} wraps since x^{p^r} = x
            FieldElement term = ctx.mul(l1.coeffs[i], ctx.frobenius(l2.coeffs[j], i));
            out.coeffs[k] = ctx.add(out.coeffs[k], term);
        }
    }
    return out;
}

ZpMatrix lp_matrix(const LinearizedPoly& l, const Basis& b) {
    if (!(b.ctx() == l.ctx)) throw std::invalid_argument("lp_matrix: basis from different field");
    const int r = l.ctx.r();
    ZpMatrix m(l.ctx.p(), r, r);
    for (int j = 0; j < r; ++j) {
        std::vector<std::int64_t> col = b.elem_to_vec(lp_eval(l, b.vectors()[j]));
        for (int i = 0; i < r; ++i) m.set(i, j, col[i]);
    }
    return m;
}

LinearizedPoly lp_from_matrix(const ZpMatrix& m, const Basis& b) {
    const FieldContext& ctx = b.ctx();
    const int r = ctx.r();
    if (m.rows() != r || m.cols() != r || m.p() != ctx.p())
        throw std::invalid_argument("lp_from_matrix: matrix shape mismatch");
    // Moore system: row j gives Sum_i A_i alpha_j^{p^i} = image of alpha_j.
    std::vector<std::vector<FieldElement>> moore(r, std::vector<FieldElement>(r, ctx.zero()));
    std::vector<FieldElement> rhs(r, ctx.zero());
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i) moore[j][i] = ctx.frobenius(b.vectors()[j], i);
        std::vector<std::int64_t> img(r);
        for (int i = 0; i < r; ++i) img[i] = m.at(i, j);
        rhs[j] = b.vec_to_elem(img);
    }
    return LinearizedPoly{ctx, field_solve(ctx, std::move(moore), std::move(rhs))};
}

Subspace lp_kernel(const LinearizedPoly& l) {
    Basis poly = Basis::polynomial(l.ctx);
    ZpMatrix m = lp_matrix(l, poly);
    auto basis = m.null_space();
    return Subspace{l.ctx, basis, static_cast<int>(basis.size())};
}

bool lp_is_invertible(const LinearizedPoly& l) {
    return lp_matrix(l, Basis::polynomial(l.ctx)).rank() == l.ctx.r();
}

bool quadratic_invertibility(const FieldContext& ctx, const FieldElement& a, const FieldElement& b) {
    if (ctx.r() != 2) throw std::invalid_argument("quadratic_invertibility requires r = 2");
    return !(ctx.pow(a, ctx.p() + 1) == ctx.pow(b, ctx.p() + 1));
}

bool lp_in_prime_class(const LinearizedPoly& l) {
    for (const auto& c : l.coeffs)
        if (!l.ctx.in_prime_subfield(c)) return false;
    return true;
}

PolyZp associate(const LinearizedPoly& l) {
    if (!lp_in_prime_class(l))
        throw std::invalid_argument("associate: coefficient outside the prime subfield");
    std::vector<std::int64_t> c(l.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = l.coeffs[i].coords[0];
    return PolyZp(l.ctx.p(), std::move(c));
}

LinearizedPoly lp_from_associate(const FieldContext& ctx, const PolyZp& a) {
    if (a.p() != ctx.p()) throw std::invalid_argument("lp_from_associate: characteristic mismatch");
    if (a.degree() >= ctx.r()) throw std::invalid_argument("lp_from_associate: degree >= r");
    return lp_from_prime_coeffs(ctx, a.coeffs());
}

std::optional<long long> lp_order(const LinearizedPoly& l) {
    const FieldContext& ctx = l.ctx;
    PolyZp a = associate(l);
    PolyZp mod = PolyZp::x_pow_minus_one(ctx.p(), ctx.r());
    PolyZp one = PolyZp::constant(ctx.p(), 1);
    // Powers of the associate live among the p^r residues mod x^r - 1, so a
    // cycle without hitting 1 within p^r steps means no order exists.
    PolyZp acc = poly_mod(a, mod);
    for (long long k = 1; k <= ctx.element_count(); ++k) {
        if (acc == one) return k;
        acc = poly_mod(acc * a, mod);
    }
    return std::nullopt;
}

std::vector<LinearizedPoly> enumerate_prime_class(const FieldContext& ctx) {
    std::vector<LinearizedPoly> out;
    out.reserve(static_cast<size_t>(ctx.element_count()));
    for (std::int64_t enc = 0; enc < ctx.element_count(); ++enc) {
        std::vector<std::int64_t> a(ctx.r());
        std::int64_t v = enc;
        for (int i = 0; i < ctx.r(); ++i) {
            a[i] = v % ctx.p();
            v /= ctx.p();
        }
        out.push_back(lp_from_prime_coeffs(ctx, a));
    }
    return out;
}

std::vector<LinearizedPoly> enumerate_all_linearized(const FieldContext& ctx, long long budget) {
    const std::int64_t q = ctx.element_count();
    long long total = 1;
    for (int i = 0; i < ctx.r(); ++i) {
        if (total > budget / q)
            throw budget_error("enumerate_all_linearized: (p^r)^r exceeds budget");
        total *= q;
    }
    std::vector<LinearizedPoly> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<std::int64_t> idx(ctx.r(), 0);
    for (long long k = 0; k < total; ++k) {
        LinearizedPoly l = lp_zero(ctx);
        for (int i = 0; i < ctx.r(); ++i) l.coeffs[i] = ctx.from_index(idx[i]);
        out.push_back(std::move(l));
        for (int i = 0; i < ctx.r(); ++i) {
            if (++idx[i] < q) break;
            idx[i] = 0;
        }
    }
    return out;
}

std::vector<LinearizedPoly> lp_commutant(const LinearizedPoly& l,
                                         const std::vector<LinearizedPoly>* candidates,
                                         long long budget) {
    std::vector<LinearizedPoly> pool;
    if (candidates == nullptr) pool = enumerate_all_linearized(l.ctx, budget);
    const std::vector<LinearizedPoly>& cands = candidates ? *candidates : pool;
    std::vector<LinearizedPoly> out;
    for (const auto& c : cands)
        if (lp_compose(l, c) == lp_compose(c, l)) out.push_back(c);
    return out;
}

}  // namespace fdsf
