#include "fdsf/fds.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

StateSpace::StateSpace(Kind k, std::int64_t m, int n, std::optional<FieldContext> ctx)
    : kind_(k), m_(m), n_(n), ctx_(std::move(ctx)), size_(1), flat_len_(0) {
    if (n_ < 1) throw std::invalid_argument("StateSpace: vector length must be >= 1");
    if (m_ < 2) throw std::invalid_argument("StateSpace: coordinate modulus must be >= 2");
    std::int64_t per = kind_ == Kind::zm_vectors ? m_ : ctx_->element_count();
    int copies = n_;
    for (int i = 0; i < copies; ++i) {
        if (size_ > kMaxCardinality / per)
            throw std::invalid_argument("StateSpace: cardinality exceeds the exact-integer range");
        size_ *= per;
    }
    flat_len_ = kind_ == Kind::zm_vectors ? n_ : n_ * ctx_->r();
}

StateSpace StateSpace::zm_vectors(std::int64_t m, int n) {
    return StateSpace(Kind::zm_vectors, m, n, std::nullopt);
}

StateSpace StateSpace::field(const FieldContext& ctx) {
    return StateSpace(Kind::field, ctx.p(), 1, ctx);
}

StateSpace StateSpace::field_vectors(const FieldContext& ctx, int n) {
    return StateSpace(Kind::field_vectors, ctx.p(), n, ctx);
}

std::vector<std::int64_t> StateSpace::coords(std::int64_t idx) const {
    if (idx < 0 || idx >= size_) throw std::invalid_argument("StateSpace: index out of range");
    std::vector<std::int64_t> out(flat_len_);
    std::int64_t radix = kind_ == Kind::zm_vectors ? m_ : ctx_->p();
    for (int i = 0; i < flat_len_; ++i) {
        out[i] = idx % radix;
        idx /= radix;
    }
    return out;
}

std::int64_t StateSpace::index_of(const std::vector<std::int64_t>& coords) const {
    if (static_cast<int>(coords.size()) != flat_len_)
        throw std::invalid_argument("StateSpace: coordinate count mismatch");
    std::int64_t radix = kind_ == Kind::zm_vectors ? m_ : ctx_->p();
    std::int64_t idx = 0;
    for (int i = flat_len_ - 1; i >= 0; --i) {
        std::int64_t c = coords[i];
        if (c < 0 || c >= radix) throw std::invalid_argument("StateSpace: coordinate out of range");
        idx = idx * radix + c;
    }
    return idx;
}

std::string StateSpace::label(std::int64_t idx) const {
    std::vector<std::int64_t> c = coords(idx);
    auto tuple = [](auto first, auto last) {
        std::string s = "(";
        for (auto it = first; it != last; ++it) {
            if (it != first) s += ",";
            s += std::to_string(*it);
        }
        return s + ")";
    };
    if (kind_ != Kind::field_vectors) return tuple(c.begin(), c.end());
    std::string s = "(";
    int r = ctx_->r();
    for (int b = 0; b < n_; ++b) {
        if (b) s += ",";
        s += tuple(c.begin() + static_cast<std::ptrdiff_t>(b) * r,
                   c.begin() + static_cast<std::ptrdiff_t>(b + 1) * r);
    }
    return s + ")";
}

bool operator==(const StateSpace& a, const StateSpace& b) {
    if (a.kind_ != b.kind_ || a.m_ != b.m_ || a.n_ != b.n_) return false;
    if (a.ctx_.has_value() != b.ctx_.has_value()) return false;
    return !a.ctx_ || *a.ctx_ == *b.ctx_;
}

void validate_table(const FunctionTable& f) {
    if (static_cast<std::int64_t>(f.map.size()) != f.space.size())
        throw std::invalid_argument("function table must be total on the state space");
    for (auto j : f.map)
        if (j < 0 || j >= f.space.size())
            throw std::invalid_argument("function table image index out of range");
}

StateDiagram build_state_diagram(const FunctionTable& f) {
    validate_table(f);
    const std::int64_t n = f.space.size();
    StateDiagram d{f, {}, std::vector<char>(n, 0), std::vector<int>(n, -1), {}};
    d.children.assign(n, {});

    // 0 = unvisited, 1 = on the current walk, 2 = resolved
    std::vector<char> color(n, 0);
    std::vector<std::int64_t> walk;
    for (std::int64_t s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        walk.clear();
        std::int64_t x = s;
        while (color[x] == 0) {
            color[x] = 1;
            walk.push_back(x);
            x = f.map[x];
        }
        if (color[x] == 1) {
            // the walk closed on itself: the suffix from x is a new limit cycle
            auto it = std::find(walk.begin(), walk.end(), x);
            std::vector<std::int64_t> cycle(it, walk.end());
            auto min_it = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), min_it, cycle.end());
            int comp = static_cast<int>(d.components.size());
            for (auto v : cycle) {
                d.on_cycle[v] = 1;
                d.component_of[v] = comp;
            }
            d.components.push_back(DiagramComponent{std::move(cycle)});
        }
        int comp = d.component_of[x];
        for (auto v : walk) {
            color[v] = 2;
            if (d.component_of[v] < 0) d.component_of[v] = comp;
        }
    }
    for (std::int64_t v = 0; v < n; ++v)
        if (!d.on_cycle[v]) d.children[f.map[v]].push_back(v);

    // deterministic order: components by least cycle state
    std::vector<size_t> perm(d.components.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
        return d.components[a].cycle[0] < d.components[b].cycle[0];
    });
    std::vector<DiagramComponent> sorted;
    std::vector<int> renumber(d.components.size());
    for (size_t i = 0; i < perm.size(); ++i) {
        renumber[perm[i]] = static_cast<int>(i);
        sorted.push_back(std::move(d.components[perm[i]]));
    }
    d.components = std::move(sorted);
    for (auto& c : d.component_of) c = renumber[c];
    return d;
}

std::vector<std::vector<std::int64_t>> limit_cycles(const StateDiagram& d) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& c : d.components) out.push_back(c.cycle);
    return out;
}

long long order_of(const StateDiagram& d) {
    long long ord = 1;
    for (const auto& c : d.components) ord = lcm_checked(ord, static_cast<long long>(c.cycle.size()));
    return ord;
}

namespace {

// AHU canonical code of the transient tree rooted at v (children sorted).
std::string tree_code(const StateDiagram& d, std::int64_t v) {
    std::vector<std::string> parts;
    for (auto c : d.children[v]) parts.push_back(tree_code(d, c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
}

std::string component_code(const StateDiagram& d, const DiagramComponent& comp) {
    std::vector<std::string> codes;
    for (auto v : comp.cycle) codes.push_back(tree_code(d, v));
    // lexicographically minimal rotation of the code sequence
    const size_t len = codes.size();
    auto rotation = [&](size_t start) {
        std::string s;
        for (size_t i = 0; i < len; ++i) s += codes[(start + i) % len] + "|";
        return s;
    };
    std::string best = rotation(0);
    for (size_t k = 1; k < len; ++k) best = std::min(best, rotation(k));
    return "[" + best + "]";
}

}  // namespace

DiagramSignature diagram_signature(const StateDiagram& d) {
    std::vector<std::string> comps;
    for (const auto& c : d.components) comps.push_back(component_code(d, c));
    std::sort(comps.begin(), comps.end());
    std::string canon;
    for (const auto& c : comps) canon += c;
    return DiagramSignature{std::move(canon)};
}

bool isomorphic(const StateDiagram& a, const StateDiagram& b) {
    if (a.table.space.size() != b.table.space.size()) return false;
    return diagram_signature(a) == diagram_signature(b);
}

namespace {

// Conjugates f by the state bijection phi (phi[i] = image index): phi o f o phi^{-1}.
std::vector<std::int64_t> conjugate_map(const std::vector<std::int64_t>& f,
                                        const std::vector<std::int64_t>& phi) {
    std::vector<std::int64_t> out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[phi[i]] = phi[f[i]];
    return out;
}

// State bijection Z_p^{rn} -> (GF(p^r))^n induced by basis b, as index map.
std::vector<std::int64_t> basis_bijection(const StateSpace& from, const StateSpace& to,
                                          const Basis& b, int blocks) {
    const FieldContext& ctx = b.ctx();
    const int r = ctx.r();
    std::vector<std::int64_t> phi(from.size());
    for (std::int64_t idx = 0; idx < from.size(); ++idx) {
        std::vector<std::int64_t> v = from.coords(idx);
        std::vector<std::int64_t> out;
        out.reserve(static_cast<size_t>(blocks) * r);
        for (int blk = 0; blk < blocks; ++blk) {
            std::vector<std::int64_t> part(v.begin() + static_cast<std::ptrdiff_t>(blk) * r,
                                           v.begin() + static_cast<std::ptrdiff_t>(blk + 1) * r);
            FieldElement e = b.vec_to_elem(part);
            out.insert(out.end(), e.coords.begin(), e.coords.end());
        }
        phi[idx] = to.index_of(out);
    }
    return phi;
}

std::vector<std::int64_t> invert_bijection(const std::vector<std::int64_t>& phi) {
    std::vector<std::int64_t> inv(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) inv[phi[i]] = static_cast<std::int64_t>(i);
    return inv;
}

}  // namespace

FunctionTable lift_blockwise(const FunctionTable& f, const Basis& b) {
    validate_table(f);
    const FieldContext& ctx = b.ctx();
    if (f.space.kind() != StateSpace::Kind::zm_vectors || f.space.m() != ctx.p())
        throw std::invalid_argument("lift: table must live over Z_p vectors");
    if (f.space.n() % ctx.r() != 0)
        throw std::invalid_argument("lift: vector length not divisible by r");
    int blocks = f.space.n() / ctx.r();
    StateSpace to = blocks == 1 ? StateSpace::field(ctx) : StateSpace::field_vectors(ctx, blocks);
    std::vector<std::int64_t> phi = basis_bijection(f.space, to, b, blocks);
    return FunctionTable{to, conjugate_map(f.map, phi)};
}

FunctionTable project_blockwise(const FunctionTable& f, const Basis& b) {
    validate_table(f);
    const FieldContext& ctx = b.ctx();
    bool is_field = f.space.kind() == StateSpace::Kind::field;
    bool is_fvec = f.space.kind() == StateSpace::Kind::field_vectors;
    if ((!is_field && !is_fvec) || !(*f.space.ctx() == ctx))
        throw std::invalid_argument("project: table must live over the basis's field");
    int blocks = is_field ? 1 : f.space.n();
    StateSpace to = StateSpace::zm_vectors(ctx.p(), blocks * ctx.r());
    std::vector<std::int64_t> phi = basis_bijection(to, f.space, b, blocks);
    return FunctionTable{to, conjugate_map(f.map, invert_bijection(phi))};
}

FunctionTable lift_to_field(const FunctionTable& f, const Basis& b) {
    if (f.space.kind() != StateSpace::Kind::zm_vectors || f.space.n() != b.ctx().r())
        throw std::invalid_argument("lift_to_field: table must live over Z_p^r");
    return lift_blockwise(f, b);
}

FunctionTable project_to_vectors(const FunctionTable& f, const Basis& b) {
    if (f.space.kind() != StateSpace::Kind::field)
        throw std::invalid_argument("project_to_vectors: table must live over a field");
    return project_blockwise(f, b);
}

FieldElement FieldPoly::eval(const FieldElement& x) const {
    FieldElement acc = ctx.zero();
    for (size_t i = coeffs.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), coeffs[i]);
    return acc;
}

FieldPoly interpolate(const FunctionTable& f) {
    validate_table(f);
    if (f.space.kind() != StateSpace::Kind::field)
        throw std::invalid_argument("interpolate: table must live over a single field coordinate");
    const FieldContext& ctx = *f.space.ctx();
    const std::int64_t q = ctx.element_count();

    // master = prod_a (x - a), then per point divide off (x - a) synthetically
    std::vector<FieldElement> master(1, ctx.one());
    for (std::int64_t ai = 0; ai < q; ++ai) {
        FieldElement a = ctx.from_index(ai);
        std::vector<FieldElement> next(master.size() + 1, ctx.zero());
        for (size_t i = 0; i < master.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], master[i]);
            next[i] = ctx.sub(next[i], ctx.mul(a, master[i]));
        }
        master = std::move(next);
    }

    std::vector<FieldElement> result(q, ctx.zero());
    for (std::int64_t ai = 0; ai < q; ++ai) {
        FieldElement y = ctx.from_index(f.map[ai]);
        if (ctx.is_zero(y)) continue;
        FieldElement a = ctx.from_index(ai);
        // numerator = master / (x - a) by synthetic division
        std::vector<FieldElement> num(q, ctx.zero());
        FieldElement carry = ctx.zero();
        for (size_t i = master.size(); i-- > 1;) {
            carry = ctx.add(master[i], ctx.mul(a, carry));
            num[i - 1] = carry;
        }
        FieldElement denom = ctx.zero();  // numerator evaluated at a
        for (size_t i = num.size(); i-- > 0;) denom = ctx.add(ctx.mul(denom, a), num[i]);
        FieldElement scale = ctx.mul(y, ctx.inv(denom));
        for (std::int64_t i = 0; i < q; ++i)
            result[i] = ctx.add(result[i], ctx.mul(scale, num[i]));
    }
    while (!result.empty() && ctx.is_zero(result.back())) result.pop_back();
    return FieldPoly{ctx, std::move(result)};
}

std::string to_dot(const StateDiagram& d) {
    std::string out = "digraph fds {\n";
    const StateSpace& sp = d.table.space;
    for (std::int64_t v = 0; v < sp.size(); ++v)
        out += "  n" + std::to_string(v) + " [label=\"" + sp.label(v) + "\"];\n";
    for (std::int64_t v = 0; v < sp.size(); ++v) {
        out += "  n" + std::to_string(v) + " -> n" + std::to_string(d.table.map[v]);
        if (d.on_cycle[v]) out += " [style=bold]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace fdsf
