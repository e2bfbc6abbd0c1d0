#include "fdsf/sds.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

DependencyGraph::DependencyGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), adj_(n + 1, std::vector<char>(n + 1, 0)), edges_(edges) {
    if (n < 1) throw std::invalid_argument("DependencyGraph: need at least one vertex");
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("DependencyGraph: edge endpoint out of range");
        adj_[a][b] = adj_[b][a] = 1;
    }
}

bool DependencyGraph::adjacent(int a, int b) const {
    if (a < 1 || a > n_ || b < 1 || b > n_) throw std::invalid_argument("vertex out of range");
    return adj_[a][b] != 0;
}

std::vector<int> DependencyGraph::closed_neighborhood(int a) const {
    if (a < 1 || a > n_) throw std::invalid_argument("vertex out of range");
    std::vector<int> nb;
    for (int v = 1; v <= n_; ++v)
        if (v == a || adj_[a][v]) nb.push_back(v);
    return nb;
}

namespace {

std::int64_t restrict_encode(const std::vector<std::int64_t>& state, const std::vector<int>& domain,
                             std::int64_t m) {
    std::int64_t enc = 0;
    for (size_t i = domain.size(); i-- > 0;) enc = enc * m + state[domain[i] - 1];
    return enc;
}

void check_update_shape(const LocalUpdate& u, int n, std::int64_t m) {
    if (u.vertex < 1 || u.vertex > n)
        throw std::invalid_argument("local update vertex out of range");
    if (u.domain.empty() || !std::is_sorted(u.domain.begin(), u.domain.end()) ||
        std::adjacent_find(u.domain.begin(), u.domain.end()) != u.domain.end())
        throw std::invalid_argument("local update domain must be a nonempty ascending vertex list");
    for (int v : u.domain)
        if (v < 1 || v > n) throw std::invalid_argument("local update domain vertex out of range");
    std::int64_t expect = 1;
    for (size_t i = 0; i < u.domain.size(); ++i) {
        if (expect > kMaxCardinality / m)
            throw std::invalid_argument("local update rule table exceeds the exact-integer range");
        expect *= m;
    }
    if (static_cast<std::int64_t>(u.rule.size()) != expect)
        throw std::invalid_argument("local update rule must be total on its domain restriction");
    for (auto v : u.rule)
        if (v < 0 || v >= m) throw std::invalid_argument("local update rule value out of range");
}

}  // namespace

LocalityReport validate_locality(const DependencyGraph& g, const LocalUpdate& u, std::int64_t m) {
    check_update_shape(u, g.vertex_count(), m);
    std::vector<int> closed = g.closed_neighborhood(u.vertex);
    // For each domain coordinate outside the closed neighborhood, sweep the
    // full domain cube: if any setting of the others makes the rule value
    // move with it, the rule reads a non-neighbor.
    for (size_t d = 0; d < u.domain.size(); ++d) {
        int coord = u.domain[d];
        if (std::binary_search(closed.begin(), closed.end(), coord)) continue;
        std::int64_t stride = 1;
        for (size_t i = 0; i < d; ++i) stride *= m;
        std::int64_t total = static_cast<std::int64_t>(u.rule.size());
        for (std::int64_t base = 0; base < total; ++base) {
            if ((base / stride) % m != 0) continue;  // digit d fixed at 0
            for (std::int64_t v = 1; v < m; ++v) {
                if (u.rule[base] != u.rule[base + v * stride]) {
                    return LocalityReport{false, coord,
                                          "rule for vertex " + std::to_string(u.vertex) +
                                              " depends on non-neighbor coordinate " +
                                              std::to_string(coord)};
                }
            }
        }
    }
    return LocalityReport{true, 0, "ok"};
}

FunctionTable compose_sds(const DependencyGraph& g, const std::vector<LocalUpdate>& locals,
                          const std::vector<int>& schedule, std::int64_t m) {
    const int n = g.vertex_count();
    if (m < 2) throw std::invalid_argument("compose_sds: modulus must be >= 2");
    if (static_cast<int>(locals.size()) != n)
        throw std::invalid_argument("compose_sds: need exactly one local update per vertex");
    std::vector<const LocalUpdate*> by_vertex(n + 1, nullptr);
    for (const auto& u : locals) {
        check_update_shape(u, n, m);
        if (by_vertex[u.vertex])
            throw std::invalid_argument("compose_sds: duplicate local update for vertex " +
                                        std::to_string(u.vertex));
        by_vertex[u.vertex] = &u;
        LocalityReport rep = validate_locality(g, u, m);
        if (!rep.ok) throw std::invalid_argument("compose_sds: " + rep.message);
    }
    std::vector<int> sorted = schedule;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (i >= static_cast<int>(sorted.size()) || sorted[i] != i + 1)
            throw std::invalid_argument("compose_sds: schedule must be a permutation of 1..n");

    StateSpace space = StateSpace::zm_vectors(m, n);
    FunctionTable f{space, std::vector<std::int64_t>(space.size())};
    for (std::int64_t idx = 0; idx < space.size(); ++idx) {
        std::vector<std::int64_t> s = space.coords(idx);
        for (int step : schedule) {
            const LocalUpdate& u = *by_vertex[step];
            s[u.vertex - 1] = u.rule[restrict_encode(s, u.domain, m)];
        }
        f.map[idx] = space.index_of(s);
    }
    return f;
}

}  // namespace fdsf
