#include "fdsf/msorbits.hpp"

#include <algorithm>
#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

namespace {

void check_pair_shape(const ZpMatrix& s, const ZpMatrix& m) {
    if (s.p() != m.p()) throw std::invalid_argument("MS pair: mixed moduli");
    if (s.rows() != s.cols() || m.rows() != m.cols() || s.rows() != m.rows())
        throw std::invalid_argument("MS pair: dimension mismatch");
}

std::int64_t space_size(const ZpMatrix& s) {
    return checked_pow(s.p(), s.rows());
}

std::vector<std::int64_t> decode(std::int64_t idx, std::int64_t p, int n) {
    std::vector<std::int64_t> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = idx % p;
        idx /= p;
    }
    return v;
}

std::int64_t encode(const std::vector<std::int64_t>& v, std::int64_t p) {
    std::int64_t idx = 0;
    for (size_t i = v.size(); i-- > 0;) idx = idx * p + v[i];
    return idx;
}

// idx -> encoding of A * state(idx)
std::vector<std::int64_t> action_table(const ZpMatrix& a) {
    std::int64_t size = space_size(a);
    std::vector<std::int64_t> t(size);
    for (std::int64_t i = 0; i < size; ++i)
        t[i] = encode(a.apply(decode(i, a.p(), a.rows())), a.p());
    return t;
}

}  // namespace

bool check_compat(const ZpMatrix& s, const ZpMatrix& m) {
    check_pair_shape(s, m);
    if (!(m * s == s * m)) return false;
    ZpMatrix mt = m.transpose();
    return mt * s == s * mt;
}

long long ms_orbit_length(const std::vector<std::int64_t>& x, const ZpMatrix& s, const ZpMatrix& m) {
    check_pair_shape(s, m);
    if (!check_compat(s, m)) throw std::invalid_argument("ms_orbit_length: incompatible pair");
    const std::int64_t p = s.p();

    // S-orbit of x
    std::vector<char> in_s_orbit(space_size(s), 0);
    std::int64_t x0 = encode(x, p);
    std::int64_t cur = x0;
    while (!in_s_orbit[cur]) {
        in_s_orbit[cur] = 1;
        cur = encode(s.apply(decode(cur, p, s.rows())), p);
    }

    std::int64_t y = encode(m.apply(x), p);
    for (long long k = 1; k <= space_size(s); ++k) {
        if (in_s_orbit[y]) return k;
        y = encode(m.apply(decode(y, p, m.rows())), p);
    }
    throw std::logic_error("ms_orbit_length: M iteration left the state space");
}

OrbitReport enumerate_ms_orbits(const ZpMatrix& s, const ZpMatrix& m) {
    if (!check_compat(s, m)) throw std::invalid_argument("enumerate_ms_orbits: incompatible pair");
    const std::int64_t size = space_size(s);
    std::vector<std::int64_t> sm = action_table(s), mm = action_table(m);

    OrbitReport report{s.p(), s.rows(), {}, 0};
    std::vector<char> seen(size, 0);
    for (std::int64_t start = 0; start < size; ++start) {
        if (seen[start]) continue;
        // BFS closure under both generators; start is the least encoding
        std::vector<std::int64_t> members{start};
        seen[start] = 1;
        for (size_t head = 0; head < members.size(); ++head) {
            for (std::int64_t next : {sm[members[head]], mm[members[head]]}) {
                if (!seen[next]) {
                    seen[next] = 1;
                    members.push_back(next);
                }
            }
        }
        std::sort(members.begin(), members.end());
        long long k = ms_orbit_length(decode(start, s.p(), s.rows()), s, m);
        report.orbits.push_back(Orbit{start, std::move(members), k});
    }
    report.orbit_count = static_cast<long long>(report.orbits.size());
    return report;
}

OrbitSearchResult search_min_orbits(const ZpMatrix& s, long long budget) {
    if (s.rows() != s.cols()) throw std::invalid_argument("search_min_orbits: S must be square");
    const std::int64_t p = s.p();
    const int n = s.rows();
    long long candidates = 1;
    bool overflow = false;
    for (int i = 0; i < n * n; ++i) {
        if (candidates > budget / p) {
            overflow = true;
            break;
        }
        candidates *= p;
    }
    long long limit = overflow ? budget : candidates;
    bool complete = !overflow;

    std::optional<OrbitSearchResult> best;
    for (long long enc = 0; enc < limit; ++enc) {
        ZpMatrix m = ZpMatrix::from_encoding(p, n, enc);
        if (m.det() == 0 || !check_compat(s, m)) continue;
        OrbitReport rep = enumerate_ms_orbits(s, m);
        if (!best || rep.orbit_count < best->report.orbit_count)
            best = OrbitSearchResult{m, std::move(rep), complete, 0};
    }
    if (!best)
        throw std::invalid_argument("search_min_orbits: no invertible compatible M within budget");
    best->complete = complete;
    best->examined = limit;
    return *best;
}

std::string orbit_quotient_dot(const ZpMatrix& s, const ZpMatrix& m, const OrbitReport& report) {
    if (!check_compat(s, m)) throw std::invalid_argument("orbit_quotient_dot: incompatible pair");
    const std::int64_t p = report.p;
    const int n = report.dim;

    // S-class representative of each state: least encoding on its S-cycle
    std::int64_t size = checked_pow(p, n);
    std::vector<std::int64_t> sm = action_table(s), mm = action_table(m);
    std::vector<std::int64_t> s_rep(size, -1);
    for (std::int64_t i = 0; i < size; ++i) {
        if (s_rep[i] >= 0) continue;
        std::vector<std::int64_t> cyc{i};
        std::int64_t cur = sm[i];
        while (cur != i) {
            cyc.push_back(cur);
            cur = sm[cur];
        }
        std::int64_t rep = *std::min_element(cyc.begin(), cyc.end());
        for (auto v : cyc) s_rep[v] = rep;
    }

    // Nodes are S-classes, edges the induced action of M; the weakly
    // connected pieces of this quotient graph are exactly the MS-orbits.
    std::vector<std::int64_t> class_size(size, 0);
    for (std::int64_t i = 0; i < size; ++i) ++class_size[s_rep[i]];

    std::string out = "digraph msorbits {\n";
    for (std::int64_t i = 0; i < size; ++i) {
        if (s_rep[i] != i) continue;
        auto coords = decode(i, p, n);
        std::string label = "(";
        for (size_t k = 0; k < coords.size(); ++k) {
            if (k) label += ",";
            label += std::to_string(coords[k]);
        }
        label += ") x" + std::to_string(class_size[i]);
        out += "  c" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (std::int64_t i = 0; i < size; ++i)
        if (s_rep[i] == i)
            out += "  c" + std::to_string(i) + " -> c" + std::to_string(s_rep[mm[i]]) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace fdsf
