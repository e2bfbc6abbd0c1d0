#ifndef FDSF_SDS_HPP
#define FDSF_SDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fdsf/fds.hpp"

namespace fdsf {

// Undirected dependency graph on vertices 1..n.
class DependencyGraph {
public:
    DependencyGraph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    bool adjacent(int a, int b) const;  // 1-based
    // Closed neighborhood of a (a itself plus its neighbors), ascending.
    std::vector<int> closed_neighborhood(int a) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    int n_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Local update for one vertex: rewrites coordinate `vertex` as a function of
// the coordinates listed in `domain` (ascending, 1-based). The rule is a
// dense table indexed by the mixed-radix encoding of the restricted state,
// least significant = first domain vertex.
struct LocalUpdate {
    int vertex;
    std::vector<int> domain;
    std::vector<std::int64_t> rule;
};

struct LocalityReport {
    bool ok;
    int offending_coordinate;  // 1-based, 0 when ok
    std::string message;
};

// Exhaustively perturbs coordinates outside the closed neighborhood of
// u.vertex and reports the first coordinate the rule actually depends on.
// Only coordinate u.vertex is ever written, by construction.
LocalityReport validate_locality(const DependencyGraph& g, const LocalUpdate& u, std::int64_t m);

// Sequential composition f_{pi(n)} o ... o f_{pi(1)} as an explicit table
// over Z_m^n. schedule is a permutation of 1..n; pi(1) is applied first.
FunctionTable compose_sds(const DependencyGraph& g, const std::vector<LocalUpdate>& locals,
                          const std::vector<int>& schedule, std::int64_t m);

}  // namespace fdsf

#endif
