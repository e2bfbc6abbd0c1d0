#ifndef FDSF_FDS_HPP
#define FDSF_FDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fdsf/field.hpp"

namespace fdsf {

// Enumerated state set. States are addressed by index in [0, size());
// the index is the mixed-radix encoding of the coordinates, least
// significant coordinate first.
class StateSpace {
public:
    enum class Kind { zm_vectors, field, field_vectors };

    static StateSpace zm_vectors(std::int64_t m, int n);
    static StateSpace field(const FieldContext& ctx);
    static StateSpace field_vectors(const FieldContext& ctx, int n);

    Kind kind() const { return kind_; }
    std::int64_t size() const { return size_; }
    std::int64_t m() const { return m_; }  // coordinate modulus (p for field kinds)
    int n() const { return n_; }           // vector length (1 for kind field)
    const std::optional<FieldContext>& ctx() const { return ctx_; }

    // Flattened coordinate tuple of a state (length n, or r, or n*r).
    std::vector<std::int64_t> coords(std::int64_t idx) const;
    std::int64_t index_of(const std::vector<std::int64_t>& coords) const;
    std::string label(std::int64_t idx) const;  // "(a,b,...)" for DOT/text output

    friend bool operator==(const StateSpace& a, const StateSpace& b);

private:
    StateSpace(Kind k, std::int64_t m, int n, std::optional<FieldContext> ctx);

    Kind kind_;
    std::int64_t m_;
    int n_;
    std::optional<FieldContext> ctx_;
    std::int64_t size_;
    int flat_len_;
};

// Explicit finite dynamical system: position i holds the index of f(state_i).
struct FunctionTable {
    StateSpace space;
    std::vector<std::int64_t> map;
};

void validate_table(const FunctionTable& f);

struct DiagramComponent {
    std::vector<std::int64_t> cycle;  // f-order, starting at the least state index
};

// Functional digraph of a table, decomposed into limit cycles and the
// transient trees hanging off them.
struct StateDiagram {
    FunctionTable table;
    std::vector<DiagramComponent> components;   // sorted by least cycle index
    std::vector<char> on_cycle;                 // per state
    std::vector<int> component_of;              // per state
    std::vector<std::vector<std::int64_t>> children;  // transient predecessors, ascending
};

StateDiagram build_state_diagram(const FunctionTable& f);
std::vector<std::vector<std::int64_t>> limit_cycles(const StateDiagram& d);
// Least m >= 1 with f^m fixing every cycle state = lcm of cycle lengths.
long long order_of(const StateDiagram& d);

// Canonical form: per component, the minimal rotation of the cycle's sequence
// of rooted-tree codes; the multiset of component codes, sorted. Two tables
// have equal signatures iff their diagrams are isomorphic digraphs.
struct DiagramSignature {
    std::string canonical;

    friend bool operator==(const DiagramSignature& a, const DiagramSignature& b) = default;
};

DiagramSignature diagram_signature(const StateDiagram& d);
bool isomorphic(const StateDiagram& a, const StateDiagram& b);

// Correspondence between systems over Z_p^r and over GF(p^r): conjugation by
// the coordinate bijection of basis b. Mutually inverse; diagrams isomorphic.
FunctionTable lift_to_field(const FunctionTable& f, const Basis& b);
FunctionTable project_to_vectors(const FunctionTable& f, const Basis& b);
// Blockwise variant between Z_p^{rn} and (GF(p^r))^n.
FunctionTable lift_blockwise(const FunctionTable& f, const Basis& b);
FunctionTable project_blockwise(const FunctionTable& f, const Basis& b);

// Ordinary polynomial over GF(q), used as the interpolation result.
struct FieldPoly {
    FieldContext ctx;
    std::vector<FieldElement> coeffs;  // ascending degree, trailing zeros stripped

    FieldElement eval(const FieldElement& x) const;
};

// Unique polynomial of degree < q realizing a table over a single field
// coordinate (Lagrange form).
FieldPoly interpolate(const FunctionTable& f);

// DOT rendering; limit-cycle edges are bold.
std::string to_dot(const StateDiagram& d);

}  // namespace fdsf

#endif
