#include <doctest.h>

#include "fdsf/sds.hpp"

using namespace fdsf;

namespace {

// coordinate a keeps its own value
LocalUpdate identity_update(int a, std::int64_t m) {
    std::vector<std::int64_t> rule(m);
    for (std::int64_t v = 0; v < m; ++v) rule[v] = v;
    return LocalUpdate{a, {a}, std::move(rule)};
}

}  // namespace

TEST_CASE("identity locals compose to the identity map") {
    DependencyGraph g(3, {{1, 2}, {2, 3}});
    std::vector<LocalUpdate> locals{identity_update(1, 2), identity_update(2, 2),
                                    identity_update(3, 2)};
    FunctionTable f = compose_sds(g, locals, {2, 1, 3}, 2);
    for (std::int64_t i = 0; i < 8; ++i) CHECK(f.map[i] == i);
}

TEST_CASE("copy-the-other-coordinate on K2, hand-stepped") {
    DependencyGraph k2(2, {{1, 2}});
    // domain {1,2}: restricted encoding enc = s1 + 2*s2
    LocalUpdate copy1{1, {1, 2}, {0, 0, 1, 1}};  // s1 := s2
    LocalUpdate copy2{2, {1, 2}, {0, 1, 0, 1}};  // s2 := s1
    StateSpace z22 = StateSpace::zm_vectors(2, 2);

    FunctionTable f12 = compose_sds(k2, {copy1, copy2}, {1, 2}, 2);
    // state (0,1): f_1 gives (1,1), then f_2 keeps (1,1)
    CHECK(f12.map[z22.index_of({0, 1})] == z22.index_of({1, 1}));

    FunctionTable f21 = compose_sds(k2, {copy1, copy2}, {2, 1}, 2);
    // state (0,1): f_2 gives (0,0), then f_1 keeps (0,0)
    CHECK(f21.map[z22.index_of({0, 1})] == z22.index_of({0, 0}));
    CHECK(f12.map != f21.map);
}

TEST_CASE("disjoint neighborhoods make the schedule irrelevant") {
    DependencyGraph g(2, {});  // no edges
    // each vertex negates itself
    LocalUpdate neg1{1, {1}, {1, 0}};
    LocalUpdate neg2{2, {2}, {1, 0}};
    FunctionTable a = compose_sds(g, {neg1, neg2}, {1, 2}, 2);
    FunctionTable b = compose_sds(g, {neg1, neg2}, {2, 1}, 2);
    CHECK(a.map == b.map);
}

TEST_CASE("locality validation") {
    DependencyGraph path(3, {{1, 2}, {2, 3}});

    CHECK(validate_locality(path, identity_update(1, 2), 2).ok);

    // majority (here: OR) of the two neighbors of the middle vertex
    std::vector<std::int64_t> maj(8);
    for (std::int64_t enc = 0; enc < 8; ++enc) {
        std::int64_t s1 = enc % 2, s3 = (enc / 4) % 2;
        maj[enc] = (s1 + s3 >= 1) ? 1 : 0;
    }
    CHECK(validate_locality(path, LocalUpdate{2, {1, 2, 3}, maj}, 2).ok);

    // vertex 1 copying coordinate 3 reads a non-neighbor
    std::vector<std::int64_t> copy3(8);
    for (std::int64_t enc = 0; enc < 8; ++enc) copy3[enc] = (enc / 4) % 2;
    LocalityReport rep = validate_locality(path, LocalUpdate{1, {1, 2, 3}, copy3}, 2);
    CHECK_FALSE(rep.ok);
    CHECK(rep.offending_coordinate == 3);

    // listing a non-neighbor the rule never reads is fine
    std::vector<std::int64_t> own(8);
    for (std::int64_t enc = 0; enc < 8; ++enc) own[enc] = enc % 2;
    CHECK(validate_locality(path, LocalUpdate{1, {1, 2, 3}, own}, 2).ok);

    CHECK_THROWS_AS(compose_sds(path, {LocalUpdate{1, {1, 2, 3}, copy3}, identity_update(2, 2),
                                       identity_update(3, 2)},
                                {1, 2, 3}, 2),
                    std::invalid_argument);
}

TEST_CASE("composition input validation") {
    DependencyGraph k2(2, {{1, 2}});
    std::vector<LocalUpdate> ok{identity_update(1, 2), identity_update(2, 2)};
    CHECK_THROWS_AS(compose_sds(k2, {identity_update(1, 2)}, {1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(compose_sds(k2, {identity_update(1, 2), identity_update(1, 2)}, {1, 2}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(compose_sds(k2, ok, {1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(compose_sds(k2, ok, {1}, 2), std::invalid_argument);
    // rule not total
    CHECK_THROWS_AS(compose_sds(k2, {LocalUpdate{1, {1}, {0}}, identity_update(2, 2)}, {1, 2}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(DependencyGraph(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("composed tables feed straight into diagram analysis") {
    DependencyGraph ring(3, {{1, 2}, {2, 3}, {1, 3}});
    // every vertex copies its clockwise neighbor, mod 3
    std::vector<LocalUpdate> locals;
    for (int a = 1; a <= 3; ++a) {
        int src = a % 3 + 1;
        std::vector<std::int64_t> rule(27);
        std::vector<int> domain{1, 2, 3};
        for (std::int64_t enc = 0; enc < 27; ++enc) {
            std::int64_t digits[3] = {enc % 3, (enc / 3) % 3, (enc / 9) % 3};
            rule[enc] = digits[src - 1];
        }
        locals.push_back(LocalUpdate{a, domain, std::move(rule)});
    }
    FunctionTable f = compose_sds(ring, locals, {1, 2, 3}, 3);
    StateDiagram d = build_state_diagram(f);
    CHECK(d.components.size() > 0);
    long long total = 0;
    for (const auto& c : d.components) {
        total += static_cast<long long>(c.cycle.size());
        for (auto v : c.cycle) total += static_cast<long long>([&] {
            long long cnt = 0;
            std::vector<std::int64_t> stack{v};
            // transient subtree size below each cycle vertex
            while (!stack.empty()) {
                auto u = stack.back();
                stack.pop_back();
                for (auto w : d.children[u]) {
                    ++cnt;
                    stack.push_back(w);
                }
            }
            return cnt;
        }());
    }
    CHECK(total == 27);  // every state in exactly one component
}
