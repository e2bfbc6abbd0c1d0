#include "fdsf/json_io.hpp"

#include <stdexcept>

#include "fdsf/numeric.hpp"

namespace fdsf {

namespace {

std::vector<std::int64_t> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " must hold integers");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

std::int64_t int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing integer field '") + key + "'");
    return j.at(key).get<std::int64_t>();
}

}  // namespace

json field_context_to_json(const FieldContext& ctx) {
    std::vector<std::int64_t> mod(ctx.r() + 1);
    for (int i = 0; i <= ctx.r(); ++i) mod[i] = ctx.modulus().coeff(i);
    return json{{"p", ctx.p()}, {"r", ctx.r()}, {"modulus", mod}};
}

FieldContext field_context_from_json(const json& j) {
    std::int64_t p = int_field(j, "p");
    int r = static_cast<int>(int_field(j, "r"));
    std::optional<PolyZp> modulus;
    if (j.contains("modulus")) modulus = PolyZp(p, int_list(j.at("modulus"), "modulus"));
    return make_extension_field(p, r, modulus);
}

json linpoly_to_json(const LinearizedPoly& l) {
    json coeffs = json::array();
    for (const auto& c : l.coeffs) coeffs.push_back(c.coords);
    json j = field_context_to_json(l.ctx);
    j["coeffs"] = std::move(coeffs);
    return j;
}

LinearizedPoly linpoly_from_json(const json& j) {
    FieldContext ctx = field_context_from_json(j);
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        throw std::invalid_argument("linearized polynomial needs a 'coeffs' array");
    std::vector<FieldElement> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(FieldElement{int_list(c, "coefficient")});
    return lp_make(ctx, std::move(coeffs));
}

json state_space_to_json(const StateSpace& s) {
    switch (s.kind()) {
        case StateSpace::Kind::zm_vectors:
            return json{{"kind", "Zm_vectors"}, {"m", s.m()}, {"n", s.n()}};
        case StateSpace::Kind::field: {
            json j = field_context_to_json(*s.ctx());
            j["kind"] = "field";
            return j;
        }
        case StateSpace::Kind::field_vectors: {
            json j = field_context_to_json(*s.ctx());
            j["kind"] = "field_vectors";
            j["n"] = s.n();
            return j;
        }
    }
    throw std::logic_error("unreachable");
}

StateSpace state_space_from_json(const json& j) {
    std::string kind = j.value("kind", "");
    if (kind == "Zm_vectors")
        return StateSpace::zm_vectors(int_field(j, "m"), static_cast<int>(int_field(j, "n")));
    if (kind == "field") return StateSpace::field(field_context_from_json(j));
    if (kind == "field_vectors")
        return StateSpace::field_vectors(field_context_from_json(j),
                                         static_cast<int>(int_field(j, "n")));
    throw std::invalid_argument("state space kind must be Zm_vectors, field or field_vectors");
}

json function_table_to_json(const FunctionTable& f) {
    return json{{"space", state_space_to_json(f.space)}, {"map", f.map}};
}

FunctionTable function_table_from_json(const json& j) {
    if (!j.contains("space")) throw std::invalid_argument("function table needs a 'space' object");
    FunctionTable f{state_space_from_json(j.at("space")), int_list(j.at("map"), "map")};
    validate_table(f);
    return f;
}

json mod_matrix_to_json(const ModMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < a.dim(); ++j2) row.push_back(a.at(i, j2));
        rows.push_back(std::move(row));
    }
    return json{{"p", a.p()}, {"n", a.n()}, {"dim", a.dim()}, {"entries", rows}};
}

ModMatrix mod_matrix_from_json(const json& j) {
    std::int64_t p = int_field(j, "p");
    int n = static_cast<int>(int_field(j, "n"));
    if (!j.contains("entries") || !j.at("entries").is_array())
        throw std::invalid_argument("matrix needs an 'entries' array of rows");
    std::vector<std::int64_t> flat;
    const json& rows = j.at("entries");
    int dim = static_cast<int>(rows.size());
    for (const auto& row : rows) {
        std::vector<std::int64_t> r = int_list(row, "matrix row");
        if (static_cast<int>(r.size()) != dim)
            throw std::invalid_argument("matrix must be square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return ModMatrix(p, n, dim, std::move(flat));
}

json certificate_to_json(const OrderCertificate& c) {
    return json{{"e", c.e},
                {"minimalPolyModP", c.minimal_poly_mod_p.coeffs()},
                {"minimalPolyText", c.minimal_poly_mod_p.to_string()},
                {"beta", c.beta},
                {"totalOrder", c.total_order},
                {"method", c.method}};
}

json orbit_report_to_json(const OrbitReport& r, bool include_zero) {
    json orbits = json::array();
    long long count = 0;
    json histogram = json::object();
    for (const auto& o : r.orbits) {
        if (!include_zero && o.representative == 0) continue;
        ++count;
        histogram[std::to_string(o.members.size())] =
            histogram.value(std::to_string(o.members.size()), 0) + 1;
        orbits.push_back(json{{"representative", o.representative},
                              {"size", o.members.size()},
                              {"msLength", o.ms_length},
                              {"members", o.members}});
    }
    return json{{"p", r.p},
                {"dim", r.dim},
                {"orbitCount", count},
                {"includesZeroOrbit", include_zero},
                {"sizeHistogram", histogram},
                {"orbits", orbits}};
}

SdsSpec sds_from_json(const json& j) {
    std::int64_t m = int_field(j, "m");
    int n = static_cast<int>(int_field(j, "vertices"));
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            std::vector<std::int64_t> pair = int_list(e, "edge");
            if (pair.size() != 2) throw std::invalid_argument("edge must be a pair");
            edges.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
        }
    DependencyGraph g(n, edges);

    std::vector<LocalUpdate> locals;
    if (!j.contains("locals") || !j.at("locals").is_array())
        throw std::invalid_argument("SDS needs a 'locals' array");
    for (const auto& lj : j.at("locals")) {
        LocalUpdate u;
        u.vertex = static_cast<int>(int_field(lj, "vertex"));
        for (auto v : int_list(lj.at("neighborhood"), "neighborhood"))
            u.domain.push_back(static_cast<int>(v));
        if (m < 2) throw std::invalid_argument("SDS modulus must be >= 2");
        std::int64_t entries = 1;
        for (size_t i = 0; i < u.domain.size(); ++i) {
            if (entries > kMaxCardinality / m)
                throw std::invalid_argument("local update rule table exceeds the exact-integer range");
            entries *= m;
        }
        u.rule.assign(entries, -1);
        if (!lj.contains("rule")) throw std::invalid_argument("local update needs a 'rule' array");
        for (const auto& pr : lj.at("rule")) {
            std::vector<std::int64_t> pair = int_list(pr, "rule entry");
            if (pair.size() != 2) throw std::invalid_argument("rule entry must be [state, value]");
            if (pair[0] < 0 || pair[0] >= entries)
                throw std::invalid_argument("rule entry state out of range");
            if (pair[1] < 0 || pair[1] >= m)
                throw std::invalid_argument("rule entry value out of range");
            if (u.rule[pair[0]] != -1)
                throw std::invalid_argument("rule entry repeated for the same restricted state");
            u.rule[pair[0]] = pair[1];
        }
        for (auto v : u.rule)
            if (v == -1) throw std::invalid_argument("rule must cover every restricted state");
        locals.push_back(std::move(u));
    }

    std::vector<int> schedule;
    for (auto v : int_list(j.at("schedule"), "schedule")) schedule.push_back(static_cast<int>(v));
    return SdsSpec{m, std::move(g), std::move(locals), std::move(schedule)};
}

json sds_to_json(const SdsSpec& s) {
    json edges = json::array();
    for (auto [a, b] : s.graph.edges()) edges.push_back(json::array({a, b}));
    json locals = json::array();
    for (const auto& u : s.locals) {
        json rule = json::array();
        for (size_t enc = 0; enc < u.rule.size(); ++enc)
            rule.push_back(json::array({enc, u.rule[enc]}));
        locals.push_back(json{{"vertex", u.vertex}, {"neighborhood", u.domain}, {"rule", rule}});
    }
    return json{{"m", s.m},
                {"vertices", s.graph.vertex_count()},
                {"edges", edges},
                {"schedule", s.schedule},
                {"locals", locals}};
}

json bijection_to_json(const Bijection& g) {
    return json{{"p", g.p}, {"n", g.n}, {"table", g.table}};
}

Bijection bijection_from_json(const json& j) {
    return Bijection(int_field(j, "p"), static_cast<int>(int_field(j, "n")),
                     int_list(j.at("table"), "table"));
}

}  // namespace fdsf
