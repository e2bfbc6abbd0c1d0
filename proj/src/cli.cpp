#include "fdsf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fdsf/json_io.hpp"
#include "fdsf/numeric.hpp"

namespace fdsf {

namespace {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

std::int64_t parse_int(const std::string& tok, const std::string& what) {
    try {
        size_t used = 0;
        std::int64_t v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error("cannot parse " + what + ": '" + tok + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "0,5;1,2" -> rows
std::vector<std::vector<std::int64_t>> parse_matrix_text(const std::string& text) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : split(text, ';')) {
        if (row.empty()) continue;
        std::vector<std::int64_t> r;
        for (const auto& tok : split(row, ',')) r.push_back(parse_int(tok, "matrix entry"));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw parse_error("matrix text is empty");
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw parse_error("matrix text must be square");
    return rows;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open input file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error("JSON parse failure in " + path + ": " + e.what());
    }
}

ZpMatrix zp_matrix_from_text(std::int64_t p, int dim, const std::string& text) {
    if (text == "identity" || text == "I") return ZpMatrix::identity(p, dim);
    if (text == "neg-identity") {
        ZpMatrix m(p, dim, dim);
        for (int i = 0; i < dim; ++i) m.set(i, i, p - 1);
        return m;
    }
    auto rows = parse_matrix_text(text);
    if (static_cast<int>(rows.size()) != dim)
        throw parse_error("matrix text dimension does not match --dim");
    std::vector<std::int64_t> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return ZpMatrix(p, dim, dim, std::move(flat));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// ---- field ----------------------------------------------------------------

struct FieldArgs {
    std::int64_t p = 0;
    int r = 1;
    std::string modulus, spec, format = "json";
};

int cmd_field(const FieldArgs& a, std::ostream& out) {
    FieldContext ctx = [&] {
        if (!a.spec.empty()) return parse_field_spec(a.spec);
        std::optional<PolyZp> mod;
        if (!a.modulus.empty()) {
            std::vector<std::int64_t> c;
            for (const auto& tok : split(a.modulus, ',')) c.push_back(parse_int(tok, "modulus coefficient"));
            mod = PolyZp(a.p, std::move(c));
        }
        return make_extension_field(a.p, a.r, mod);
    }();
    Basis nb = find_normal_basis(ctx);
    json nbj = json::array();
    for (const auto& v : nb.vectors()) nbj.push_back(v.coords);
    json j = field_context_to_json(ctx);
    j["spec"] = ctx.spec_string();
    j["elementCount"] = ctx.element_count();
    j["modulusText"] = ctx.modulus().to_string();
    j["normalBasis"] = nbj;
    if (a.format == "text") {
        out << ctx.spec_string() << "\n";
        out << "modulus: " << ctx.modulus().to_string() << "\n";
        out << "elements: " << ctx.element_count() << "\n";
    } else {
        emit(out, j);
    }
    return kExitOk;
}

// ---- linpoly ---------------------------------------------------------------

int cmd_linpoly(const std::string& input, const std::string& format, std::ostream& out) {
    LinearizedPoly l = linpoly_from_json(load_json(input));
    Subspace ker = lp_kernel(l);
    ZpMatrix m = lp_matrix(l, Basis::polynomial(l.ctx));
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.cols(); ++j2) row.push_back(m.at(i, j2));
        rows.push_back(std::move(row));
    }
    json j = linpoly_to_json(l);
    j["invertible"] = lp_is_invertible(l);
    j["kernelDimension"] = ker.dimension;
    j["kernelBasis"] = ker.basis;
    j["matrix"] = rows;
    j["inPrimeClass"] = lp_in_prime_class(l);
    if (lp_in_prime_class(l)) {
        j["associate"] = associate(l).coeffs();
        auto ord = lp_order(l);
        j["order"] = ord ? json(*ord) : json(nullptr);
    }
    if (format == "text") {
        out << "invertible: " << (lp_is_invertible(l) ? "yes" : "no") << "\n";
        out << "kernel dimension: " << ker.dimension << "\n";
    } else {
        emit(out, j);
    }
    return kExitOk;
}

// ---- fds -------------------------------------------------------------------

json diagram_report(const StateDiagram& d) {
    json comps = json::array();
    for (const auto& c : d.components)
        comps.push_back(json{{"cycleLength", c.cycle.size()}, {"cycle", c.cycle}});
    long long cyc_states = 0;
    for (const auto& c : d.components) cyc_states += static_cast<long long>(c.cycle.size());
    return json{{"states", d.table.space.size()},
                {"components", comps},
                {"componentCount", d.components.size()},
                {"cycleStates", cyc_states},
                {"transientStates", d.table.space.size() - cyc_states},
                {"order", order_of(d)},
                {"signature", diagram_signature(d).canonical}};
}

int cmd_fds_diagram(const std::string& input, const std::string& format, std::ostream& out) {
    FunctionTable f = function_table_from_json(load_json(input));
    StateDiagram d = build_state_diagram(f);
    if (format == "dot") {
        out << to_dot(d);
    } else if (format == "text") {
        out << "states: " << f.space.size() << "\n";
        out << "components: " << d.components.size() << "\n";
        for (const auto& c : d.components) out << "  cycle length " << c.cycle.size() << "\n";
        out << "order: " << order_of(d) << "\n";
    } else {
        emit(out, diagram_report(d));
    }
    return kExitOk;
}

int cmd_fds_interpolate(const std::string& input, std::ostream& out) {
    FunctionTable f = function_table_from_json(load_json(input));
    FieldPoly poly = interpolate(f);
    json coeffs = json::array();
    for (const auto& c : poly.coeffs) coeffs.push_back(c.coords);
    json j = field_context_to_json(poly.ctx);
    j["coeffs"] = coeffs;
    j["degree"] = poly.coeffs.empty() ? -1 : static_cast<int>(poly.coeffs.size()) - 1;
    emit(out, j);
    return kExitOk;
}

int cmd_fds_conjugate(const std::string& input, std::int64_t p, int n, const std::string& gpath,
                      std::ostream& out) {
    FunctionTable f = function_table_from_json(load_json(input));
    Bijection g = gpath.empty() ? digit_bijection(p, n) : bijection_from_json(load_json(gpath));
    FunctionTable fb = conjugate_system(f, g);
    emit(out, function_table_to_json(fb));
    return kExitOk;
}

// ---- sds -------------------------------------------------------------------

int cmd_sds_compose(const std::string& input, bool analyze, std::ostream& out) {
    SdsSpec spec = sds_from_json(load_json(input));
    FunctionTable f = compose_sds(spec.graph, spec.locals, spec.schedule, spec.m);
    json j = function_table_to_json(f);
    if (analyze) j["diagram"] = diagram_report(build_state_diagram(f));
    emit(out, j);
    return kExitOk;
}

// ---- modorder ----------------------------------------------------------------

struct ModOrderArgs {
    std::int64_t p = 0;
    int n = 1;
    std::string matrix, spec, input, method = "lifted";
};

int cmd_modorder(const ModOrderArgs& a, std::ostream& out) {
    ModMatrix mat = [&] {
        if (!a.input.empty()) return mod_matrix_from_json(load_json(a.input));
        if (!a.spec.empty()) {
            // "p n r; row; row; ..."
            auto parts = split(a.spec, ';');
            if (parts.size() < 2) throw parse_error("matrix spec needs a header and rows");
            std::vector<std::int64_t> hv;
            {
                std::istringstream hs(a.spec.substr(0, a.spec.find(';')));
                std::string tok;
                while (hs >> tok) hv.push_back(parse_int(tok, "matrix spec header"));
            }
            if (hv.size() != 3) throw parse_error("matrix spec header must be 'p n r'");
            std::vector<std::int64_t> flat;
            for (size_t i = 1; i < parts.size(); ++i) {
                if (parts[i].empty()) continue;
                for (const auto& tok : split(parts[i], ',')) flat.push_back(parse_int(tok, "matrix entry"));
            }
            if (static_cast<std::int64_t>(flat.size()) != hv[2] * hv[2])
                throw parse_error("matrix spec rows do not match r");
            return ModMatrix(hv[0], static_cast<int>(hv[1]), static_cast<int>(hv[2]), std::move(flat));
        }
        auto rows = parse_matrix_text(a.matrix);
        std::vector<std::int64_t> flat;
        for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
        return ModMatrix(a.p, a.n, static_cast<int>(rows.size()), std::move(flat));
    }();
    OrderCertificate cert =
        a.method == "direct" ? order_certificate_direct(mat) : matrix_order_lifted(mat);
    json j = certificate_to_json(cert);
    j["matrix"] = mod_matrix_to_json(mat);
    emit(out, j);
    return kExitOk;
}

// ---- msorbits ----------------------------------------------------------------

struct MsArgs {
    std::int64_t p = 0;
    int dim = 0;
    std::string s_text, m_text, format = "json";
    long long budget = 1LL << 20;
    bool exclude_zero = false;
};

int cmd_msorbits_enumerate(const MsArgs& a, std::ostream& out) {
    ZpMatrix s = zp_matrix_from_text(a.p, a.dim, a.s_text);
    ZpMatrix m = zp_matrix_from_text(a.p, a.dim, a.m_text);
    if (!check_compat(s, m)) throw std::invalid_argument("matrices fail the MS compatibility check");
    OrbitReport rep = enumerate_ms_orbits(s, m);
    if (a.format == "dot") {
        out << orbit_quotient_dot(s, m, rep);
    } else {
        emit(out, orbit_report_to_json(rep, !a.exclude_zero));
    }
    return kExitOk;
}

int cmd_msorbits_search(const MsArgs& a, std::ostream& out) {
    ZpMatrix s = zp_matrix_from_text(a.p, a.dim, a.s_text);
    OrbitSearchResult res = search_min_orbits(s, a.budget);
    if (a.format == "dot") {
        out << orbit_quotient_dot(s, res.best_m, res.report);
        return kExitOk;
    }
    json rows = json::array();
    for (int i = 0; i < res.best_m.rows(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < res.best_m.cols(); ++j2) row.push_back(res.best_m.at(i, j2));
        rows.push_back(std::move(row));
    }
    json j{{"bestM", rows},
           {"complete", res.complete},
           {"examined", res.examined},
           {"report", orbit_report_to_json(res.report, !a.exclude_zero)}};
    emit(out, j);
    if (!res.complete) return kExitBudgetError;
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact analysis of finite dynamical systems over finite fields"};
    app.require_subcommand(1);
    long long seed = 0;  // reserved for randomized tooling; core commands are deterministic
    app.add_option("--seed", seed, "seed for randomized tooling");

    FieldArgs fa;
    auto* field = app.add_subcommand("field", "field context, canonical modulus, normal basis");
    field->add_option("--p", fa.p, "characteristic");
    field->add_option("--r", fa.r, "extension degree");
    field->add_option("--modulus", fa.modulus, "modulus coefficients c0,c1,...,cr");
    field->add_option("--spec", fa.spec, "field spec string GF(p^r)/c0,c1,...,cr");
    field->add_option("--format", fa.format, "json|text");

    std::string lp_input, lp_format = "json";
    auto* linpoly = app.add_subcommand("linpoly", "analyze a linearized polynomial");
    linpoly->add_option("--input", lp_input, "JSON file")->required();
    linpoly->add_option("--format", lp_format, "json|text");

    auto* fds = app.add_subcommand("fds", "state diagrams of explicit tables");
    fds->require_subcommand(1);
    std::string fd_input, fd_format = "json";
    auto* diagram = fds->add_subcommand("diagram", "limit cycles, transients, order, signature");
    diagram->add_option("--input", fd_input, "function table JSON")->required();
    diagram->add_option("--format", fd_format, "json|dot|text");
    std::string fi_input;
    auto* interp = fds->add_subcommand("interpolate", "polynomial realizing a field table");
    interp->add_option("--input", fi_input, "function table JSON")->required();
    std::string fc_input, fc_g;
    std::int64_t fc_p = 2;
    int fc_n = 1;
    auto* conj = fds->add_subcommand("conjugate", "conjugate a Z_{p^n} system to Z_p digits");
    conj->add_option("--input", fc_input, "function table JSON")->required();
    conj->add_option("--p", fc_p, "prime");
    conj->add_option("--n", fc_n, "exponent");
    conj->add_option("--g", fc_g, "bijection JSON (default: digit map)");

    auto* sds = app.add_subcommand("sds", "sequential dynamical systems");
    sds->require_subcommand(1);
    std::string sd_input;
    bool sd_analyze = false;
    auto* compose = sds->add_subcommand("compose", "compose local updates along the schedule");
    compose->add_option("--input", sd_input, "SDS JSON")->required();
    compose->add_flag("--analyze", sd_analyze, "attach the state-diagram report");

    ModOrderArgs ma;
    auto* modorder = app.add_subcommand("modorder", "order of a matrix modulo p^n");
    modorder->add_option("--p", ma.p, "prime");
    modorder->add_option("--n", ma.n, "exponent");
    modorder->add_option("--matrix", ma.matrix, "rows 'a,b;c,d'");
    modorder->add_option("--spec", ma.spec, "'p n r; row; row; ...'");
    modorder->add_option("--input", ma.input, "matrix JSON");
    modorder->add_option("--method", ma.method, "lifted|direct");

    auto* ms = app.add_subcommand("msorbits", "MS-orbit enumeration and minimization");
    ms->require_subcommand(1);
    MsArgs ea, sa;
    auto* ms_enum = ms->add_subcommand("enumerate", "orbits of a fixed (S, M) pair");
    ms_enum->add_option("--p", ea.p, "prime")->required();
    ms_enum->add_option("--dim", ea.dim, "dimension")->required();
    ms_enum->add_option("--S", ea.s_text, "S rows or 'identity'")->required();
    ms_enum->add_option("--M", ea.m_text, "M rows or 'identity'")->required();
    ms_enum->add_option("--format", ea.format, "json|dot");
    ms_enum->add_flag("--exclude-zero", ea.exclude_zero, "drop the zero orbit from counts");
    auto* ms_search = ms->add_subcommand("search", "minimize orbit count over compatible M");
    ms_search->add_option("--p", sa.p, "prime")->required();
    ms_search->add_option("--dim", sa.dim, "dimension")->required();
    ms_search->add_option("--S", sa.s_text, "S rows or 'identity'")->required();
    ms_search->add_option("--budget", sa.budget, "candidate enumeration budget");
    ms_search->add_option("--format", sa.format, "json|dot");
    ms_search->add_flag("--exclude-zero", sa.exclude_zero, "drop the zero orbit from counts");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return kExitParseError;
    }

    try {
        if (field->parsed()) return cmd_field(fa, out);
        if (linpoly->parsed()) return cmd_linpoly(lp_input, lp_format, out);
        if (diagram->parsed()) return cmd_fds_diagram(fd_input, fd_format, out);
        if (interp->parsed()) return cmd_fds_interpolate(fi_input, out);
        if (conj->parsed()) return cmd_fds_conjugate(fc_input, fc_p, fc_n, fc_g, out);
        if (compose->parsed()) return cmd_sds_compose(sd_input, sd_analyze, out);
        if (modorder->parsed()) return cmd_modorder(ma, out);
        if (ms_enum->parsed()) return cmd_msorbits_enumerate(ea, out);
        if (ms_search->parsed()) return cmd_msorbits_search(sa, out);
        err << "no subcommand selected\n";
        return kExitParseError;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const budget_error& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kExitBudgetError;
    } catch (const std::invalid_argument& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::domain_error& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidationError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternalError;
    }
}

}  // namespace fdsf
