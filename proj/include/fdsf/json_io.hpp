#ifndef FDSF_JSON_IO_HPP
#define FDSF_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "fdsf/fds.hpp"
#include "fdsf/field.hpp"
#include "fdsf/linpoly.hpp"
#include "fdsf/mod_matrix.hpp"
#include "fdsf/modsys.hpp"
#include "fdsf/msorbits.hpp"
#include "fdsf/sds.hpp"

namespace fdsf {

using json = nlohmann::json;

json field_context_to_json(const FieldContext& ctx);
FieldContext field_context_from_json(const json& j);

json linpoly_to_json(const LinearizedPoly& l);
LinearizedPoly linpoly_from_json(const json& j);

json state_space_to_json(const StateSpace& s);
StateSpace state_space_from_json(const json& j);

json function_table_to_json(const FunctionTable& f);
FunctionTable function_table_from_json(const json& j);

json mod_matrix_to_json(const ModMatrix& a);
ModMatrix mod_matrix_from_json(const json& j);

json certificate_to_json(const OrderCertificate& c);

json orbit_report_to_json(const OrbitReport& r, bool include_zero = true);

// {"m","vertices","edges","schedule","locals":[{"vertex","neighborhood","rule":[[enc,val],...]}]}
struct SdsSpec {
    std::int64_t m;
    DependencyGraph graph;
    std::vector<LocalUpdate> locals;
    std::vector<int> schedule;
};
SdsSpec sds_from_json(const json& j);
json sds_to_json(const SdsSpec& s);

json bijection_to_json(const Bijection& g);
Bijection bijection_from_json(const json& j);

}  // namespace fdsf

#endif
