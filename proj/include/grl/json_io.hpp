#pragma once

#include <json.hpp>

#include "grl/families.hpp"
#include "grl/quantum.hpp"

namespace grl {

using json = nlohmann::json;

json field_to_json(const Field& f);
Field field_from_json(const json& j);

json matrix_to_json(const Matrix& m);  // entries only; field carried by context

json grl_spec_to_json(const GrlSpec& s);
GrlSpec grl_spec_from_json(const json& j);

/// {"n":..,"k":..,"d":..,"d_dual":..,"s":..,"s_dual":..,"label":..,
///  "hermitian_self_orthogonal":..} with evidence tags on both distances.
json code_report_to_json(int n, int k, const Classification& c, std::optional<bool> hso);

json s2_report_to_json(const S2CriterionReport& r);
json s3_report_to_json(const S3CriterionReport& r);
json so_report_to_json(const SOCriterionReport& r);

json quantum_params_to_json(const QuantumParams& p);

json family1_trace_to_json(const Family1Trace& t);
json family2_trace_to_json(const Family2Trace& t);
json family3_trace_to_json(const Family3Trace& t);
json family4_trace_to_json(const Family4Trace& t);

}  // namespace grl
