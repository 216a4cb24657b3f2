#include "grl/json_io.hpp"

namespace grl {

json field_to_json(const Field& f) {
    return json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

Field field_from_json(const json& j) {
    return Field::make(j.at("p").get<int>(), j.at("m").get<int>(), j.at("modulus").get<std::vector<int>>());
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json grl_spec_to_json(const GrlSpec& s) {
    return json{{"field", field_to_json(s.f)},
                {"alpha", s.alpha},
                {"v", s.v},
                {"A", matrix_to_json(s.A)},
                {"k", s.k}};
}

GrlSpec grl_spec_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    auto alpha = j.at("alpha").get<std::vector<Elt>>();
    auto v = j.at("v").get<std::vector<Elt>>();
    auto rows = j.at("A").get<std::vector<std::vector<Elt>>>();
    Matrix a = Matrix::from_rows(f, rows);
    GrlSpec spec{f, std::move(alpha), std::move(v), std::move(a), j.at("k").get<int>()};
    validate_grl_spec(spec);
    return spec;
}

namespace {

json distance_to_json(const DistanceValue& d) {
    return json{{"value", d.value}, {"evidence", to_string(d.evidence)}};
}

}  // namespace

json code_report_to_json(int n, int k, const Classification& c, std::optional<bool> hso) {
    json j{{"n", n},
           {"k", k},
           {"d", distance_to_json(c.d)},
           {"d_dual", distance_to_json(c.d_dual)},
           {"s", c.s},
           {"s_dual", c.s_dual},
           {"label", to_string(c.label)}};
    if (hso) j["hermitian_self_orthogonal"] = *hso;
    return j;
}

json s2_report_to_json(const S2CriterionReport& r) {
    json j{{"criterion", "nmds_s2"}, {"holds", r.holds}};
    if (r.holds) {
        j["witness"] = json{{"disjunct", r.fired_disjunct}, {"sigma", r.sigma}, {"subset", r.subset}};
    }
    return j;
}

json s3_report_to_json(const S3CriterionReport& r) {
    json j{{"criterion", "nmds_s3"},
           {"holds", r.holds},
           {"cond1", r.cond1},
           {"cond2", r.cond2},
           {"cond3", r.cond3}};
    json w = json::object();
    if (r.det_witness) {
        auto [i, jj, subset] = *r.det_witness;
        w["det"] = json{{"columns", {i, jj}}, {"subset", subset}};
    }
    if (r.orth_witness) w["orthogonal"] = json{{"column", r.orth_witness->first}, {"subset", r.orth_witness->second}};
    if (r.cond2_violation) w["cond2_violation"] = *r.cond2_violation;
    if (r.cond3_violation)
        w["cond3_violation"] = json{{"column", r.cond3_violation->first}, {"subset", r.cond3_violation->second}};
    j["witness"] = std::move(w);
    return j;
}

json so_report_to_json(const SOCriterionReport& r) {
    return json{{"criterion", "hermitian_so"},
                {"holds", r.holds},
                {"vanishing_ok", r.vanishing_ok},
                {"matrix_ok", r.matrix_ok},
                {"target", matrix_to_json(r.target)}};
}

json quantum_params_to_json(const QuantumParams& p) {
    auto defect = singleton_defect_q(p);
    return json{{"n", p.n},
                {"k", p.kq},
                {"d", distance_to_json(p.d)},
                {"q", p.q},
                {"defect", defect.defect.str()},
                {"qnmds", defect.qnmds}};
}

json family1_trace_to_json(const Family1Trace& t) {
    return json{{"c", t.c},       {"D", t.D},   {"sigma", t.sigma}, {"beta", t.beta}, {"xi", t.xi},
                {"theta", t.theta}, {"j0", t.j0}, {"rho", t.rho},     {"a", t.a},       {"d", t.d}};
}

json family2_trace_to_json(const Family2Trace& t) {
    return json{{"omega", t.omega}, {"u", t.u},     {"mu", t.mu}, {"E", t.E},  {"j0", t.j0},
                {"theta", t.theta}, {"tau", t.tau}, {"rho", t.rho}, {"a", t.a}, {"d", t.d}};
}

json family3_trace_to_json(const Family3Trace& t) {
    return json{{"c", t.c}, {"D", t.D}, {"Sigma", t.Sigma}, {"Lambda", t.Lambda},
                {"a", t.a}, {"b", t.b}, {"c_entry", t.cc}};
}

json family4_trace_to_json(const Family4Trace& t) {
    return json{{"omega", t.omega}, {"u", t.u}, {"mu", t.mu}, {"varpi", t.varpi}, {"A3", matrix_to_json(t.A3)}};
}

}  // namespace grl
