#include "lgdiv/report.hpp"

namespace lgdiv {

using nlohmann::json;

json mat_json(const Mat2& m) {
    return json::array({json::array({m.e[0], m.e[1]}), json::array({m.e[2], m.e[3]})});
}

json group_input_json(const MatrixGroup& g) {
    json gens = json::array();
    for (const Mat2& x : g.generators()) gens.push_back(mat_json(x));
    return {{"p", g.modulus().p()}, {"n", g.modulus().n()}, {"generators", gens}};
}

namespace {

uint64_t get_u64(const json& j, const char* key, std::optional<uint64_t> def = {}) {
    if (!j.contains(key)) {
        if (def) return *def;
        fail(errc::invalid_argument, std::string("missing field: ") + key);
    }
    const json& v = j.at(key);
    if (!v.is_number_unsigned())
        fail(errc::invalid_argument, std::string("field must be a non-negative integer: ") + key);
    return v.get<uint64_t>();
}

Mat2 mat_from_json(const json& j, const Modulus& mod) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        fail(errc::invalid_argument, "a generator must be a 2x2 array of integers");
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 2; ++c)
            if (!j[r][c].is_number_unsigned())
                fail(errc::invalid_argument, "matrix entries must be non-negative integers");
    return Mat2(mod, j[0][0].get<uint64_t>(), j[0][1].get<uint64_t>(), j[1][0].get<uint64_t>(),
                j[1][1].get<uint64_t>());
}

json point_json(uint64_t x, uint64_t y) { return json::array({x, y}); }

json profile_json(const ParameterProfile& p) {
    return {{"i", p.i},
            {"j", p.j},
            {"m", p.m},
            {"h", p.h},
            {"d", p.d},
            {"lambda1", p.lambda1},
            {"k_exp", p.k_exp},
            {"su_trivial", p.su_trivial},
            {"sl_trivial", p.sl_trivial},
            {"delta", mat_json(p.delta)},
            {"tau_l", mat_json(p.tau_l)},
            {"tau_u", mat_json(p.tau_u)},
            {"rho", mat_json(p.rho)}};
}

json preconditions_json(const PreconditionReport& r) {
    json out = {{"g1_cyclic", r.g1_cyclic},
                {"basis_ok", r.basis_ok},
                {"ord_lambda1", r.ord_lambda1},
                {"g2_triangularity", to_string(r.g2_triangularity)},
                {"satisfied", r.satisfied},
                {"notes", r.notes}};
    if (r.g1_generator) out["lambda1"] = r.g1_generator->e[3];
    return out;
}

json witness_on_generators(const Cocycle& z) {
    const MatrixGroup& g = *z.group();
    json out = json::array();
    for (size_t gi = 0; gi < g.generator_count(); ++gi) {
        const auto& v = z.value(g.step_index(0, gi));
        out.push_back(point_json(v[0], v[1]));
    }
    return out;
}

} // namespace

GroupPtr group_from_json(const json& j, uint64_t cap) {
    if (!j.is_object()) fail(errc::invalid_argument, "group input must be a JSON object");
    uint64_t p = get_u64(j, "p");
    uint64_t n = get_u64(j, "n");
    if (n == 0 || n > 64) fail(errc::invalid_argument, "n out of range");
    Modulus mod(p, static_cast<unsigned>(n));
    std::vector<Mat2> gens;
    if (j.contains("generators")) {
        const json& g = j.at("generators");
        if (!g.is_array()) fail(errc::invalid_argument, "generators must be an array");
        for (const json& x : g) gens.push_back(mat_from_json(x, mod));
    }
    return close_group(mod, gens, cap);
}

FamilySpec family_spec_from_json(const json& j) {
    FamilySpec spec;
    if (!j.is_object()) fail(errc::invalid_argument, "family spec must be a JSON object");
    std::string name = j.value("family", "");
    auto kind = family_case_from_string(name);
    if (!kind) fail(errc::invalid_argument, "unknown family: " + name);
    spec.kind = *kind;
    spec.p = get_u64(j, "p");
    spec.n = static_cast<unsigned>(get_u64(j, "n"));
    spec.i = static_cast<unsigned>(get_u64(j, "i", 0));
    spec.alpha = get_u64(j, "alpha", 0);
    spec.theta = get_u64(j, "theta", 0);
    if (j.contains("lambda")) spec.lambda_override = get_u64(j, "lambda");
    return spec;
}

GridConfig grid_config_from_json(const json& j) {
    GridConfig c;
    if (!j.is_object()) fail(errc::invalid_argument, "grid config must be a JSON object");
    if (j.contains("p_list")) {
        c.p_list.clear();
        for (const json& v : j.at("p_list")) c.p_list.push_back(v.get<uint64_t>());
    }
    if (j.contains("n_list")) {
        c.n_list.clear();
        for (const json& v : j.at("n_list")) c.n_list.push_back(v.get<unsigned>());
    }
    c.seed = get_u64(j, "seed", 0);
    c.samples_per_tuple = static_cast<unsigned>(get_u64(j, "samples_per_tuple", 1));
    c.group_cap = get_u64(j, "group_cap", c.group_cap);
    c.budget = get_u64(j, "budget", c.budget);
    if (j.contains("predicate_true_only")) c.predicate_true_only = j.at("predicate_true_only").get<bool>();
    return c;
}

SearchOptions search_options_from_json(const json& j) {
    SearchOptions o;
    if (!j.is_object()) fail(errc::invalid_argument, "search options must be a JSON object");
    o.p = get_u64(j, "p");
    o.n = static_cast<unsigned>(get_u64(j, "n"));
    std::string shape = j.value("shape", "lower");
    auto s = search_shape_from_string(shape);
    if (!s) fail(errc::invalid_argument, "unknown shape: " + shape);
    o.shape = *s;
    if (j.contains("j")) o.j = static_cast<unsigned>(get_u64(j, "j"));
    if (j.contains("m")) o.m = static_cast<unsigned>(get_u64(j, "m"));
    o.cap = get_u64(j, "cap", o.cap);
    return o;
}

json analyze_report(const GroupPtr& g, CohomologyBackend backend) {
    json out = group_input_json(*g);
    out["modulus"] = g->modulus().value();
    out["order"] = g->order();
    out["triangularity"] = to_string(triangularity(*g));

    PreconditionReport pre = check_preconditions(*g);
    out["preconditions"] = preconditions_json(pre);

    out["profile"] = nullptr;
    out["vanishing_criterion"] = nullptr;
    try {
        ParameterProfile prof = extract_parameters(*g);
        out["profile"] = profile_json(prof);
        out["vanishing_criterion"] = vanishing_criterion(prof);
    } catch (const Error& e) {
        out["profile_error"] = e.what();
    }

    H1Report rep = h1_loc(g, backend);
    out["h1"] = rep.h1_structure;
    out["h1loc"] = rep.h1loc_structure;
    json reps = json::array();
    for (const Cocycle& z : rep.representatives)
        reps.push_back({{"on_generators", witness_on_generators(z)}});
    out["h1loc_representatives"] = reps;

    FixedSubmodule fx = fixed_points(*g);
    json fgens = json::array();
    for (const TorsionPoint& pt : fx.generators) fgens.push_back(point_json(pt.x, pt.y));
    out["fixed_points"] = {{"generators", fgens}, {"max_exact_order", fx.max_exact_order}};
    out["backend"] = backend == CohomologyBackend::generator_values ? "generator" : "enumeration";
    return out;
}

json h1loc_report(const GroupPtr& g, CohomologyBackend backend) {
    json out = group_input_json(*g);
    out["order"] = g->order();
    H1Report rep = h1_loc(g, backend);
    out["h1"] = rep.h1_structure;
    out["h1loc"] = rep.h1loc_structure;
    json reps = json::array();
    for (const Cocycle& z : rep.representatives)
        reps.push_back({{"on_generators", witness_on_generators(z)}});
    out["h1loc_representatives"] = reps;
    out["backend"] = backend == CohomologyBackend::generator_values ? "generator" : "enumeration";
    return out;
}

json certificate_json(const CounterexampleCertificate& cert) {
    json out = group_input_json(*cert.group);
    out["order"] = cert.group->order();
    out["witness_on_generators"] = witness_on_generators(cert.witness);
    out["checks"] = {{"is_cocycle", cert.cocycle_ok},
                     {"local_conditions", cert.local_ok},
                     {"not_coboundary", cert.not_coboundary},
                     {"p_witness_zero", cert.p_witness_zero},
                     {"class_order", cert.class_order}};
    if (cert.profile) out["profile"] = profile_json(*cert.profile);
    else {
        out["profile"] = nullptr;
        out["profile_error"] = cert.profile_error;
    }
    out["fixed_point_max_order"] = cert.fixed_point_max_order;
    out["valid"] = cert.valid();
    return out;
}

json grid_json(const GridReport& rep) {
    json cases = json::array();
    for (const GridCase& c : rep.cases) {
        json jc = {{"p", c.requested.p},     {"n", c.requested.n},
                   {"i", c.requested.i},     {"j", c.requested.j},
                   {"m", c.requested.m},     {"h", c.requested.h},
                   {"d", c.requested.d},     {"lambda1", c.requested.lambda1},
                   {"skipped", c.skipped},   {"order", c.group_order},
                   {"checked", c.checked},   {"h1loc", c.h1loc},
                   {"violation", c.violation}};
        if (c.profile)
            jc["extracted"] = {{"i", c.profile->i},
                               {"j", c.profile->j},
                               {"m", c.profile->m},
                               {"h", c.profile->h}};
        cases.push_back(std::move(jc));
    }
    return {{"cases", cases},
            {"checked", rep.checked},
            {"violations", rep.violations},
            {"budget_exceeded", rep.budget_exceeded}};
}

json search_json(const std::vector<CounterexampleCertificate>& certs) {
    json arr = json::array();
    for (const auto& c : certs) arr.push_back(certificate_json(c));
    return {{"count", certs.size()}, {"certificates", arr}};
}

json isogeny_json(const MatrixGroup& g, const IsogenyReport& rep) {
    json out = group_input_json(g);
    out["order"] = g.order();
    json levels = json::array();
    for (const IsogenyLevel& l : rep.levels)
        levels.push_back({{"level", l.level},
                          {"triangularity", to_string(l.shape)},
                          {"stable_line", l.stable_line}});
    out["levels"] = levels;
    return out;
}

} // namespace lgdiv
