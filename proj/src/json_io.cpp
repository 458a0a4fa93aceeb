// SPDX-License-Identifier: Apache-2.0
#include "gmr/json_io.hpp"

namespace gmr {

using nlohmann::json;

namespace {

double require_number(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw domain_error(std::string("missing or non-numeric field \"") + key + "\"");
    return j.at(key).get<double>();
}

}  // namespace

json to_json(const ModelParams& p) {
    return {{"k", p.k}, {"alpha", p.alpha}, {"sigma", p.sigma}, {"lambda", p.lambda}};
}

ModelParams model_params_from_json(const json& j) {
    ModelParams p{require_number(j, "k"), require_number(j, "alpha"),
                  require_number(j, "sigma"), require_number(j, "lambda")};
    p.validate();
    return p;
}

json to_json(const SolutionFamily& f) {
    json j{{"family", family_name(f.family)}, {"c1", f.c1}, {"params", to_json(f.params)}};
    if (!f.single_constant()) j["c2"] = f.c2;
    if (f.uses_a()) j["a"] = f.a;
    return j;
}

SolutionFamily solution_family_from_json(const json& j) {
    if (!j.contains("family") || !j.at("family").is_string())
        throw domain_error("missing family name");
    SolutionFamily f;
    f.family = family_from_name(j.at("family").get<std::string>());
    f.params = model_params_from_json(j.at("params"));
    if (j.contains("c1")) f.c1 = require_number(j, "c1");
    if (j.contains("c")) f.c1 = require_number(j, "c");  // single-constant alias
    if (j.contains("c2")) f.c2 = require_number(j, "c2");
    if (j.contains("a")) f.a = require_number(j, "a");
    f.validate();
    return f;
}

json to_json(const lie::AlgebraElement& x) {
    return {{"a", x.a}, {"sigma", x.sigma}};
}

lie::AlgebraElement algebra_element_from_json(const json& j) {
    lie::AlgebraElement x;
    if (!j.contains("a") || !j.at("a").is_array() || j.at("a").size() != 6)
        throw domain_error("field \"a\" must be an array of 6 coefficients");
    for (int i = 0; i < 6; ++i) x.a[i] = j.at("a").at(i).get<double>();
    x.sigma = j.contains("sigma") ? require_number(j, "sigma") : 1.0;
    x.validate();
    return x;
}

json to_json(const lie::OptimalRep& r) {
    json word = json::array();
    for (const auto& s : r.word) word.push_back({s.gen, s.eps});
    json j{{"class", lie::rep_class_name(r.rep_class)},
           {"scale", r.scale},
           {"word", word}};
    if (lie::rep_class_has_a(r.rep_class)) j["a"] = r.a;
    return j;
}

lie::OptimalRep optimal_rep_from_json(const json& j) {
    lie::OptimalRep r;
    r.rep_class = lie::rep_class_from_name(j.at("class").get<std::string>());
    r.scale = require_number(j, "scale");
    if (j.contains("a")) r.a = require_number(j, "a");
    for (const auto& s : j.at("word"))
        r.word.push_back({s.at(0).get<int>(), s.at(1).get<double>()});
    return r;
}

json point_map_to_json(const PointMap& m) {
    return {{"g", m.generator}, {"eps", m.epsilon}};
}

PointMap point_map_from_json(const json& j, const ModelParams& params) {
    PointMap m{static_cast<int>(require_number(j, "g")), require_number(j, "eps"), params};
    m.validate();
    return m;
}

json to_json(const verify::ResidualReport& r) {
    return {{"grid",
             {{"t_min", r.grid.t_min},
              {"t_max", r.grid.t_max},
              {"y_min", r.grid.y_min},
              {"y_max", r.grid.y_max},
              {"n_t", r.grid.n_t},
              {"n_y", r.grid.n_y}}},
            {"max_residual", r.max_residual},
            {"mean_residual", r.mean_residual},
            {"worst_point", {{"t", r.worst_t}, {"y", r.worst_y}}},
            {"n_checked", r.n_checked},
            {"n_skipped", r.n_skipped}};
}

json to_json(const verify::McEstimate& e) {
    return {{"value", e.value}, {"std_error", e.std_error}, {"n_effective", e.n_effective}};
}

json to_json(const verify::SemigroupReport& r) {
    return {{"closed_form", r.closed_form}, {"mc", to_json(r.mc)}, {"z", r.z}};
}

}  // namespace gmr
