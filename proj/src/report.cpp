#include "p2quot/report.hpp"

namespace p2quot {

using nlohmann::json;

json to_json(const Poly& p) {
    json arr = json::array();
    for (std::int64_t c : p.coeffs()) arr.push_back(c);
    return arr;
}

json to_json(Subset s) {
    json arr = json::array();
    for (int i : s.indices()) arr.push_back(i);
    return arr;
}

std::string rat_string(const Rat& x) { return x.str(); }

json weights_json(const Polarization& m) {
    json arr = json::array();
    for (const Rat& w : m.weights()) {
        if (denominator(w) == 1)
            arr.push_back(static_cast<std::int64_t>(numerator(w)));
        else
            arr.push_back(rat_string(w));
    }
    return arr;
}

json gamma_report(const Polarization& m, Subset s) {
    return json{{"subset", to_json(s)},
                {"gamma_c", rat_string(gamma_c(m, s))},
                {"gamma_l", rat_string(gamma_l(m, s))}};
}

json stratum_report(const StratumState& st) {
    return json{{"kind", to_string(st.kind)},
                {"subset", to_json(st.subset)},
                {"gamma", rat_string(st.gamma)},
                {"state", to_string(st.state)}};
}

json position_report(const ConePosition& pos) {
    json out{{"tag", to_string(pos.tag)}};
    if (pos.tag == ConePosition::Tag::FaceZero) out["zero_indices"] = pos.zero_indices;
    if (pos.tag == ConePosition::Tag::FaceTop) out["top_index"] = pos.top_index;
    if (pos.tag == ConePosition::Tag::Wall) {
        json walls = json::array();
        for (Subset k : pos.walls) walls.push_back(to_json(k));
        out["walls"] = walls;
    }
    return out;
}

json zlocus_report(const Polarization& m, int max_n) {
    json strata = json::array();
    for (const ZStratum& z : z_strata(m, max_n)) {
        json reduced = json::array();
        for (const Rat& w : z.reduced_weights) reduced.push_back(rat_string(w));
        strata.push_back(json{{"coincident", to_json(z.coincident)},
                              {"collinear", to_json(z.collinear)},
                              {"dim", z.dim},
                              {"reduced_weights", reduced},
                              {"z_poly", to_json(p1_ip(Polarization(z.reduced_weights), max_n))}});
    }
    return json{{"strata", strata}};
}

json poly_report(const Poly& p) {
    return json{{"coefficients", to_json(p)}, {"pretty", p.str()}};
}

json short_subsets_report(const ShortSubsetFamily& fam) {
    json members = json::array();
    for (Subset j : fam.members) members.push_back(to_json(j));
    json weights = json::array();
    for (const Rat& w : fam.weights) weights.push_back(rat_string(w));
    return json{{"weights", weights}, {"members", members}};
}

json wall_crossing_report(const WallCrossing& wc) {
    return json{{"wall_point", weights_json(wc.wall_point)},
                {"subset", to_json(wc.subset)},
                {"n", wc.n},
                {"fiber_plus", wc.fiber_plus},
                {"fiber_minus", wc.fiber_minus},
                {"z_poly", to_json(wc.z_poly)}};
}

json crossing_plan_report(const CrossingPlan& plan) {
    json crossings = json::array();
    for (const Crossing& c : plan.crossings)
        crossings.push_back(json{{"s", rat_string(c.s)},
                                 {"subset", to_json(c.subset)},
                                 {"wall_point", weights_json(c.wall_point)},
                                 {"direction", c.direction}});
    return json{{"start", weights_json(plan.start)},
                {"end", weights_json(plan.end)},
                {"crossings", crossings}};
}

json smallness_report(const SmallnessReport& rep) {
    json per_wall = json::array();
    for (const WallCheck& wc : rep.per_wall)
        per_wall.push_back(json{{"wall", to_json(wc.wall)},
                                {"side", wc.side},
                                {"realized_dim", wc.realized_dim},
                                {"required_dims", wc.required_dims},
                                {"ok", wc.ok}});
    return json{{"target", weights_json(rep.target)},
                {"candidate", weights_json(rep.candidate)},
                {"per_wall", per_wall},
                {"sandwich_ok", rep.sandwich_ok},
                {"chamber_ok", rep.chamber_ok},
                {"verdict", rep.verdict}};
}

json singularity_json(const SingularityReport& rep) {
    json curves = json::array();
    for (const auto& [i, j] : rep.curves) curves.push_back(json::array({i, j}));
    json triples = json::array();
    for (const auto& part : rep.triple_points) {
        json pairs = json::array();
        for (const auto& [i, j] : part) pairs.push_back(json::array({i, j}));
        triples.push_back(pairs);
    }
    json smooth = json::array();
    for (const auto& t : rep.smooth_points)
        smooth.push_back(json::array({t[0], t[1], t[2]}));
    return json{{"third", rat_string(rep.third)},
                {"curves", curves},
                {"triple_points", triples},
                {"smooth_points", smooth},
                {"labels",
                 json{{"curve", "T1T4-T2T3"}, {"triple_point", "T1T2T3-T4T5"}}}};
}

json make_envelope(const std::string& command, json result) {
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"result", std::move(result)}};
}

json make_envelope(const std::string& command, const Polarization& input,
                   json result) {
    json env = make_envelope(command, std::move(result));
    env["input_weights"] = weights_json(input);
    json norm = json::array();
    for (const Rat& w : normalize(input).weights) norm.push_back(rat_string(w));
    env["normalized_weights"] = norm;
    return env;
}

}  // namespace p2quot
