#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "p2quot/errors.hpp"
#include "p2quot/report.hpp"
#include "p2quot/survey.hpp"

namespace py = pybind11;

namespace {

using namespace p2quot;

Polarization make_pol(const std::vector<long long>& weights) {
    return Polarization::from_ints(weights);
}

// Complex reports cross the boundary as plain python dicts/lists, decoded
// from the same JSON payloads the command-line tool prints.
py::object to_py(const nlohmann::json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::object to_fraction(const Rat& x) {
    return py::module_::import("fractions").attr("Fraction")(rat_string(x));
}

// Integer-valued rationals of any size, parsed by python itself.
py::object big_int(const Rat& x) {
    return py::module_::import("builtins").attr("int")(rat_string(x));
}

StratumKind parse_kind(const std::string& kind) {
    if (kind == "coincidence") return StratumKind::Coincidence;
    if (kind == "collinearity") return StratumKind::Collinearity;
    throw std::invalid_argument("kind must be coincidence or collinearity");
}

EngineOptions make_options(std::uint64_t seed, int max_retries, int family,
                           bool force_perturbation, int max_n) {
    EngineOptions opts;
    opts.seed = seed;
    opts.max_retries = max_retries;
    opts.reference_family = family;
    opts.force_perturbation = force_perturbation;
    opts.max_n = max_n;
    return opts;
}

}  // namespace

PYBIND11_MODULE(p2quot, mod) {
    mod.doc() = "Stability, walls, and Poincare polynomials of GIT quotients of "
                "point configurations in the projective plane";

    mod.def(
        "gamma_c",
        [](const std::vector<long long>& w, const std::vector<int>& subset) {
            Polarization m = make_pol(w);
            return to_fraction(gamma_c(m, Subset::from_indices(subset, m.size())));
        },
        py::arg("weights"), py::arg("subset"),
        "gamma of the coincidence stratum of a 1-based index subset");

    mod.def(
        "gamma_l",
        [](const std::vector<long long>& w, const std::vector<int>& subset) {
            Polarization m = make_pol(w);
            return to_fraction(gamma_l(m, Subset::from_indices(subset, m.size())));
        },
        py::arg("weights"), py::arg("subset"),
        "gamma of the collinearity stratum of a 1-based index subset");

    mod.def(
        "normalize",
        [](const std::vector<long long>& w) {
            Normalized norm = normalize(make_pol(w));
            py::list weights;
            for (const Rat& x : norm.weights) weights.append(big_int(x));
            py::dict out;
            out["weights"] = weights;
            out["perm"] = norm.perm;
            out["scale"] = to_fraction(norm.scale);
            return out;
        },
        py::arg("weights"),
        "sorted coprime form: weights, 0-based source positions, scale");

    mod.def(
        "subset_state",
        [](const std::vector<long long>& w, const std::string& kind,
           const std::vector<int>& subset) {
            Polarization m = make_pol(w);
            return to_py(stratum_report(
                subset_state(m, parse_kind(kind), Subset::from_indices(subset, m.size()))));
        },
        py::arg("weights"), py::arg("kind"), py::arg("subset"),
        "stability of one coincidence or collinearity stratum");

    mod.def(
        "cone_position",
        [](const std::vector<long long>& w, int max_n) {
            return to_py(position_report(cone_position(make_pol(w), max_n)));
        },
        py::arg("weights"), py::arg("max_n") = kDefaultMaxN,
        "where the weights sit: chamber, wall, face, point, or empty");

    mod.def(
        "z_strata",
        [](const std::vector<long long>& w, int max_n) {
            return to_py(zlocus_report(make_pol(w), max_n));
        },
        py::arg("weights"), py::arg("max_n") = kDefaultMaxN,
        "strictly semistable strata with their line-quotient polynomials");

    mod.def(
        "short_subsets",
        [](const std::vector<long long>& w, bool include_last_index) {
            return to_py(short_subsets_report(short_subsets(make_pol(w), include_last_index)));
        },
        py::arg("weights"), py::arg("include_last_index") = false,
        "short subsets of a weighted configuration on the line");

    mod.def(
        "hk_poincare",
        [](const std::vector<long long>& w, bool include_last_index, int max_n) {
            return hk_poincare(make_pol(w), include_last_index, max_n).coeffs();
        },
        py::arg("weights"), py::arg("include_last_index") = false,
        py::arg("max_n") = kDefaultMaxN,
        "Poincare polynomial of a generic weighted quotient of the line");

    mod.def(
        "p1_ip",
        [](const std::vector<long long>& w, int max_n) {
            return p1_ip(make_pol(w), max_n).coeffs();
        },
        py::arg("weights"), py::arg("max_n") = kDefaultMaxN,
        "intersection Poincare polynomial of a weighted quotient of the line");

    mod.def(
        "q_poly",
        [](int n, const std::vector<int>& subset) {
            return q_poly(n, Subset::from_indices(subset, n)).coeffs();
        },
        py::arg("n"), py::arg("subset"), "wall-crossing kernel polynomial");

    mod.def(
        "epsilon",
        [](int n, const std::vector<int>& subset) {
            return epsilon(n, Subset::from_indices(subset, n));
        },
        py::arg("n"), py::arg("subset"), "crossing sign: +1, -1, or 0");

    mod.def(
        "analyze_wall",
        [](const std::vector<long long>& w, const std::vector<int>& subset, int max_n) {
            Polarization m = make_pol(w);
            return to_py(wall_crossing_report(
                analyze_wall(m, Subset::from_indices(subset, m.size()), max_n)));
        },
        py::arg("weights"), py::arg("subset"), py::arg("max_n") = kDefaultMaxN,
        "fibers and stratum polynomial of a wall through the weights");

    mod.def(
        "crossing_delta",
        [](const std::vector<long long>& w, const std::vector<int>& subset, int max_n) {
            Polarization m = make_pol(w);
            return crossing_delta(m, Subset::from_indices(subset, m.size()), max_n).coeffs();
        },
        py::arg("weights"), py::arg("subset"), py::arg("max_n") = kDefaultMaxN,
        "Poincare difference across a wall, positive side minus negative side");

    mod.def(
        "find_crossings",
        [](const std::vector<long long>& start, const std::vector<long long>& end, int max_n) {
            return to_py(crossing_plan_report(
                find_crossings(make_pol(start), make_pol(end), max_n)));
        },
        py::arg("start"), py::arg("end"), py::arg("max_n") = kDefaultMaxN,
        "walls met by the straight segment between two chamber points");

    mod.def(
        "is_small",
        [](const std::vector<long long>& target, const std::vector<long long>& cand, int max_n) {
            return to_py(smallness_report(is_small(make_pol(target), make_pol(cand), max_n)));
        },
        py::arg("target"), py::arg("candidate"), py::arg("max_n") = kDefaultMaxN,
        "check that the candidate chamber contracts onto the target by a small map");

    mod.def(
        "find_small_resolution",
        [](const std::vector<long long>& w, int max_n) {
            Polarization cand = find_small_resolution(make_pol(w), max_n);
            py::list out;
            for (const Rat& x : cand.weights()) out.append(big_int(x));
            return out;
        },
        py::arg("weights"), py::arg("max_n") = kDefaultMaxN,
        "weights of a chamber whose quotient resolves the wall quotient by a small map");

    mod.def(
        "reference",
        [](int n, int family) {
            Reference ref = family == 2 ? reference_alt(n) : reference(n);
            py::list weights;
            for (const Rat& x : ref.weights.weights()) weights.append(big_int(x));
            return py::make_tuple(weights, ref.poincare.coeffs());
        },
        py::arg("n"), py::arg("family") = 1,
        "a chamber point with known quotient and its Poincare polynomial");

    mod.def(
        "chamber_poincare",
        [](const std::vector<long long>& w, std::uint64_t seed, int max_retries,
           int family, bool force_perturbation, int max_n) {
            return chamber_poincare(make_pol(w),
                                    make_options(seed, max_retries, family,
                                                 force_perturbation, max_n))
                .coeffs();
        },
        py::arg("weights"), py::arg("seed") = 0, py::arg("max_retries") = 64,
        py::arg("family") = 1, py::arg("force_perturbation") = false,
        py::arg("max_n") = kDefaultMaxN,
        "Poincare polynomial of a chamber quotient via wall crossings");

    mod.def(
        "ip",
        [](const std::vector<long long>& w, std::uint64_t seed, int max_retries,
           int family, bool force_perturbation, int max_n) {
            return ip(make_pol(w),
                      make_options(seed, max_retries, family, force_perturbation, max_n))
                .coeffs();
        },
        py::arg("weights"), py::arg("seed") = 0, py::arg("max_retries") = 64,
        py::arg("family") = 1, py::arg("force_perturbation") = false,
        py::arg("max_n") = kDefaultMaxN,
        "intersection Poincare polynomial for any admissible weights");

    mod.def(
        "six_case",
        [](const std::vector<long long>& w) { return six_case(make_pol(w)); },
        py::arg("weights"), "which of the five closed-form cases the weights fall in");

    mod.def(
        "ip_closed_form",
        [](const std::vector<long long>& w) { return ip_closed_form(make_pol(w)).coeffs(); },
        py::arg("weights"), "closed-form intersection polynomial for six points");

    mod.def(
        "count_excluded_collinear_triples",
        [](const std::vector<long long>& w) {
            return count_excluded_collinear_triples(make_pol(w));
        },
        py::arg("weights"), "collinear triples forced unstable for six points");

    mod.def(
        "singularity_report",
        [](const std::vector<long long>& w) {
            return to_py(singularity_json(singularity_report(make_pol(w))));
        },
        py::arg("weights"), "singular curves and points of a six-point quotient");

    mod.def(
        "verify_six",
        [](std::uint64_t samples, int max_weight, std::uint64_t seed, int threads) {
            VerifySixResult res = verify_six(samples, max_weight, seed, threads);
            py::dict out;
            out["samples"] = res.samples;
            out["matches"] = res.matches;
            out["mismatches"] = res.mismatches;
            return out;
        },
        py::arg("samples") = 1000, py::arg("max_weight") = 30, py::arg("seed") = 7,
        py::arg("threads") = 0,
        "compare the path engine against the six-point closed form on random weights");

    mod.def(
        "chamber_survey",
        [](int n, std::uint64_t samples, int max_weight, std::uint64_t seed, int threads) {
            ChamberSurvey s = chamber_survey(n, samples, max_weight, seed, threads);
            py::dict out;
            out["samples"] = s.samples;
            out["chamber_hits"] = s.chamber_hits;
            out["distinct"] = s.distinct;
            return out;
        },
        py::arg("n"), py::arg("samples") = 100000, py::arg("max_weight") = 30,
        py::arg("seed") = 7, py::arg("threads") = 0,
        "count distinct chambers discovered by sampling sorted weight vectors");

    py::register_exception<internal_error>(mod, "InternalError", PyExc_RuntimeError);

    mod.attr("schema_version") = kSchemaVersion;
}
