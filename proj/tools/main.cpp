#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "p2quot/errors.hpp"
#include "p2quot/report.hpp"
#include "p2quot/survey.hpp"

namespace {

using nlohmann::json;
using namespace p2quot;

struct CommonFlags {
    std::vector<long long> weights;
    bool json_out = false;
    std::string out_file;
    std::uint64_t seed = 0;
    int max_n = kDefaultMaxN;
};

Polarization weights_arg(const CommonFlags& flags) {
    if (flags.weights.empty())
        throw std::invalid_argument("--weights is required for this command");
    for (long long w : flags.weights)
        if (w < 1) throw std::invalid_argument("weights must be positive integers");
    return Polarization::from_ints(flags.weights);
}

Subset subset_arg(const std::vector<int>& indices, int n) {
    if (indices.empty())
        throw std::invalid_argument("--subset is required for this command");
    return Subset::from_indices(indices, n);
}

StratumKind kind_arg(const std::string& kind) {
    if (kind == "coincidence") return StratumKind::Coincidence;
    if (kind == "collinearity") return StratumKind::Collinearity;
    throw std::invalid_argument("--kind must be coincidence or collinearity");
}

// Report emitter: human text on stdout unless --json, which prints the
// envelope instead; --out always writes the envelope to a file.
void emit(const CommonFlags& flags, const json& envelope, const std::string& human) {
    if (!flags.out_file.empty()) {
        std::ofstream out(flags.out_file);
        if (!out) throw std::runtime_error("cannot open output file " + flags.out_file);
        out << envelope.dump(2) << "\n";
    }
    if (flags.json_out)
        std::cout << envelope.dump(2) << "\n";
    else
        std::cout << human;
}

std::string poly_line(const char* label, const Poly& p) {
    return std::string(label) + " = " + p.str() + "\n";
}

std::string indices_str(const std::vector<int>& indices) {
    std::string out = "{";
    for (std::size_t i = 0; i < indices.size(); ++i)
        out += (i ? "," : "") + std::to_string(indices[i]);
    return out + "}";
}

void run_gamma(const CommonFlags& flags, const std::vector<int>& subset) {
    Polarization m = weights_arg(flags);
    Subset s = subset_arg(subset, m.size());
    std::string human = "gamma_c(" + s.str() + ") = " + rat_string(gamma_c(m, s)) +
                        "\ngamma_l(" + s.str() + ") = " + rat_string(gamma_l(m, s)) + "\n";
    emit(flags, make_envelope("gamma", m, gamma_report(m, s)), human);
}

void run_stability(const CommonFlags& flags, const std::vector<int>& subset,
                   const std::string& kind) {
    Polarization m = weights_arg(flags);
    int n = m.size();
    std::string human;
    json result;
    if (!subset.empty()) {
        StratumState st = subset_state(m, kind_arg(kind), subset_arg(subset, n));
        human = std::string(to_string(st.kind)) + " " + st.subset.str() + ": " +
                to_string(st.state) + " (gamma = " + rat_string(st.gamma) + ")\n";
        result = stratum_report(st);
    } else {
        if (n > 10)
            throw std::invalid_argument("pass --subset to pick a stratum when n > 10");
        json strata = json::array();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            int size = std::popcount(mask);
            for (StratumKind k : {StratumKind::Coincidence, StratumKind::Collinearity}) {
                if (size < (k == StratumKind::Coincidence ? 2 : 3)) continue;
                StratumState st = subset_state(m, k, Subset(mask));
                human += std::string(to_string(st.kind)) + " " + st.subset.str() + ": " +
                         to_string(st.state) + " (gamma = " + rat_string(st.gamma) + ")\n";
                strata.push_back(stratum_report(st));
            }
        }
        result = json{{"strata", strata}};
    }
    emit(flags, make_envelope("stability", m, result), human);
}

void run_position(const CommonFlags& flags) {
    Polarization m = weights_arg(flags);
    ConePosition pos = cone_position(m, flags.max_n);
    std::string human = std::string("position: ") + to_string(pos.tag);
    switch (pos.tag) {
        case ConePosition::Tag::FaceZero:
            human += " (indices " + indices_str(pos.zero_indices) + ")";
            break;
        case ConePosition::Tag::FaceTop:
            human += " (index " + std::to_string(pos.top_index) + ")";
            break;
        case ConePosition::Tag::Wall: {
            human += " (";
            for (std::size_t i = 0; i < pos.walls.size(); ++i)
                human += (i ? ", " : "") + pos.walls[i].str();
            human += ")";
            break;
        }
        default:
            break;
    }
    human += "\n";
    emit(flags, make_envelope("position", m, position_report(pos)), human);
}

void run_zlocus(const CommonFlags& flags) {
    Polarization m = weights_arg(flags);
    std::string human;
    std::vector<ZStratum> strata = z_strata(m, flags.max_n);
    if (strata.empty()) human = "no strictly semistable strata\n";
    for (const ZStratum& z : strata) {
        human += "stratum " + z.coincident.str() + ": coincident " + z.coincident.str() +
                 ", collinear " + z.collinear.str() + ", dim " + std::to_string(z.dim) + "\n";
        human += "  reduced weights:";
        for (const Rat& w : z.reduced_weights) human += " " + rat_string(w);
        human += "\n" + poly_line("  z_poly", p1_ip(Polarization(z.reduced_weights), flags.max_n));
    }
    emit(flags, make_envelope("zlocus", m, zlocus_report(m, flags.max_n)), human);
}

EngineOptions engine_options(const CommonFlags& flags) {
    EngineOptions opts;
    opts.seed = flags.seed;
    opts.max_n = flags.max_n;
    return opts;
}

void run_poincare(const CommonFlags& flags) {
    Polarization m = weights_arg(flags);
    Poly p = chamber_poincare(m, engine_options(flags));
    emit(flags, make_envelope("poincare", m, poly_report(p)), poly_line("P", p));
}

void run_ip(const CommonFlags& flags) {
    Polarization m = weights_arg(flags);
    Poly p = ip(m, engine_options(flags));
    emit(flags, make_envelope("ip", m, poly_report(p)), poly_line("IP", p));
}

void run_smallres(const CommonFlags& flags, const std::vector<long long>& candidate) {
    Polarization m = weights_arg(flags);
    Polarization cand = candidate.empty()
                            ? find_small_resolution(m, flags.max_n)
                            : Polarization::from_ints(candidate);
    SmallnessReport rep = is_small(m, cand, flags.max_n);
    std::string human = "target:";
    for (const Rat& w : rep.target.weights()) human += " " + rat_string(w);
    human += "\ncandidate:";
    for (const Rat& w : rep.candidate.weights()) human += " " + rat_string(w);
    human += "\n";
    for (const WallCheck& wc : rep.per_wall) {
        human += "wall " + wc.wall.str() + ": side " + std::to_string(wc.side) +
                 ", fiber dim " + std::to_string(wc.realized_dim) + ", allowed {";
        for (std::size_t i = 0; i < wc.required_dims.size(); ++i)
            human += (i ? "," : "") + std::to_string(wc.required_dims[i]);
        human += wc.ok ? "}, ok\n" : "}, FAIL\n";
    }
    human += std::string("sandwich: ") + (rep.sandwich_ok ? "ok" : "FAIL") + "\n";
    human += std::string("chamber: ") + (rep.chamber_ok ? "ok" : "FAIL") + "\n";
    human += std::string("verdict: ") + (rep.verdict ? "small" : "not small") + "\n";
    emit(flags, make_envelope("smallres", m, smallness_report(rep)), human);
}

void run_n6_formula(const CommonFlags& flags) {
    Polarization m = weights_arg(flags);
    int c = six_case(m);
    int excluded = count_excluded_collinear_triples(m);
    Poly p = ip_closed_form(m);
    std::string human = "case " + std::to_string(c) + " (" + std::to_string(excluded) +
                        " excluded collinear triples)\n" + poly_line("IP", p);
    json result{{"case", c}, {"excluded_collinear_triples", excluded},
                {"poly", poly_report(p)}};
    emit(flags, make_envelope("n6-formula", m, result), human);
}

void run_n6_singular(const CommonFlags& flags) {
    Polarization m = weights_arg(flags);
    SingularityReport rep = singularity_report(m);
    std::string human = "|m|/3 = " + rat_string(rep.third) + "\n";
    human += "singular curves (T1T4 - T2T3):";
    if (rep.curves.empty()) human += " none";
    for (const auto& [i, j] : rep.curves)
        human += " C_" + std::to_string(i) + std::to_string(j);
    human += "\ntriple points (T1T2T3 - T4T5):";
    if (rep.triple_points.empty()) human += " none";
    for (const auto& part : rep.triple_points) {
        human += " O_{";
        for (std::size_t i = 0; i < part.size(); ++i)
            human += (i ? "," : "") + std::to_string(part[i].first) +
                     std::to_string(part[i].second);
        human += "}";
    }
    human += "\nsmooth points:";
    if (rep.smooth_points.empty()) human += " none";
    for (const auto& t : rep.smooth_points)
        human += " O_" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
    human += "\n";
    emit(flags, make_envelope("n6-singular", m, singularity_json(rep)), human);
}

int run_chambers(const CommonFlags& flags, int n, std::uint64_t samples,
                 int max_weight, int threads) {
    ChamberSurvey survey = chamber_survey(n, samples, max_weight, flags.seed, threads);
    std::string human = "chambers: " + std::to_string(survey.distinct) + " distinct across " +
                        std::to_string(survey.samples) + " samples (" +
                        std::to_string(survey.chamber_hits) + " inside chambers)\n";
    json result{{"n", n},
                {"samples", survey.samples},
                {"chamber_hits", survey.chamber_hits},
                {"distinct", survey.distinct}};
    emit(flags, make_envelope("chambers", result), human);
    if (n == 6 && survey.distinct > 38) {
        std::cerr << "internal error: " << survey.distinct
                  << " chambers found for n=6, expected at most 38\n";
        return 1;
    }
    return 0;
}

int run_verify(const CommonFlags& flags, int n, std::uint64_t samples,
               int max_weight, int threads) {
    if (n != 6)
        throw std::invalid_argument("verify needs --n 6: the closed-form oracle only covers six points");
    VerifySixResult res = verify_six(samples, max_weight, flags.seed, threads);
    bool ok = res.matches == res.samples;
    std::string line = (ok ? "ok: " : "failed: ") + std::to_string(res.matches) + "/" +
                       std::to_string(res.samples) + " oracle matches\n";
    json result{{"n", n},
                {"samples", res.samples},
                {"matches", res.matches},
                {"mismatches", res.mismatches}};
    emit(flags, make_envelope("verify", result), line);
    if (!ok) {
        for (const std::string& s : res.mismatches)
            std::cerr << "mismatch: " << s << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"GIT quotients of n-tuples in the projective plane: stability, walls, and Poincare polynomials"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::vector<int> subset;
    std::vector<long long> candidate;
    std::string kind = "coincidence";
    int n = 6;
    std::uint64_t samples = 10000;
    int max_weight = 30;
    int threads = 0;

    auto add_common = [&](CLI::App* cmd, bool with_weights) {
        if (with_weights)
            cmd->add_option("--weights", flags.weights, "comma-separated positive integer weights")
                ->delimiter(',');
        cmd->add_flag("--json", flags.json_out, "print a JSON report");
        cmd->add_option("--out", flags.out_file, "write the JSON report to a file");
        cmd->add_option("--seed", flags.seed, "seed for deterministic perturbations");
        cmd->add_option("--max-n", flags.max_n, "cap on the number of points for subset scans");
        return cmd;
    };

    CLI::App* gamma = add_common(app.add_subcommand("gamma", "gamma values of one subset"), true);
    gamma->add_option("--subset", subset, "1-based indices")->delimiter(',');

    CLI::App* stability = add_common(
        app.add_subcommand("stability", "stability of coincidence/collinearity strata"), true);
    stability->add_option("--subset", subset, "1-based indices")->delimiter(',');
    stability->add_option("--kind", kind, "coincidence or collinearity");

    add_common(app.add_subcommand("position", "where the weights sit in the cone"), true);
    add_common(app.add_subcommand("zlocus", "strictly semistable strata and their polynomials"), true);
    add_common(app.add_subcommand("poincare", "Poincare polynomial of a chamber quotient"), true);
    add_common(app.add_subcommand("ip", "intersection Poincare polynomial of any quotient"), true);

    CLI::App* smallres = add_common(
        app.add_subcommand("smallres", "find or check a small resolution of a wall quotient"), true);
    smallres->add_option("--candidate", candidate, "candidate weights to check instead of searching")
        ->delimiter(',');

    add_common(app.add_subcommand("n6-formula", "closed-form six-point polynomial and its case"), true);
    add_common(app.add_subcommand("n6-singular", "singular locus classification for six points"), true);

    CLI::App* chambers = add_common(
        app.add_subcommand("chambers", "sample weight vectors and count distinct chambers"), false);
    chambers->add_option("--n", n, "number of points");
    chambers->add_option("--samples", samples, "number of samples");
    chambers->add_option("--max-weight", max_weight, "largest weight drawn");
    chambers->add_option("--threads", threads, "worker threads (0 = all cores)");

    CLI::App* verify = add_common(
        app.add_subcommand("verify", "check the path engine against the six-point closed form"), false);
    verify->add_option("--n", n, "number of points (must be 6)");
    verify->add_option("--samples", samples, "number of samples");
    verify->add_option("--max-weight", max_weight, "largest weight drawn");
    verify->add_option("--threads", threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (gamma->parsed()) run_gamma(flags, subset);
        else if (stability->parsed()) run_stability(flags, subset, kind);
        else if (app.get_subcommand("position")->parsed()) run_position(flags);
        else if (app.get_subcommand("zlocus")->parsed()) run_zlocus(flags);
        else if (app.get_subcommand("poincare")->parsed()) run_poincare(flags);
        else if (app.get_subcommand("ip")->parsed()) run_ip(flags);
        else if (smallres->parsed()) run_smallres(flags, candidate);
        else if (app.get_subcommand("n6-formula")->parsed()) run_n6_formula(flags);
        else if (app.get_subcommand("n6-singular")->parsed()) run_n6_singular(flags);
        else if (chambers->parsed()) return run_chambers(flags, n, samples, max_weight, threads);
        else if (verify->parsed()) return run_verify(flags, n, samples, max_weight, threads);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
