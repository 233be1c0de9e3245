#pragma once

#include <string>

#include <json.hpp>

#include "p2quot/p1.hpp"
#include "p2quot/path.hpp"
#include "p2quot/poly.hpp"
#include "p2quot/polarization.hpp"
#include "p2quot/six.hpp"
#include "p2quot/smallres.hpp"
#include "p2quot/stability.hpp"
#include "p2quot/subset.hpp"
#include "p2quot/wall.hpp"

namespace p2quot {

// JSON payload builders shared by the command-line tool and the python
// module, so both surfaces emit identical shapes. Rationals are rendered as
// strings to stay exact; polynomials as coefficient arrays from degree 0 up.

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(Subset s);
std::string rat_string(const Rat& x);
nlohmann::json weights_json(const Polarization& m);

nlohmann::json gamma_report(const Polarization& m, Subset s);
nlohmann::json stratum_report(const StratumState& st);
nlohmann::json position_report(const ConePosition& pos);
nlohmann::json zlocus_report(const Polarization& m, int max_n);
nlohmann::json poly_report(const Poly& p);
nlohmann::json short_subsets_report(const ShortSubsetFamily& fam);
nlohmann::json wall_crossing_report(const WallCrossing& wc);
nlohmann::json crossing_plan_report(const CrossingPlan& plan);
nlohmann::json smallness_report(const SmallnessReport& rep);
nlohmann::json singularity_json(const SingularityReport& rep);

nlohmann::json make_envelope(const std::string& command, nlohmann::json result);
nlohmann::json make_envelope(const std::string& command, const Polarization& input,
                             nlohmann::json result);

}  // namespace p2quot
