#pragma once

#include "ppav/json_io.hpp"
#include "ppav/levels.hpp"
#include "ppav/siegel.hpp"
#include "ppav/strata.hpp"
#include "ppav/symplectic.hpp"

namespace ppav {

// Domain-object wire formats, built on the shared matrix format:
//   involution      {"g": n, "matrix": {...}}
//   Siegel point    {"g": n, "Z": {...}}
//   level structure {"n": n, "g": g, "matrix": {...}}
//   certificate     {"g", "nodes", "edges", "connected"}

json to_json(const InvolutionType& t);
InvolutionType type_from_json(const json& j);

json to_json(const SymplecticInvolution& r);
SymplecticInvolution involution_from_json(const json& j);

json to_json(const SiegelPoint& z);
SiegelPoint siegel_from_json(const json& j);

json to_json(const LevelStructure& l);
LevelStructure level_from_json(const json& j);

json to_json(const StratumParameters& p);
StratumParameters stratum_parameters_from_json(const json& j);

json to_json(const ConnectivityCertificate& c);

}  // namespace ppav
