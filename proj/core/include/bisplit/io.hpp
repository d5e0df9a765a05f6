#pragma once

#include <variant>

#include <nlohmann/json.hpp>

#include "bisplit/grid.hpp"
#include "bisplit/oracle/ideal.hpp"
#include "bisplit/partition.hpp"
#include "bisplit/resolution.hpp"
#include "bisplit/staircase.hpp"

// JSON shapes:
//   Partition     [5,4,3,3,2,2,1]
//   GridPointSet  {"cells": [[h,v], ...]}
//   AcmConfig     {"alpha": [...], "h_labels": [...], "v_labels": [...]}
//                 labels optional, defaulting to 1..n
//   Arrangement   {"line_h": n, "line_v": n, "alpha": [...]}
//                 optional "ambient": [n_h, n_v] or "h_rulings"/"v_rulings"
//   GeneratorSet  {"gens": [[a,b], ...], "ambient": [n_h, n_v]}
//   BettiTable    [{"i":..,"a":..,"b":..,"mult":..}, ...] sorted by (i,a,b)
//   DimTable      [{"a":..,"b":..,"dim":..}, ...]
namespace bisplit::io {

using json = nlohmann::json;

json to_json(const Partition& p);
json to_json(const GridPointSet& x);
json to_json(const AcmConfig& c);
json to_json(const Arrangement& w);
json to_json(const GeneratorSet& g);
json to_json(const BettiTable& t);
json to_json(const oracle::DimTable& dims);
json to_json(Bidegree d);

/// All parsers throw InvalidInput on malformed documents.
Partition partition_from_json(const json& j);
GridPointSet grid_from_json(const json& j);
AcmConfig acm_from_json(const json& j);
Arrangement arrangement_from_json(const json& j);
GeneratorSet generators_from_json(const json& j);
BettiTable betti_from_json(const json& j);

using Configuration = std::variant<GridPointSet, AcmConfig, Arrangement>;

/// "line_h"/"line_v" select an Arrangement, otherwise "alpha" an AcmConfig
/// and "cells" a GridPointSet.
Configuration parse_configuration(const json& j);

}  // namespace bisplit::io
