#pragma once

// JSON and CSV forms of states, matrices and reports. Every rational is a
// {"num": "...", "den": "..."} pair of decimal strings so that values of any
// size survive a round trip. Indices are written exactly as stored (1-based
// i and j).

#include <filesystem>
#include <string>

#include <json.hpp>

#include "yperiod/gamma.hpp"
#include "yperiod/matrix.hpp"
#include "yperiod/rational.hpp"
#include "yperiod/report.hpp"
#include "yperiod/y_system.hpp"
#include "yperiod/z_system.hpp"

namespace yperiod {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
// Throws std::invalid_argument on malformed input, ZeroDenominator on den 0.
Rational rational_from_json(const Json& j);

// {"system":"y","r","k","mode":"truncated"|"infinite-window","values":[{n,i,j,num,den}]}
Json to_json(const YState& state);
YState y_state_from_json(const Json& j);

// {"system":"z","r","k","provenance":"from-y"|"from-gamma","values":[...]}
Json to_json(const ZState& state);
ZState z_state_from_json(const Json& j);

// {"system":"gamma","r","k","x":[{j,n,i,num,den}],"a":[...],"free_choices":[{kind,j,n,i,num,den}]}
Json to_json(const GammaState& state);
GammaState gamma_state_from_json(const Json& j);

// {"size","index_base":1,"rows":[[{num,den},...],...]}
Json to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const Json& j);

Json to_json(const Report& report);
Report report_from_json(const Json& j);

// check,shape,checked,passed,failed; one row per counter.
std::string report_to_csv(const Report& report);

// Both throw IoFailure.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

}  // namespace yperiod
