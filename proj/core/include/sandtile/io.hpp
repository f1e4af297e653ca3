#pragma once

#include <json.hpp>

#include "sandtile/chambers.hpp"
#include "sandtile/graph.hpp"
#include "sandtile/lower.hpp"
#include "sandtile/tiling.hpp"

namespace sandtile {

using json = nlohmann::ordered_json;

// {"r": int, "n": int, "M": [[int,...],...]} -- only M is stored.
StandardRepMatrix matrix_from_json(const json& j);
json matrix_to_json(const StandardRepMatrix& d);

// {"vertices": int, "edges": [[tail,head],...], "tree": [edgeIdx,...]?}
Graph graph_from_json(const json& j);
std::optional<std::vector<int>> tree_from_json(const json& j);

// Comma-separated exact rationals, e.g. "1,1/2,-3".
RatVec parse_rational_vector(const std::string& s);

json basis_to_json(const Basis& b);
json int_vec_to_json(const IntVec& v);

json analyze_report(const StandardRepMatrix& d);
json fiber_report(const Multijection& f);
json lower_report(const StandardRepMatrix& d, const LowerTile& tile,
                  const ShiftingVector& w);
json chambers_report(const StandardRepMatrix& d, const ShiftingVector& w,
                     const ShiftingVector& wp);
json corners_report(const StandardRepMatrix& d, const ShiftingVector& w);

}  // namespace sandtile
