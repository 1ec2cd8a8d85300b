#pragma once

#include <json.hpp>

#include <string>

#include "twodist/design.hpp"
#include "twodist/gram.hpp"
#include "twodist/realize.hpp"

namespace twodist {

using json = nlohmann::ordered_json;

// Gram matrix schema: {"m": int, "d": int, "rows": [[scalar, ...], ...]}
// with scalars in the text grammar of Quad. The full matrix is stored and
// symmetry is re-verified on load.
json gram_to_json(const GramMatrix& g);
GramMatrix gram_from_json(const json& j);

json certificate_to_json(const Certificate& cert);

// Design schema: {"v": int, "blocks": [[1-based points, ...], ...]}.
json design_to_json(const BlockDesign& d);
BlockDesign design_from_json(const json& j);

// Parameter schema: {"v","b","r","k","lambda","x","y"}.
json params_to_json(const QSDParams& q);
QSDParams params_from_json(const json& j);

json srg_to_json(const SRGParams& s);
json conditions_to_json(const std::vector<ConditionCheck>& checks);
json pipeline_to_json(const PipelineResult& result, const std::string& bounds_version);
json neighbor_parts_to_json(const std::vector<NeighborPart>& parts);

// Vector frame text: {"n": int, "m": int, "columns": [[...], ...]} with
// doubles printed at 17 significant digits so output is byte-stable.
std::string frame_to_json_text(const VectorFrame& f);
VectorFrame frame_from_json(const json& j);

}  // namespace twodist
