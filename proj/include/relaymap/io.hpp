#pragma once

#include <string>

#include <json.hpp>

#include "relaymap/constraints.hpp"
#include "relaymap/fades.hpp"
#include "relaymap/latin.hpp"
#include "relaymap/mapbook.hpp"

namespace relaymap {

using json = nlohmann::ordered_json;

json grid_to_json(const GridMap& g);
GridMap grid_from_json(const json& j);

json fade_to_json(const SingularFade& f);
SingularFade fade_from_json(const PskConfig& cfg, const json& j);

json constraints_to_json(const ConstraintSet& cs);
ConstraintSet constraints_from_json(const PskConfig& cfg, const json& j);

json clustering_to_json(const Clustering& c);
Clustering clustering_from_json(const json& j);

// The book serializes as seeds + provenance records; clustering representatives
// are replayed from those on load rather than stored twice.
json mapbook_to_json(const MapBook& book);
MapBook mapbook_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace relaymap
