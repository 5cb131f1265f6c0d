#pragma once

#include <string>

#include <json.hpp>

#include "lrc/construction.hpp"

namespace lrc {

// Schema (keys sorted on output):
//   field      {p, m, poly}            poly: m+1 coefficients, constant term first
//   n, alpha, K
//   generator  K rows of n*alpha entries
//   locality   {r, delta, supports, kind, exact} or null
//   metadata   {family, params, seed, attempts, provider, claimed_dmin,
//               claim_exact, regen, local_regen}
// A regenerating structure stores {params, provider, projections, edge_map};
// its code is the whole code (regen) or the code punctured to the support.
nlohmann::json to_json(const Construction& c);
Construction from_json(const nlohmann::json& j);

std::string dump_descriptor(const Construction& c);
Construction parse_descriptor(const std::string& text);

Construction load_descriptor(const std::string& path);
void save_descriptor(const Construction& c, const std::string& path);

}  // namespace lrc
