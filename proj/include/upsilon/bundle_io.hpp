#pragma once

#include <string>

#include <json.hpp>

#include "upsilon/enemy.hpp"

namespace upsilon {

/// Sidecar describing the part structure and block certificates:
/// {"k", "t", "n_target", "delta_target", "parts": [[...]], "certificates": [...]}
nlohmann::json bundle_sidecar(const EnemyGraphBundle& bundle);

/// Writes <dir>/graph.txt (edge list) and <dir>/bundle.json, creating dir.
void save_bundle(const std::string& dir, const EnemyGraphBundle& bundle);
/// Reads a bundle back and checks that its parts match k and t.
EnemyGraphBundle load_bundle(const std::string& dir);

} // namespace upsilon
