#pragma once

#include "idgames/game.hpp"

#include <json.hpp>

#include <string>

namespace idg {

// Two-player text table: columns are x1, rows are x2, each cell "y2,y1".
//
//   x2\x1 (y2,y1) | 0 1 2
//   0 | 0,0 0,0 0,0
//   1 | 0,0 1,1 1,1
//
// The header line is optional when parsing. Rows must be labelled 0,1,...
GameFunction parse_table(const std::string& text, std::uint32_t outputs = 2);
std::string serialize_table(const GameFunction& f);

// Structured document: {"players", "inputs": [...], "outputs",
// "table": [[y_1,...,y_n] per joint input]}. An optional "name" is ignored.
GameFunction game_from_json(const nlohmann::json& doc);
nlohmann::json game_to_json(const GameFunction& f);

GameFunction load_game_file(const std::string& path);

}  // namespace idg
