#include "idgames/game_io.hpp"

#include "idgames/error.hpp"

#include <fstream>
#include <sstream>

namespace idg {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint32_t parse_symbol(const std::string& tok, std::uint32_t bound, const std::string& where) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::kParse, "malformed symbol '" + tok + "' in " + where);
  }
  const auto v = std::stoul(tok);
  if (v >= bound) throw Error(ErrorCode::kRange, "symbol " + tok + " out of range in " + where);
  return static_cast<std::uint32_t>(v);
}

}  // namespace

GameFunction parse_table(const std::string& text, std::uint32_t outputs) {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rows;  // (y1, y2)
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.rfind("x2", 0) == 0) continue;
    const auto bar = line.find('|');
    if (bar == std::string::npos) throw Error(ErrorCode::kParse, "table row without '|': " + line);
    const std::string label = trim(line.substr(0, bar));
    if (label != std::to_string(rows.size())) {
      throw Error(ErrorCode::kParse, "expected row label " + std::to_string(rows.size()) + ", got '" + label + "'");
    }
    std::istringstream cells(line.substr(bar + 1));
    std::string cell;
    auto& row = rows.emplace_back();
    while (cells >> cell) {
      const auto comma = cell.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::kParse, "malformed cell '" + cell + "'");
      const std::string where = "cell '" + cell + "'";
      const auto y2 = parse_symbol(cell.substr(0, comma), outputs, where);
      const auto y1 = parse_symbol(cell.substr(comma + 1), outputs, where);
      row.emplace_back(y1, y2);
    }
    if (row.empty()) throw Error(ErrorCode::kParse, "empty table row " + label);
    if (row.size() != rows.front().size()) throw Error(ErrorCode::kParse, "inconsistent row lengths");
  }
  if (rows.empty()) throw Error(ErrorCode::kParse, "empty table");
  const Scenario s({static_cast<std::uint32_t>(rows.front().size()), static_cast<std::uint32_t>(rows.size())},
                   outputs);
  std::vector<Index> table(s.joint_inputs());
  for (std::uint32_t x2 = 0; x2 < rows.size(); ++x2) {
    for (std::uint32_t x1 = 0; x1 < rows[x2].size(); ++x1) {
      const std::uint32_t x[] = {x1, x2};
      const std::uint32_t y[] = {rows[x2][x1].first, rows[x2][x1].second};
      table[s.encode_input(x)] = s.encode_output(y);
    }
  }
  return GameFunction(s, std::move(table));
}

std::string serialize_table(const GameFunction& f) {
  const auto& s = f.scenario();
  if (s.players() != 2) throw Error(ErrorCode::kDomain, "text tables are two-player only");
  std::ostringstream out;
  out << "x2\\x1 (y2,y1) |";
  for (std::uint32_t x1 = 0; x1 < s.inputs(0); ++x1) out << ' ' << x1;
  out << '\n';
  for (std::uint32_t x2 = 0; x2 < s.inputs(1); ++x2) {
    out << x2 << " |";
    for (std::uint32_t x1 = 0; x1 < s.inputs(0); ++x1) {
      const std::uint32_t x[] = {x1, x2};
      const Index xi = s.encode_input(x);
      out << ' ' << f.output(xi, 1) << ',' << f.output(xi, 0);
    }
    out << '\n';
  }
  return out.str();
}

GameFunction game_from_json(const nlohmann::json& doc) {
  try {
    const auto players = doc.at("players").get<std::size_t>();
    const auto inputs = doc.at("inputs").get<std::vector<std::uint32_t>>();
    const auto outputs = doc.at("outputs").get<std::uint32_t>();
    if (inputs.size() != players) throw Error(ErrorCode::kParse, "'inputs' length differs from 'players'");
    const Scenario s(inputs, outputs);
    const auto& rows = doc.at("table");
    if (!rows.is_array() || rows.size() != s.joint_inputs()) {
      throw Error(ErrorCode::kParse, "'table' must have one entry per joint input");
    }
    std::vector<Index> table;
    table.reserve(rows.size());
    for (const auto& row : rows) {
      const auto y = row.get<std::vector<std::uint32_t>>();
      table.push_back(s.encode_output(y));
    }
    return GameFunction(s, std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("game document: ") + e.what());
  }
}

nlohmann::json game_to_json(const GameFunction& f) {
  const auto& s = f.scenario();
  nlohmann::json table = nlohmann::json::array();
  for (Index x = 0; x < s.joint_inputs(); ++x) table.push_back(s.decode_output(f(x)));
  return {{"players", s.players()}, {"inputs", s.input_sizes()}, {"outputs", s.outputs()}, {"table", table}};
}

GameFunction load_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open game file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return game_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParse, path + ": " + e.what());
    }
  }
  return parse_table(text);
}

}  // namespace idg
