#include "idgames/named_games.hpp"

#include "idgames/error.hpp"
#include "idgames/game_io.hpp"

#include <string>

namespace idg::games {

GameFunction highest_sdp_3() {
  return parse_table(R"(x2\x1 (y2,y1) | 0 1 2
0 | 0,0 0,0 0,0
1 | 0,0 1,1 1,1
2 | 0,1 0,1 1,1
)");
}

GameFunction symmetric_3() {
  return parse_table(R"(x2\x1 (y2,y1) | 0 1 2
0 | 0,0 0,0 1,0
1 | 0,0 1,1 1,1
2 | 0,1 1,1 0,0
)");
}

GameFunction partial_entanglement() {
  return parse_table(R"(x2\x1 (y2,y1) | 0 1 2
0 | 0,1 1,1 1,0
1 | 0,0 0,1 1,1
2 | 0,1 1,0 0,1
)");
}

GameFunction dimension_witness() {
  return parse_table(R"(x2\x1 (y2,y1) | 0 1 2
0 | 0,1 1,1 1,0
1 | 0,1 1,1 1,1
2 | 0,1 1,0 1,0
)");
}

GameFunction addition() {
  return parse_table(R"(x2\x1 (y2,y1) | 0 1 2 3
0 | 0,0 0,1 1,0 1,1
1 | 0,1 1,0 1,1 0,0
2 | 1,0 1,1 0,0 0,1
3 | 1,1 0,0 0,1 1,0
)");
}

GameFunction facet() {
  return parse_table(R"(x2\x1 (y2,y1) | 0 1 2 3
0 | 0,1 1,0 0,0 1,0
1 | 0,1 1,1 0,1 1,1
2 | 0,0 1,1 0,0 1,0
3 | 0,0 1,0 1,0 0,0
)");
}

GameFunction symmetric_5() {
  return parse_table(R"(x2\x1 (y2,y1) | 0 1 2 3 4
0 | 1,1 1,0 0,0 0,0 1,1
1 | 0,1 0,0 0,1 1,1 1,1
2 | 0,0 1,0 0,0 1,1 0,1
3 | 0,0 1,1 1,1 0,0 0,0
4 | 1,1 1,1 1,0 0,0 0,0
)");
}

GameFunction tripartite() {
  return GameFunction::from_rule(Scenario::uniform(3, 2, 2), [](const std::vector<std::uint32_t>& x) {
    const std::uint32_t n1 = 1 - x[0], n2 = 1 - x[1], n3 = 1 - x[2];
    return std::vector<std::uint32_t>{(n1 & n2) ^ n3, n3, 0};
  });
}

GameFunction class25() {
  return GameFunction::from_rule(Scenario::uniform(3, 2, 2), [](const std::vector<std::uint32_t>& x) {
    const std::uint32_t n1 = 1 - x[0], n2 = 1 - x[1], n3 = 1 - x[2];
    return std::vector<std::uint32_t>{n3, n3, (n3 & n1) | (x[2] & n2)};
  });
}

ExactBox class25_box() {
  // Support of each row, as bit strings y3y2y1.
  static const char* const rows[8][3] = {
      {"000", "010", "111"}, {"000", "011", "110"}, {"000", "010", "111"}, {"000", "011", "110"},
      {"010", "011", "100"}, {"010", "011", "100"}, {"000", "011", "110"}, {"000", "011", "110"},
  };
  const Scenario s = Scenario::uniform(3, 2, 2);
  ExactBox box(s);
  for (Index x = 0; x < 8; ++x) {
    for (const char* y : rows[x]) box.at(x, std::stoul(y, nullptr, 2)) = Rational(1, 3);
  }
  return box;
}

const std::vector<NamedGame>& all() {
  static const std::vector<NamedGame> registry = {
      {"highest-sdp-3", &highest_sdp_3},
      {"symmetric-3", &symmetric_3},
      {"partial-entanglement", &partial_entanglement},
      {"dimension-witness", &dimension_witness},
      {"addition", &addition},
      {"facet", &facet},
      {"symmetric-5", &symmetric_5},
      {"tripartite", &tripartite},
      {"class25", &class25},
  };
  return registry;
}

GameFunction by_name(const std::string& name) {
  for (const auto& g : all()) {
    if (g.name == name) return g.make();
  }
  throw Error(ErrorCode::kRange, "unknown game '" + name + "'");
}

}  // namespace idg::games
