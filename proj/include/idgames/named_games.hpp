#pragma once

#include "idgames/box.hpp"
#include "idgames/game.hpp"

#include <string>
#include <vector>

namespace idg::games {

// The three-input game with the largest quantum upper bound among the
// nontrivial (2,3,2) classes.
GameFunction highest_sdp_3();
// A player-exchange symmetric three-input game.
GameFunction symmetric_3();
GameFunction partial_entanglement();
GameFunction dimension_witness();
// 2*y2 + y1 = x1 + x2 mod 4.
GameFunction addition();
GameFunction facet();
GameFunction symmetric_5();
// y1 = (!x1 & !x2) ^ !x3, y2 = !x3, y3 = 0.
GameFunction tripartite();
// y1 = !x3, y2 = !x3, y3 = (!x3 & !x1) | (x3 & !x2).
GameFunction class25();

// An optimal no-signaling box for class25(), not decomposable. Rows are
// x3x2x1, columns y3y2y1, every nonzero entry 1/3.
ExactBox class25_box();

struct NamedGame {
  std::string name;
  GameFunction (*make)();
};

const std::vector<NamedGame>& all();
GameFunction by_name(const std::string& name);

}  // namespace idg::games
