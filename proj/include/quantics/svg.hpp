#pragma once

#include <string>
#include <vector>

#include "quantics/point.hpp"

namespace quantics {

/// One labelled dot of a figure panel; `pole` draws the stereographic pole
/// marker instead of a plain dot.
struct FigurePoint {
  Complex position{0.0, 0.0};
  bool at_infinity = false;
  std::string label;
  bool pole = false;
  bool highlight = false;
};

struct FigurePanel {
  std::string title;
  std::vector<FigurePoint> points;
};

/// Equatorial-disk rendering of projected configurations: a fixed 800 x 400
/// canvas with one disk per panel (at most two), points as labelled dots and
/// the pole marked with a cross. Points at infinity are listed in the panel
/// caption rather than drawn.
std::string render_figure(const std::vector<FigurePanel>& panels);

}  // namespace quantics
