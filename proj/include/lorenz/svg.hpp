#pragma once

// Number-line diagrams of labeled orbit points as SVG 1.1 (line, circle, text).

#include "lorenz/sidedspace.hpp"

#include <string>
#include <vector>

namespace lorenz {

struct LabeledPoint {
    std::string label;
    FieldElement value;
    bool below = true;     // label placement
    bool critical = false; // drawn in red
};

// Points sorted by exact value; coincident values share one x position.
std::string render_numberline(std::vector<LabeledPoint> points, double width = 800.0);

// x coordinate used for a value in [0,1].
double numberline_x(double value, double width);

} // namespace lorenz
