#include "lorenz/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace lorenz {

namespace {

constexpr double kMargin = 40.0;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out.push_back(ch);
        }
    }
    return out;
}

} // namespace

double numberline_x(double value, double width) { return kMargin + value * (width - 2 * kMargin); }

std::string render_numberline(std::vector<LabeledPoint> points, double width)
{
    std::stable_sort(points.begin(), points.end(),
                     [](const LabeledPoint& a, const LabeledPoint& b) { return a.value < b.value; });
    const double height = 160.0;
    const double y = height / 2;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\">\n";
    svg << "  <line x1=\"" << fmt(kMargin) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(width - kMargin)
        << "\" y2=\"" << fmt(y) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (double end : {0.0, 1.0}) {
        svg << "  <text x=\"" << fmt(numberline_x(end, width)) << "\" y=\"" << fmt(y + 40) << "\" font-size=\"12\" "
            << "text-anchor=\"middle\">" << (end == 0.0 ? "0" : "1") << "</text>\n";
    }
    // Stack labels of coincident points so they do not overlap.
    std::map<std::pair<std::size_t, bool>, int> stack;
    std::size_t group = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0 && !(points[i - 1].value == points[i].value)) {
            ++group;
        }
        const LabeledPoint& p = points[i];
        double x = numberline_x(p.value.to_double(), width);
        svg << "  <circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << (p.critical ? "5" : "3.5")
            << "\" fill=\"" << (p.critical ? "red" : "black") << "\"/>\n";
        if (p.label.empty()) {
            continue;
        }
        int level = stack[{group, p.below}]++;
        double ty = p.below ? y + 18 + 14 * level : y - 10 - 14 * level;
        svg << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(ty) << "\" font-size=\"12\" text-anchor=\"middle\" fill=\""
            << (p.below ? "blue" : "darkorange") << "\">" << escape(p.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace lorenz
