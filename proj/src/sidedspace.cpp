#include "lorenz/sidedspace.hpp"

#include "lorenz/error.hpp"
#include "lorenz/lorenzmap.hpp"

#include <sstream>

namespace lorenz {

std::string side_symbol(Side s)
{
    switch (s) {
    case Side::Minus: return "-";
    case Side::Plus: return "+";
    case Side::Plain: break;
    }
    return "0";
}

Side side_from_symbol(const std::string& s)
{
    if (s == "-") {
        return Side::Minus;
    }
    if (s == "+") {
        return Side::Plus;
    }
    if (s == "0" || s.empty()) {
        return Side::Plain;
    }
    throw LorenzError(ErrorKind::ConfigParse, "bad side tag '" + s + "'");
}

std::string SidedPoint::to_string() const
{
    std::ostringstream out;
    out.precision(12);
    out << value.to_double();
    if (side != Side::Plain) {
        out << side_symbol(side);
    }
    return out.str();
}

int sided_cmp(const SidedPoint& p, const SidedPoint& q)
{
    int s = compare(p.value, q.value);
    if (s != 0) {
        return s;
    }
    int a = static_cast<int>(p.side);
    int b = static_cast<int>(q.side);
    return (a > b) - (a < b);
}

MetricValue metric_d(const LorenzMap& f, const SidedPoint& p, const SidedPoint& q, int depth)
{
    const FieldContext& k = f.context();
    MetricValue out;
    int order = sided_cmp(p, q);
    if (order == 0) {
        out.decided = true;
        out.n.reset();
        out.value = k.zero();
        return out;
    }
    SidedPoint x = order < 0 ? p : q;
    SidedPoint y = order < 0 ? q : p;
    FieldElement gap = abs(p.value - q.value);
    const SidedPoint cm = f.c_minus();
    const SidedPoint cp = f.c_plus();
    for (int j = 0; j <= depth; ++j) {
        if (x <= cm && cp <= y) {
            out.decided = true;
            out.n = j;
            out.value = gap + k.one() / k.from_rational(j + 1);
            return out;
        }
        if (j == depth) {
            break;
        }
        x = eval_sided(f, x);
        y = eval_sided(f, y);
    }
    out.lower = gap;
    out.upper = gap + k.one() / k.from_rational(depth + 2);
    return out;
}

} // namespace lorenz
