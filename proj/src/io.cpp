#include "lorenz/io.hpp"

#include "lorenz/error.hpp"

#include <cctype>
#include <cmath>

namespace lorenz {

namespace {

Rational rational_from_json(const Json& v)
{
    if (v.is_number_integer()) {
        return Rational(v.get<long>());
    }
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_float()) {
        return parse_rational(v.dump());
    }
    throw LorenzError(ErrorKind::ConfigParse, "expected a rational, got " + v.dump());
}

const Json& require(const Json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key)) {
        throw LorenzError(ErrorKind::ConfigParse, std::string("missing key '") + key + "'");
    }
    return obj.at(key);
}

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(' ');
    std::size_t b = s.find_last_not_of(' ');
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

} // namespace

FieldContext field_from_json(const Json& field, unsigned float_bits)
{
    if (field.is_null() || (field.is_string() && field.get<std::string>() == "rationals")) {
        return FieldContext::rationals(float_bits);
    }
    const Json& poly = require(field, "poly");
    const Json& iv = require(field, "interval");
    if (!poly.is_array() || !iv.is_array() || iv.size() != 2) {
        throw LorenzError(ErrorKind::ConfigParse, "field needs a poly array and a two-element interval");
    }
    std::vector<Integer> coeffs;
    for (const auto& c : poly) {
        Rational q = rational_from_json(c);
        if (q.get_den() != 1) {
            throw LorenzError(ErrorKind::ConfigParse, "defining polynomial needs integer coefficients");
        }
        coeffs.push_back(q.get_num());
    }
    return FieldContext::create(coeffs, rational_from_json(iv[0]), rational_from_json(iv[1]), float_bits);
}

FieldElement element_from_json(const FieldContext& k, const Json& value)
{
    if (value.is_string()) {
        return k.parse(value.get<std::string>());
    }
    if (value.is_number()) {
        return k.from_rational(rational_from_json(value));
    }
    if (value.is_array()) {
        std::vector<Rational> coeffs;
        for (const auto& c : value) {
            coeffs.push_back(rational_from_json(c));
        }
        return k.from_coeffs(coeffs);
    }
    throw LorenzError(ErrorKind::ConfigParse, "cannot read field element from " + value.dump());
}

LorenzMap map_from_json(const Json& config)
{
    try {
        if (!config.is_object()) {
            throw LorenzError(ErrorKind::ConfigParse, "map config must be an object");
        }
        unsigned bits = config.value("float_mode", 0U);
        FieldContext k = field_from_json(config.value("field", Json()), bits);
        std::string family = require(config, "family").get<std::string>();
        if (family == "mod_one") {
            return LorenzMap::mod_one(element_from_json(k, require(config, "beta")),
                                      element_from_json(k, require(config, "alpha")));
        }
        if (family == "two_slope") {
            return LorenzMap::two_slope(element_from_json(k, require(config, "a")),
                                        element_from_json(k, require(config, "b")),
                                        element_from_json(k, require(config, "c")),
                                        config.value("require_distinct", false));
        }
        throw LorenzError(ErrorKind::ConfigParse, "unknown family '" + family + "'");
    } catch (const Json::exception& e) {
        throw LorenzError(ErrorKind::ConfigParse, e.what());
    }
}

double rounded(double x) { return std::round(x * 1e12) / 1e12; }

Json element_to_json(const FieldElement& x)
{
    Json out = Json::array();
    for (const auto& q : x.coeffs()) {
        out.push_back(to_string(q));
    }
    return out;
}

Json point_to_json(const SidedPoint& p)
{
    return Json{{"value", element_to_json(p.value)}, {"side", side_symbol(p.side)}, {"approx", rounded(p.value.to_double())}};
}

SidedPoint resolve_point(const LorenzMap& f, const std::string& ref_in, const std::vector<SidedPoint>* cycle)
{
    const std::string ref = trim(ref_in);
    if (ref == "0" || ref == "0+") {
        return f.zero();
    }
    if (ref == "1" || ref == "1-") {
        return f.one();
    }
    if (ref == "c") {
        return SidedPoint::plain(f.c());
    }
    if (ref == "c-") {
        return f.c_minus();
    }
    if (ref == "c+") {
        return f.c_plus();
    }
    if (ref == "f(0)") {
        return eval_sided(f, f.zero());
    }
    if (ref == "f(1)") {
        return eval_sided(f, f.one());
    }
    if (ref.rfind("expr:", 0) == 0) {
        return SidedPoint::plain(f.context().parse(ref.substr(5)));
    }
    if (ref.rfind("z(", 0) == 0 && ref.back() == ')') {
        if (cycle == nullptr) {
            throw LorenzError(ErrorKind::ConfigParse, "z(j) needs a cycle");
        }
        std::size_t j = std::stoul(ref.substr(2, ref.size() - 3));
        if (j >= cycle->size()) {
            throw LorenzError(ErrorKind::ConfigParse, "cycle index out of range in " + ref);
        }
        return (*cycle)[j];
    }
    if (ref.rfind("orb(", 0) == 0 && ref.back() == ')') {
        std::size_t comma = ref.rfind(',');
        if (comma == std::string::npos) {
            throw LorenzError(ErrorKind::ConfigParse, "orb needs a step count: " + ref);
        }
        SidedPoint start = resolve_point(f, ref.substr(4, comma - 4), cycle);
        int n = std::stoi(ref.substr(comma + 1, ref.size() - comma - 2));
        return iterate(f, start, n);
    }
    throw LorenzError(ErrorKind::ConfigParse, "unknown point reference '" + ref + "'");
}

} // namespace lorenz
