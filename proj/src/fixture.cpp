#include "lorenz/fixture.hpp"

#include "lorenz/cycles.hpp"
#include "lorenz/error.hpp"
#include "lorenz/kneading.hpp"
#include "lorenz/markov.hpp"
#include "lorenz/renorm.hpp"
#include "lorenz/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace lorenz {

namespace {

class Context {
public:
    Context(const LorenzMap& f, const Json& fixture) : f_(f), labels_(fixture.value("labels", Json::object()))
    {
        if (fixture.contains("cycle_period")) {
            cycle_period_ = fixture.at("cycle_period").get<int>();
        }
    }

    const LorenzMap& map() const { return f_; }

    const PeriodicOrbit& cycle(int period)
    {
        auto it = reports_.find(period);
        if (it == reports_.end()) {
            it = reports_.emplace(period, periodic_orbits(f_, period)).first;
        }
        const PeriodicOrbit* pick = nullptr;
        for (const PeriodicOrbit* o : it->second.with_period(period)) {
            if (o->contains_sided) {
                continue;
            }
            if (pick == nullptr || (o->nk && !pick->nk)) {
                pick = o;
            }
        }
        if (pick == nullptr) {
            throw LorenzError(ErrorKind::OutOfBound, "no plain orbit of period " + std::to_string(period));
        }
        return *pick;
    }

    SidedPoint point(const std::string& ref)
    {
        if (labels_.contains(ref)) {
            return point(labels_.at(ref).get<std::string>());
        }
        const std::vector<SidedPoint>* pts = nullptr;
        if (cycle_period_ && ref.find("z(") != std::string::npos) {
            pts = &cycle(*cycle_period_).points;
        }
        return resolve_point(f_, ref, pts);
    }

    std::vector<FieldElement> cycle_values(int period)
    {
        std::vector<FieldElement> out;
        for (const auto& p : cycle(period).points) {
            out.push_back(p.value);
        }
        return out;
    }

private:
    const LorenzMap& f_;
    Json labels_;
    std::optional<int> cycle_period_;
    std::map<int, PeriodicOrbitReport> reports_;
};

struct Result {
    bool passed = false;
    Json actual;
    std::string note;
};

using Handler = std::function<Result(Context&, const Json&)>;

struct CheckSpec {
    std::vector<std::string> required;
    Handler run;
};

Result equal_json(Json actual, const Json& expected)
{
    Result r;
    r.passed = actual == expected;
    r.actual = std::move(actual);
    return r;
}

Json nullable(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json pairs_json(const std::vector<std::pair<int, int>>& v)
{
    Json out = Json::array();
    for (const auto& [l, r] : v) {
        out.push_back({l, r});
    }
    return out;
}

std::vector<FieldElement> random_points(const LorenzMap& f, int count, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(1, (1L << 20) - 1);
    std::vector<FieldElement> out;
    for (int i = 0; i < count; ++i) {
        out.push_back(f.context().from_rational(Rational(pick(rng), 1L << 20)));
    }
    return out;
}

int cmp_points(const SidedPoint& a, const SidedPoint& b, bool sided)
{
    return sided ? sided_cmp(a, b) : compare(a.value, b.value);
}

const std::map<std::string, CheckSpec>& checks()
{
    static const std::map<std::string, CheckSpec> table{
        {"root",
         {{"tol"},
          [](Context& ctx, const Json& a) {
              RationalInterval iv = ctx.map().context().root_interval(80);
              double root = to_double((iv.lo + iv.hi) / 2);
              Result r;
              r.actual = rounded(root);
              r.passed = std::abs(root - a.at("expect").get<double>()) <= a.at("tol").get<double>();
              return r;
          }}},
        {"plain_periodic_count",
         {{"n"},
          [](Context& ctx, const Json& a) {
              return equal_json(plain_periodic_points(ctx.map(), a.at("n").get<int>()).size(), a.at("expect"));
          }}},
        {"kappa",
         {{"n_max"},
          [](Context& ctx, const Json& a) {
              return equal_json(nullable(periodic_orbits(ctx.map(), a.at("n_max").get<int>()).kappa), a.at("expect"));
          }}},
        {"critical_period",
         {{"point", "horizon"},
          [](Context& ctx, const Json& a) {
              Orbit o = orbit(ctx.map(), ctx.point(a.at("point").get<std::string>()), a.at("horizon").get<int>());
              std::optional<int> period;
              if (o.recurrent() && *o.preperiod == 0) {
                  period = o.period;
              }
              return equal_json(nullable(period), a.at("expect"));
          }}},
        {"kneading",
         {{"horizon"},
          [](Context& ctx, const Json& a) {
              KneadingInvariant k = kneading_invariant(ctx.map(), a.at("horizon").get<int>());
              Result r;
              r.actual = {{"plus", k.plus.to_string()}, {"minus", k.minus.to_string()}};
              const Json& e = a.at("expect");
              r.passed = KneadingWord::parse(e.at("plus").get<std::string>()) == k.plus &&
                         KneadingWord::parse(e.at("minus").get<std::string>()) == k.minus;
              return r;
          }}},
        {"admissibility",
         {{"horizon"},
          [](Context& ctx, const Json& a) {
              KneadingInvariant k = kneading_invariant(ctx.map(), a.at("horizon").get<int>());
              return equal_json(to_string(admissibility_check(k.plus, k.minus).verdict), a.at("expect"));
          }}},
        {"laps_count",
         {{"n"},
          [](Context& ctx, const Json& a) {
              return equal_json(laps(ctx.map(), a.at("n").get<int>()).size(), a.at("expect"));
          }}},
        {"ordering",
         {{},
          [](Context& ctx, const Json& a) {
              const std::string expect = a.at("expect").get<std::string>();
              std::vector<std::pair<std::string, SidedPoint>> labeled;
              std::string cur;
              for (char ch : expect + "<") {
                  if (ch == '<' || ch == '=') {
                      labeled.emplace_back(cur, ctx.point(cur));
                      cur.clear();
                  } else {
                      cur.push_back(ch);
                  }
              }
              return equal_json(ordering_string(labeled), a.at("expect"));
          }}},
        {"compare",
         {{"a", "b"},
          [](Context& ctx, const Json& a) {
              int s = cmp_points(ctx.point(a.at("a").get<std::string>()), ctx.point(a.at("b").get<std::string>()),
                                 a.value("sided", false));
              return equal_json(s < 0 ? "<" : (s == 0 ? "=" : ">"), a.at("expect"));
          }}},
        {"nk_cycle",
         {{"period"},
          [](Context& ctx, const Json& a) {
              const PeriodicOrbit& o = ctx.cycle(a.at("period").get<int>());
              Json actual = nullptr;
              if (o.nk) {
                  actual = {{"n", o.nk->n}, {"k", o.nk->k}, {"primary", o.nk->primary}, {"strict", o.nk->strict}};
              }
              return equal_json(actual, a.at("expect"));
          }}},
        {"cycle_point",
         {{"period", "index", "tol"},
          [](Context& ctx, const Json& a) {
              double x = ctx.cycle(a.at("period").get<int>()).z(a.at("index").get<int>()).to_double();
              Result r;
              r.actual = rounded(x);
              r.passed = std::abs(x - a.at("expect").get<double>()) <= a.at("tol").get<double>();
              return r;
          }}},
        {"renorm_valid",
         {{"l", "r"},
          [](Context& ctx, const Json& a) {
              RenormCheck c = validate_renorm(ctx.map(), a.at("l").get<int>(), a.at("r").get<int>());
              Result r = equal_json(c.valid, a.at("expect"));
              r.note = c.reason;
              return r;
          }}},
        {"renorm_search",
         {{"l_max", "r_max"},
          [](Context& ctx, const Json& a) {
              RenormSearch s = search_renorms(ctx.map(), a.at("l_max").get<int>(), a.at("r_max").get<int>());
              std::vector<std::pair<int, int>> v;
              for (const auto& g : s.valid) {
                  v.emplace_back(g.l, g.r);
              }
              return equal_json(pairs_json(v), a.at("expect"));
          }}},
        {"renorm_minimal",
         {{"l_max", "r_max"},
          [](Context& ctx, const Json& a) {
              RenormSearch s = search_renorms(ctx.map(), a.at("l_max").get<int>(), a.at("r_max").get<int>());
              return equal_json(pairs_json(s.pareto_minimal), a.at("expect"));
          }}},
        {"renorm_interval",
         {{"l", "r", "u", "v"},
          [](Context& ctx, const Json& a) {
              RenormCheck c = validate_renorm(ctx.map(), a.at("l").get<int>(), a.at("r").get<int>());
              bool same = c.valid && c.g.u == ctx.point(a.at("u").get<std::string>()).value &&
                          c.g.v == ctx.point(a.at("v").get<std::string>()).value;
              return equal_json(same, a.at("expect"));
          }}},
        {"renorm_from_cycle",
         {{"period", "depth"},
          [](Context& ctx, const Json& a) {
              InvariantSetRenorm res =
                  renorm_from_invariant_set(ctx.map(), ctx.cycle_values(a.at("period").get<int>()), a.at("depth").get<int>());
              Json actual = nullptr;
              if (res.l && res.r && res.periodic_ok && res.g && res.g->valid) {
                  actual = {*res.l, *res.r};
              }
              return equal_json(actual, a.at("expect"));
          }}},
        {"invariance_witness",
         {{"period", "depth"},
          [](Context& ctx, const Json& a) {
              InvariantSetRenorm res =
                  renorm_from_invariant_set(ctx.map(), ctx.cycle_values(a.at("period").get<int>()), a.at("depth").get<int>());
              Result r;
              const Json& e = a.at("expect");
              if (!res.witness) {
                  r.actual = nullptr;
                  r.passed = e.is_null();
                  return r;
              }
              r.actual = {{"point", res.witness->to_string()}, {"depth", res.witness_depth}};
              r.passed = !e.is_null() && *res.witness == ctx.point(e.at("point").get<std::string>()) &&
                         res.witness_depth == e.at("depth").get<int>();
              return r;
          }}},
        {"lem_inv",
         {{"l", "r", "depth"},
          [](Context& ctx, const Json& a) {
              RenormCheck c = validate_renorm(ctx.map(), a.at("l").get<int>(), a.at("r").get<int>());
              if (!c.valid) {
                  return equal_json("invalid:" + c.reason, a.at("expect"));
              }
              return equal_json(invariant_set_analysis(ctx.map(), c.g, a.at("depth").get<int>()).lem_inv, a.at("expect"));
          }}},
        {"f_g_samples",
         {{"l", "r", "samples", "depth", "seed"},
          [](Context& ctx, const Json& a) {
              RenormCheck c = validate_renorm(ctx.map(), a.at("l").get<int>(), a.at("r").get<int>());
              if (!c.valid) {
                  return equal_json("invalid:" + c.reason, a.at("expect"));
              }
              auto pts = random_points(ctx.map(), a.at("samples").get<int>(), a.at("seed").get<unsigned>());
              InvariantAnalysis an = invariant_set_analysis(ctx.map(), c.g, a.at("depth").get<int>(), pts);
              return equal_json(an.in_f, a.at("expect"));
          }}},
        {"matching",
         {{"eta_max"},
          [](Context& ctx, const Json& a) {
              return equal_json(nullable(matching(ctx.map(), a.at("eta_max").get<int>()).eta), a.at("expect"));
          }}},
        {"markov_verdict",
         {{"bound"},
          [](Context& ctx, const Json& a) {
              MarkovSystem m = build_markov(ctx.map(), a.at("bound").get<int>());
              return equal_json(dynamics_verdict(m).verdict, a.at("expect"));
          }}},
        {"fixed_point_lemma",
         {{"bound"},
          [](Context& ctx, const Json& a) {
              FixedPointLemma lem = fixed_point_lemma_check(ctx.map(), a.at("bound").get<int>());
              Result r = equal_json(lem.m, a.at("expect"));
              r.passed = r.passed && lem.found_fixed_point;
              return r;
          }}},
        {"preimage_contains",
         {{"period", "depth", "point"},
          [](Context& ctx, const Json& a) {
              std::vector<SidedPoint> targets = ctx.cycle(a.at("period").get<int>()).points;
              PreimageTree t = preimages(ctx.map(), targets, a.at("depth").get<int>());
              return equal_json(t.contains_value(ctx.point(a.at("point").get<std::string>()).value), a.at("expect"));
          }}},
        {"mesh_decreasing",
         {{"period", "from", "to"},
          [](Context& ctx, const Json& a) {
              std::vector<SidedPoint> targets = ctx.cycle(a.at("period").get<int>()).points;
              Json meshes = Json::array();
              bool decreasing = true;
              std::optional<FieldElement> prev;
              for (int d = a.at("from").get<int>(); d <= a.at("to").get<int>(); ++d) {
                  FieldElement m = preimages(ctx.map(), targets, d).mesh;
                  meshes.push_back(rounded(m.to_double()));
                  decreasing = decreasing && (!prev || m < *prev);
                  prev = m;
              }
              Result r = equal_json(decreasing, a.at("expect"));
              r.note = meshes.dump();
              return r;
          }}},
        {"rotation",
         {{"samples", "n_iter", "seed", "value"},
          [](Context& ctx, const Json& a) {
              const int n = a.at("n_iter").get<int>();
              std::vector<SidedPoint> pts;
              for (auto& x : random_points(ctx.map(), a.at("samples").get<int>(), a.at("seed").get<unsigned>())) {
                  pts.push_back(SidedPoint::plain(std::move(x)));
              }
              RotationReport rep = rotation_analysis(ctx.map(), pts, n);
              double target = to_double(parse_rational(a.at("value").get<std::string>()));
              bool ok = std::all_of(rep.samples.begin(), rep.samples.end(),
                                    [&](const RotationSample& s) { return std::abs(s.estimate - target) <= 2.0 / n; });
              Result r = equal_json(ok, a.at("expect"));
              r.note = "estimates in [" + std::to_string(rep.lo) + ", " + std::to_string(rep.hi) + "]";
              return r;
          }}},
        {"periodic_point_between",
         {{"n", "lo", "hi", "exclude_lo", "exclude_hi"},
          [](Context& ctx, const Json& a) {
              FieldElement lo = ctx.point(a.at("lo").get<std::string>()).value;
              FieldElement hi = ctx.point(a.at("hi").get<std::string>()).value;
              FieldElement xlo = ctx.point(a.at("exclude_lo").get<std::string>()).value;
              FieldElement xhi = ctx.point(a.at("exclude_hi").get<std::string>()).value;
              bool found = false;
              for (const auto& x : plain_periodic_points(ctx.map(), a.at("n").get<int>())) {
                  found = found || (lo <= x && x <= hi && (x < xlo || x > xhi));
              }
              return equal_json(found, a.at("expect"));
          }}},
    };
    return table;
}

} // namespace

bool FixtureReport::passed() const
{
    return std::all_of(outcomes.begin(), outcomes.end(), [](const AssertionOutcome& o) { return o.passed; });
}

Json FixtureReport::to_json() const
{
    Json list = Json::array();
    for (const auto& o : outcomes) {
        Json item{{"check", o.check}, {"passed", o.passed}, {"expected", o.expected}, {"actual", o.actual}};
        if (!o.note.empty()) {
            item["note"] = o.note;
        }
        list.push_back(std::move(item));
    }
    return Json{{"schema", kSchema}, {"id", id}, {"passed", passed()}, {"assertions", std::move(list)}};
}

Json load_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw LorenzError(ErrorKind::ConfigParse, "cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw LorenzError(ErrorKind::ConfigParse, path.string() + ": " + e.what());
    }
}

Json load_fixture(const std::filesystem::path& dir, const std::string& id)
{
    const auto& ids = fixture_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw LorenzError(ErrorKind::UnknownFixture, "unknown fixture '" + id + "'");
    }
    return load_json_file(dir / (id + ".json"));
}

std::string ordering_string(const std::vector<std::pair<std::string, SidedPoint>>& labeled)
{
    std::vector<std::size_t> idx(labeled.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return labeled[a].second.value < labeled[b].second.value;
    });
    std::string out;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0) {
            out += labeled[idx[i - 1]].second.value == labeled[idx[i]].second.value ? "=" : "<";
        }
        out += labeled[idx[i]].first;
    }
    return out;
}

FixtureReport run_fixture(const Json& fixture)
{
    if (!fixture.is_object() || !fixture.contains("map") || !fixture.contains("assertions") ||
        !fixture.at("assertions").is_array()) {
        throw LorenzError(ErrorKind::ConfigParse, "fixture needs 'map' and an 'assertions' array");
    }
    const auto& table = checks();
    for (const auto& a : fixture.at("assertions")) {
        std::string name = a.value("check", "");
        auto it = table.find(name);
        if (it == table.end()) {
            throw LorenzError(ErrorKind::ConfigParse, "unknown check '" + name + "'");
        }
        if (!a.contains("expect")) {
            throw LorenzError(ErrorKind::ConfigParse, "check '" + name + "' has no expected value");
        }
        for (const auto& key : it->second.required) {
            if (!a.contains(key)) {
                throw LorenzError(ErrorKind::ConfigParse, "check '" + name + "' needs '" + key + "'");
            }
        }
    }
    LorenzMap f = map_from_json(fixture.at("map"));
    Context ctx(f, fixture);
    FixtureReport rep;
    rep.id = fixture.value("id", "");
    for (const auto& a : fixture.at("assertions")) {
        AssertionOutcome o;
        o.check = a.at("check").get<std::string>();
        o.expected = a.at("expect");
        try {
            Result r = table.at(o.check).run(ctx, a);
            o.passed = r.passed;
            o.actual = std::move(r.actual);
            o.note = std::move(r.note);
        } catch (const std::exception& e) {
            o.passed = false;
            o.note = std::string("error: ") + e.what();
        }
        rep.outcomes.push_back(std::move(o));
    }
    return rep;
}

} // namespace lorenz
