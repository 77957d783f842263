// lorenz-lab: command-line front end for the Lorenz map toolkit.

#include "lorenz/cycles.hpp"
#include "lorenz/error.hpp"
#include "lorenz/fixture.hpp"
#include "lorenz/io.hpp"
#include "lorenz/kneading.hpp"
#include "lorenz/markov.hpp"
#include "lorenz/renorm.hpp"
#include "lorenz/rotation.hpp"
#include "lorenz/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

using namespace lorenz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

struct MapSource {
    std::string config;
    std::string fixture;
};

std::filesystem::path fixture_dir(const std::string& flag)
{
    if (!flag.empty()) {
        return flag;
    }
    if (const char* env = std::getenv("LORENZ_FIXTURE_DIR")) {
        return env;
    }
#ifdef LORENZ_DEFAULT_FIXTURE_DIR
    if (std::filesystem::exists(LORENZ_DEFAULT_FIXTURE_DIR)) {
        return LORENZ_DEFAULT_FIXTURE_DIR;
    }
#endif
    return "fixtures";
}

LorenzMap load_map(const MapSource& src, const std::string& dir)
{
    if (!src.fixture.empty()) {
        return map_from_json(load_fixture(fixture_dir(dir), src.fixture).at("map"));
    }
    if (src.config.empty()) {
        throw LorenzError(ErrorKind::ConfigParse, "give a map config file or --fixture");
    }
    Json j = load_json_file(src.config);
    return map_from_json(j.contains("map") ? j.at("map") : j);
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json with_schema(Json j)
{
    j["schema"] = kSchema;
    return j;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) {
        throw LorenzError(ErrorKind::ConfigParse, "cannot write " + path);
    }
    out << text;
}

std::string render_fixture_svg(const Json& fixture)
{
    LorenzMap f = map_from_json(fixture.at("map"));
    std::vector<LabeledPoint> pts;
    const Json labels = fixture.value("labels", Json::object());
    std::vector<SidedPoint> cycle_pts;
    if (fixture.contains("cycle_period")) {
        int n = fixture.at("cycle_period").get<int>();
        PeriodicOrbitReport rep = periodic_orbits(f, n);
        for (const PeriodicOrbit* o : rep.with_period(n)) {
            if (!o->contains_sided && cycle_pts.empty()) {
                cycle_pts = o->points;
            }
        }
    }
    for (const auto& [name, ref] : labels.items()) {
        SidedPoint p = resolve_point(f, ref.get<std::string>(), cycle_pts.empty() ? nullptr : &cycle_pts);
        pts.push_back({name, p.value, name.rfind('q', 0) != 0, false});
    }
    if (labels.empty()) {
        for (std::size_t j = 0; j < cycle_pts.size(); ++j) {
            pts.push_back({"z" + std::to_string(j), cycle_pts[j].value, true, false});
        }
    }
    pts.push_back({"c", f.c(), false, true});
    return render_numberline(std::move(pts));
}

Json renorm_json(const Renormalization& g, bool minimal, const std::string& lem_inv)
{
    return Json{{"l", g.l},
                {"r", g.r},
                {"u", element_to_json(g.u)},
                {"v", element_to_json(g.v)},
                {"u_approx", rounded(g.u.to_double())},
                {"v_approx", rounded(g.v.to_double())},
                {"valid", true},
                {"minimal", minimal},
                {"expanding", g.expanding},
                {"conventions", g.conventions},
                {"lem_inv", lem_inv}};
}

std::string scan_cell(const Rational& beta, const Rational& alpha, unsigned bits, int n_max, int lr_max)
{
    std::ostringstream row;
    row << to_string(beta) << "," << to_string(alpha) << ",";
    FieldContext k = FieldContext::rationals(bits);
    std::optional<LorenzMap> fm;
    try {
        fm = LorenzMap::mod_one(k.from_rational(beta), k.from_rational(alpha));
    } catch (const LorenzError&) {
        row << "false,,,,,,,";
        return row.str();
    }
    const LorenzMap& f = *fm;
    row << "true,";
    auto guarded = [](auto&& fn) -> std::string {
        try {
            return fn();
        } catch (const LorenzError& e) {
            if (e.kind() == ErrorKind::PrecisionExhausted) {
                return "undecided";
            }
            return "";
        }
    };
    std::string kappa, nk, primary;
    try {
        PeriodicOrbitReport rep = periodic_orbits(f, n_max, 200);
        if (rep.kappa) {
            kappa = std::to_string(*rep.kappa);
            for (const auto& o : rep.orbits) {
                if (o.period == *rep.kappa && o.nk) {
                    nk = std::to_string(o.nk->n) + "(" + std::to_string(o.nk->k) + ")";
                    primary = o.nk->primary ? "true" : "false";
                    break;
                }
            }
        }
    } catch (const LorenzError& e) {
        kappa = e.kind() == ErrorKind::PrecisionExhausted ? "undecided" : "";
    }
    row << kappa << "," << nk << "," << primary << ",";
    std::string rl, rr;
    try {
        RenormSearch s = search_renorms(f, lr_max, lr_max);
        if (!s.pareto_minimal.empty()) {
            rl = std::to_string(s.pareto_minimal.front().first);
            rr = std::to_string(s.pareto_minimal.front().second);
        }
    } catch (const LorenzError& e) {
        rl = rr = e.kind() == ErrorKind::PrecisionExhausted ? "undecided" : "";
    }
    row << rl << "," << rr << ",";
    row << guarded([&] {
        try {
            return dynamics_verdict(build_markov(f, 60)).verdict;
        } catch (const LorenzError& e) {
            if (e.kind() == ErrorKind::NotEventuallyPeriodic) {
                return std::string("none");
            }
            throw;
        }
    }) << ",";
    row << guarded([&] {
        auto m = matching(f, 40);
        return m.eta ? std::to_string(*m.eta) : std::string();
    });
    return row.str();
}

std::pair<Rational, Rational> parse_range(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw LorenzError(ErrorKind::ConfigParse, "range must look like lo:hi");
    }
    return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"lorenz-lab: exact analysis of expanding Lorenz maps"};
    app.require_subcommand(1);
    std::string dir;
    app.add_option("--fixture-dir", dir, "Directory holding the example fixtures");

    MapSource src;
    int depth = 12;
    int horizon = 200;
    int lmax = 10;
    int rmax = 10;
    auto add_map = [&](CLI::App* cmd) {
        cmd->add_option("config", src.config, "Map config JSON (or a fixture file)");
        cmd->add_option("--fixture", src.fixture, "Use the map of a named fixture");
    };

    auto* knead = app.add_subcommand("knead", "Kneading invariant, admissibility and factorizations");
    add_map(knead);
    knead->add_option("--horizon", horizon);
    knead->add_option("--lmax", lmax);
    knead->add_option("--rmax", rmax);

    auto* orbit_cmd = app.add_subcommand("orbit", "Sided orbit of a point");
    add_map(orbit_cmd);
    std::string point = "c+";
    orbit_cmd->add_option("--point", point, "Point reference: 0, 1, c-, c+, orb(REF,n), expr:...");
    orbit_cmd->add_option("--horizon", horizon);
    std::string svg_path;
    orbit_cmd->add_option("--svg", svg_path, "Write a number-line SVG of the orbit");

    auto* cycles_cmd = app.add_subcommand("cycles", "Periodic orbits and n(k)-cycles");
    add_map(cycles_cmd);
    int n_max = 6;
    cycles_cmd->add_option("--nmax", n_max);
    cycles_cmd->add_option("--horizon", horizon);

    auto* renorm_cmd = app.add_subcommand("renorm", "Search renormalizations");
    add_map(renorm_cmd);
    renorm_cmd->add_option("--lmax", lmax);
    renorm_cmd->add_option("--rmax", rmax);
    renorm_cmd->add_option("--horizon", horizon);

    auto* inv_cmd = app.add_subcommand("invariants", "Invariant-set analysis of a renormalization");
    add_map(inv_cmd);
    int l = 2;
    int r = 2;
    int samples = 50;
    unsigned seed = 1;
    int cycle_period = 0;
    inv_cmd->add_option("--l", l)->required();
    inv_cmd->add_option("--r", r)->required();
    inv_cmd->add_option("--depth", depth);
    inv_cmd->add_option("--samples", samples);
    inv_cmd->add_option("--seed", seed);
    inv_cmd->add_option("--cycle-period", cycle_period, "Check preimage closure of the plain orbit of this period");

    auto* markov_cmd = app.add_subcommand("markov", "Markov partition and transitivity verdict");
    add_map(markov_cmd);
    markov_cmd->add_option("--horizon", horizon);

    auto* rot_cmd = app.add_subcommand("rotation", "Rotation number estimates (CSV)");
    add_map(rot_cmd);
    int n_iter = 1000;
    rot_cmd->add_option("--samples", samples);
    rot_cmd->add_option("--n-iter", n_iter);
    rot_cmd->add_option("--seed", seed);

    auto* match_cmd = app.add_subcommand("matching", "Least eta with f^eta(c-) = f^eta(c+)");
    add_map(match_cmd);
    int eta_max = 40;
    match_cmd->add_option("--eta-max", eta_max);

    auto* verify = app.add_subcommand("verify-example", "Check a fixture's assertions");
    std::string example;
    std::string fixture_file;
    verify->add_option("example", example, "Fixture id, or 'all'");
    verify->add_option("--file", fixture_file, "Fixture file to check instead of a named one");
    verify->add_option("--svg", svg_path, "Write the fixture's number-line diagram");

    auto* scan = app.add_subcommand("scan", "Classify a grid of mod-one maps (CSV)");
    std::string grid = "50x50";
    std::string beta_range = "1:2";
    std::string alpha_range = "0:1";
    unsigned float_bits = 128;
    std::string out_path;
    int scan_nmax = 6;
    int scan_lr = 6;
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    scan->add_option("--grid", grid);
    scan->add_option("--beta", beta_range);
    scan->add_option("--alpha", alpha_range);
    scan->add_option("--float-bits", float_bits);
    scan->add_option("--nmax", scan_nmax);
    scan->add_option("--lrmax", scan_lr);
    scan->add_option("--threads", threads);
    scan->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*knead) {
            LorenzMap f = load_map(src, dir);
            KneadingInvariant k = kneading_invariant(f, horizon);
            AdmissibilityResult adm = admissibility_check(k.plus, k.minus);
            Json facts = Json::array();
            for (const auto& fz : renorm_factorization(k.plus, k.minus, lmax, rmax)) {
                facts.push_back({{"l", fz.l}, {"r", fz.r}, {"w_minus", fz.w_minus}, {"w_plus", fz.w_plus}});
            }
            Json report{{"plus", k.plus.to_string()},
                        {"minus", k.minus.to_string()},
                        {"admissibility", to_string(adm.verdict)},
                        {"factorizations", facts}};
            if (adm.witness) {
                report["witness"] = *adm.witness;
            }
            emit(with_schema(report));
        } else if (*orbit_cmd) {
            LorenzMap f = load_map(src, dir);
            Orbit o = orbit(f, resolve_point(f, point), horizon);
            Json pts = Json::array();
            std::vector<LabeledPoint> labeled;
            for (std::size_t i = 0; i < o.points.size(); ++i) {
                pts.push_back(point_to_json(o.points[i]));
                labeled.push_back({std::to_string(i), o.points[i].value, true, false});
            }
            Json report{{"start", point},
                        {"points", pts},
                        {"preperiod", o.preperiod ? Json(*o.preperiod) : Json(nullptr)},
                        {"period", o.period ? Json(*o.period) : Json(nullptr)},
                        {"truncated", o.truncated}};
            if (!svg_path.empty()) {
                labeled.push_back({"c", f.c(), false, true});
                write_file(svg_path, render_numberline(labeled));
            }
            emit(with_schema(report));
        } else if (*cycles_cmd) {
            LorenzMap f = load_map(src, dir);
            PeriodicOrbitReport rep = periodic_orbits(f, n_max, horizon);
            Json orbits = Json::array();
            for (const auto& o : rep.orbits) {
                Json pts = Json::array();
                for (const auto& p : o.points) {
                    pts.push_back(point_to_json(p));
                }
                Json item{{"period", o.period}, {"points", pts}, {"right_count", o.right_count},
                          {"contains_sided", o.contains_sided}, {"nk_cycle", nullptr}};
                if (o.nk) {
                    item["nk_cycle"] = {{"n", o.nk->n}, {"k", o.nk->k}, {"primary", o.nk->primary}, {"strict", o.nk->strict}};
                }
                orbits.push_back(item);
            }
            auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
            emit(with_schema({{"orbits", orbits},
                              {"kappa", opt(rep.kappa)},
                              {"plain_kappa", opt(rep.plain_kappa)},
                              {"c_minus_period", opt(rep.c_minus_period)},
                              {"c_plus_period", opt(rep.c_plus_period)}}));
        } else if (*renorm_cmd) {
            LorenzMap f = load_map(src, dir);
            RenormSearch s = search_renorms(f, lmax, rmax);
            Json list = Json::array();
            for (const auto& g : s.valid) {
                bool minimal = std::find(s.pareto_minimal.begin(), s.pareto_minimal.end(), std::make_pair(g.l, g.r)) !=
                               s.pareto_minimal.end();
                list.push_back(renorm_json(g, minimal, invariant_set_analysis(f, g, horizon).lem_inv));
            }
            Json pm = Json::array();
            for (const auto& [a, b] : s.pareto_minimal) {
                pm.push_back({a, b});
            }
            Json report{{"renormalizations", list}, {"pareto_minimal", pm}, {"unique_minimum", nullptr}};
            if (s.unique_minimum) {
                report["unique_minimum"] = {s.unique_minimum->first, s.unique_minimum->second};
            }
            emit(with_schema(report));
        } else if (*inv_cmd) {
            LorenzMap f = load_map(src, dir);
            RenormCheck chk = validate_renorm(f, l, r);
            if (!chk.valid) {
                emit(with_schema({{"l", l}, {"r", r}, {"valid", false}, {"reason", chk.reason}}));
                return kExitFailed;
            }
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<long> pick(1, (1L << 20) - 1);
            std::vector<FieldElement> pts;
            for (int i = 0; i < samples; ++i) {
                pts.push_back(f.context().from_rational(Rational(pick(rng), 1L << 20)));
            }
            std::vector<FieldElement> cyc;
            if (cycle_period > 0) {
                PeriodicOrbitReport rep = periodic_orbits(f, cycle_period);
                for (const PeriodicOrbit* o : rep.with_period(cycle_period)) {
                    if (!o->contains_sided && cyc.empty()) {
                        for (const auto& p : o->points) {
                            cyc.push_back(p.value);
                        }
                    }
                }
            }
            InvariantAnalysis an = invariant_set_analysis(f, chk.g, depth, pts, cyc);
            auto endpoint = [](const EndpointOrbit& e) {
                return Json{{"meets", e.meets ? Json(*e.meets) : Json(nullptr)},
                            {"first_hit", e.first_hit ? Json(*e.first_hit) : Json(nullptr)}};
            };
            Json report{{"renormalization", renorm_json(chk.g, false, an.lem_inv)},
                        {"lem_inv", an.lem_inv},
                        {"u_orbit", endpoint(an.u_orbit)},
                        {"v_orbit", endpoint(an.v_orbit)},
                        {"samples", {{"in_F", an.in_f}, {"in_J", an.in_j}, {"unknown", an.unknown}}}};
            if (an.d_o_closed) {
                report["d_o_closed"] = *an.d_o_closed;
                report["d_o_witness"] = an.d_o_witness ? point_to_json(*an.d_o_witness) : Json(nullptr);
            }
            emit(with_schema(report));
        } else if (*markov_cmd) {
            LorenzMap f = load_map(src, dir);
            MarkovSystem m = build_markov(f, horizon);
            DynamicsVerdict v = dynamics_verdict(m);
            Json bps = Json::array();
            for (const auto& b : m.breakpoints) {
                bps.push_back({{"value", element_to_json(b)}, {"approx", rounded(b.to_double())}});
            }
            emit(with_schema({{"breakpoints", bps},
                              {"matrix", m.matrix},
                              {"irreducible", v.irreducible},
                              {"primitive", v.primitive},
                              {"period", v.period},
                              {"verdict", v.verdict},
                              {"certification", "certified (Markov)"},
                              {"witness", v.witness},
                              {"witness_verified", v.witness_verified},
                              {"cyclic_classes", v.cyclic_classes},
                              {"spectral_radius", rounded(v.spectral_radius)},
                              {"entropy", rounded(v.entropy)}}));
        } else if (*rot_cmd) {
            LorenzMap f = load_map(src, dir);
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<long> pick(1, (1L << 20) - 1);
            std::vector<SidedPoint> pts;
            for (int i = 0; i < samples; ++i) {
                pts.push_back(SidedPoint::plain(f.context().from_rational(Rational(pick(rng), 1L << 20))));
            }
            RotationReport rep = rotation_analysis(f, pts, n_iter);
            std::cout << "sample,n_iter,m_n,estimate,exact\n";
            for (const auto& s : rep.samples) {
                char est[32];
                std::snprintf(est, sizeof est, "%.12f", s.estimate);
                std::cout << s.point.to_string() << "," << s.n_iter << "," << s.m_n << "," << est << ","
                          << (s.exact ? to_string(*s.exact) : "") << "\n";
            }
        } else if (*match_cmd) {
            LorenzMap f = load_map(src, dir);
            Matching m = matching(f, eta_max);
            emit(with_schema({{"eta", m.eta ? Json(*m.eta) : Json(nullptr)},
                              {"sided_equal", m.sided_equal},
                              {"persists", m.persists},
                              {"separates_at", m.separates_at ? Json(*m.separates_at) : Json(nullptr)}}));
        } else if (*verify) {
            std::vector<Json> fixtures;
            if (!fixture_file.empty()) {
                fixtures.push_back(load_json_file(fixture_file));
            } else if (example == "all") {
                for (const auto& id : fixture_ids()) {
                    fixtures.push_back(load_fixture(fixture_dir(dir), id));
                }
            } else {
                fixtures.push_back(load_fixture(fixture_dir(dir), example));
            }
            bool ok = true;
            Json reports = Json::array();
            for (const auto& fx : fixtures) {
                FixtureReport rep = run_fixture(fx);
                ok = ok && rep.passed();
                reports.push_back(rep.to_json());
                std::cerr << (rep.passed() ? "PASS " : "FAIL ") << rep.id << "\n";
            }
            if (!svg_path.empty() && fixtures.size() == 1) {
                write_file(svg_path, render_fixture_svg(fixtures.front()));
            }
            emit(reports.size() == 1 ? reports.front() : with_schema({{"fixtures", reports}, {"passed", ok}}));
            return ok ? kExitOk : kExitFailed;
        } else if (*scan) {
            auto x = grid.find('x');
            if (x == std::string::npos) {
                throw LorenzError(ErrorKind::ConfigParse, "grid must look like NxM");
            }
            const int nb = std::stoi(grid.substr(0, x));
            const int na = std::stoi(grid.substr(x + 1));
            if (nb < 1 || na < 1) {
                throw LorenzError(ErrorKind::ConfigParse, "grid sizes must be positive");
            }
            auto [b0, b1] = parse_range(beta_range);
            auto [a0, a1] = parse_range(alpha_range);
            std::vector<std::string> rows(static_cast<std::size_t>(nb) * static_cast<std::size_t>(na));
            auto cell = [&](std::size_t idx) {
                auto i = static_cast<long>(idx / static_cast<std::size_t>(na));
                auto j = static_cast<long>(idx % static_cast<std::size_t>(na));
                Rational beta = b0 + (b1 - b0) * Rational(2 * i + 1, 2 * nb);
                Rational alpha = a0 + (a1 - a0) * Rational(2 * j + 1, 2 * na);
                rows[idx] = scan_cell(beta, alpha, float_bits, scan_nmax, scan_lr);
            };
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) {
                pool.emplace_back([&] {
                    for (std::size_t idx = next++; idx < rows.size(); idx = next++) {
                        cell(idx);
                    }
                });
            }
            for (auto& th : pool) {
                th.join();
            }
            std::ostringstream csv;
            csv << "beta,alpha,valid,kappa,nk_cycle,primary,renorm_min_l,renorm_min_r,markov_verdict,matching_eta\n";
            for (const auto& row : rows) {
                csv << row << "\n";
            }
            if (out_path.empty()) {
                std::cout << csv.str();
            } else {
                write_file(out_path, csv.str());
            }
        }
    } catch (const LorenzError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
