#pragma once

// Fixture files: a map config, point labels and typed assertions checked by library calls.

#include "lorenz/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace lorenz {

struct AssertionOutcome {
    std::string check;
    bool passed = false;
    Json expected;
    Json actual;
    std::string note;
};

struct FixtureReport {
    std::string id;
    std::vector<AssertionOutcome> outcomes;
    [[nodiscard]] bool passed() const;
    [[nodiscard]] Json to_json() const;
};

inline const std::vector<std::string>& fixture_ids()
{
    static const std::vector<std::string> ids{"ex51", "exOandD", "ex3", "ex4", "ex5_2", "exCubeRoot2"};
    return ids;
}

Json load_json_file(const std::filesystem::path& path);
// Looks up <dir>/<id>.json for a known id; UnknownFixture otherwise.
Json load_fixture(const std::filesystem::path& dir, const std::string& id);

// Structural problems (unknown check, missing arguments, bad map) raise ConfigParse.
// A computed value that differs from "expect", or an expected value that cannot be read, fails the assertion.
FixtureReport run_fixture(const Json& fixture);

// Ordering of labeled points as "a<b=c<d"; ties keep the order in which labels are given.
std::string ordering_string(const std::vector<std::pair<std::string, SidedPoint>>& labeled);

} // namespace lorenz
