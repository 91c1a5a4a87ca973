// Copyright 2026 The hilbert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>

#include "hilbert/io.hpp"

using namespace hilbert;

namespace {

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / ("hilbert_io_" + name)).string(); }

}  // namespace

TEST_CASE("complex encoding", "[io]") {
    CHECK(complex_to_json({1.5, -2}) == Json::array({1.5, -2.0}));
    CHECK(complex_from_json(Json::array({0.25, 3})) == Complex(0.25, 3));
    CHECK_THROWS(complex_from_json(Json::array({1})));
    Matrix m(2, 3);
    m << 1, Complex(0, 1), 2, 3, 4, Complex(5, -6);
    Json j = matrix_to_json(m);
    CHECK(j.size() == 2);
    CHECK(j[0].size() == 3);
    CHECK(j[1][2] == Json::array({5.0, -6.0}));
    CHECK(json_is_matrix(j));
    CHECK_FALSE(json_is_matrix(vector_to_json(m.col(0))));
    CHECK(max_abs(matrix_from_json(j) - m) == 0.0);
    CHECK_THROWS(matrix_from_json(Json::parse("[[[1,0]],[[1,0],[2,0]]]")));
}

TEST_CASE("MUB set round trip", "[io]") {
    auto set = ivanovic_mubs(5);
    Json j = to_json(set);
    CHECK(j["kind"] == "mubset");
    CHECK(j["version"] == kFormatVersion);
    std::ostringstream warn;
    auto back = mubset_from_json(j, warn);
    CHECK(warn.str().empty());
    REQUIRE(back.bases.size() == set.bases.size());
    for (std::size_t b = 0; b < set.bases.size(); ++b) CHECK(max_abs(back.bases[b] - set.bases[b]) == 0.0);
    // bitwise identical re-serialization, including through a file
    CHECK(to_json(back).dump() == j.dump());
    auto path = temp_path("mub5.json");
    write_json(path, j);
    CHECK(to_json(mubset_from_json(read_json(path), warn)).dump() == j.dump());
}

TEST_CASE("other kinds round trip", "[io]") {
    std::ostringstream warn;
    auto sic = make_candidate(dim4_fiducial());
    sic.seed = 42;
    sic.restart = 3;
    auto s2 = sic_from_json(to_json(sic), warn);
    CHECK((s2.fiducial - sic.fiducial).norm() == 0.0);
    CHECK(s2.fsic == sic.fsic);
    CHECK(s2.seed == 42);
    CHECK(s2.restart == 3);
    CHECK(to_json(s2).dump() == to_json(sic).dump());

    std::mt19937_64 rng(3);
    auto pps = phase_point_set(3);
    auto w = wigner_function(random_density(3, rng), pps);
    auto w2 = wignertable_from_json(to_json(w), warn);
    CHECK((w2.w - w.w).norm() == 0.0);
    CHECK(to_json(w2).dump() == to_json(w).dump());

    BasisFamily fam{2, {Vector::Unit(2, 0), Vector::Unit(2, 1)}, Json{{"note", "computational"}}};
    auto f2 = basisfamily_from_json(to_json(fam), warn);
    CHECK(f2.vectors.size() == 2);
    CHECK(f2.metadata["note"] == "computational");
    CHECK(to_json(f2).dump() == to_json(fam).dump());

    auto field = field_make(3, 2);
    auto fj = to_json(field);
    CHECK(fj["table"].size() == 9);
    auto field2 = field_from_json(fj, warn);
    CHECK(*field2 == *field);
    CHECK(to_json(field2).dump() == fj.dump());
    CHECK(warn.str().empty());
}

TEST_CASE("kind and version handling", "[io]") {
    Json j = to_json(ivanovic_mubs(3));
    try {
        sic_from_json(j);
        FAIL("expected a KindError");
    } catch (const KindError& e) {
        CHECK(e.expected() == "sic");
        CHECK(e.actual() == "mubset");
        CHECK(std::string(e.what()).find("mubset") != std::string::npos);
    }
    CHECK_THROWS_AS(mubset_from_json(Json::array()), KindError);

    j["version"] = 99;
    std::ostringstream warn;
    auto set = mubset_from_json(j, warn);
    CHECK(set.bases.size() == 4);
    CHECK(warn.str().find("version 99") != std::string::npos);

    CHECK_THROWS_AS(read_json(temp_path("does/not/exist.json")), IoError);
    auto bad = temp_path("bad.json");
    write_text(bad, "{ not json");
    CHECK_THROWS_AS(read_json(bad), IoError);
    CHECK_THROWS_AS(write_json("/nonexistent-dir/x.json", j), IoError);

    Json field = to_json(field_make(2, 3));
    field["poly"] = Json::array({1, 1, 1, 1});  // x^3 + x^2 + x + 1 = (x + 1)^3 over Z_2
    CHECK_THROWS(field_from_json(field));
}

TEST_CASE("Wigner CSV", "[io]") {
    WignerTable t{3, RealMatrix::Constant(3, 3, 1.0 / 9)};
    auto csv = wigner_csv(t);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(std::count(csv.begin(), csv.end(), ',') == 6);
}
