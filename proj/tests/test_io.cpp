/*
   Copyright 2026 The confocal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confocal/io.hpp"
#include "gen.hpp"

using namespace confocal;
using io::Json;

TEST_CASE("exact polynomials round trip") {
    for (int trial = 0; trial < 20; ++trial) {
        auto p = gen::tripoly_q(gen::integer(0, 5));
        auto j = io::to_json(p);
        CHECK(j["vars"] == Json::array({"u", "v", "w"}));
        CHECK(io::rational_tripoly(j) == p);
        CHECK(io::rational_tripoly(Json::parse(j.dump())) == p);
    }
    auto q = gen::tripoly_q(2);
    auto j = io::to_json(q, io::Plane::primal);
    CHECK(io::plane_of(j) == io::Plane::primal);
    CHECK(io::rational_tripoly(j) == q);
}

TEST_CASE("float polynomials round trip bit for bit") {
    for (int trial = 0; trial < 20; ++trial) {
        auto p = gen::tripoly_c(gen::integer(0, 4));
        CHECK(io::complex_tripoly(Json::parse(io::to_json(p).dump())) == p);
    }
}

TEST_CASE("coefficient forms") {
    Json j = Json::parse(R"({"degree":1,"terms":[
        {"exp":[1,0,0],"coef":"0.1"},
        {"exp":[0,1,0],"coef":-3},
        {"exp":[0,0,1],"coef":{"re":"2/4","im":0}}]})");
    auto p = io::rational_tripoly(j);
    CHECK(p.coeff(1, 0, 0) == Rational(1, 10));
    CHECK(p.coeff(0, 1, 0) == -3);
    CHECK(p.coeff(0, 0, 1) == Rational(1, 2));
    CHECK(io::rational_from_json(Json(0.25)) == Rational(1, 4));
    CHECK(io::complex_from_json(Json::parse(R"({"re":"1","im":"-2"})")) == Complex(1, -2));
    CHECK(io::complex_from_json(Json::parse("[3, 4]")) == Complex(3, 4));
}

TEST_CASE("malformed polynomials are rejected") {
    const char* cases[] = {
        R"({"terms":[]})",
        R"({"degree":2,"terms":[{"exp":[1,0,0],"coef":"1"}]})",
        R"({"degree":1,"terms":[{"exp":[1,0,0],"coef":"1"},{"exp":[1,0,0],"coef":"2"}]})",
        R"({"degree":1,"terms":[{"exp":[1,0],"coef":"1"}]})",
        R"({"degree":1,"terms":[{"exp":[1,0,0],"coef":"abc"}]})",
        R"({"vars":["a","b","c"],"degree":1,"terms":[]})",
        R"({"degree":1,"terms":[{"exp":[1,0,0],"coef":"1/0"}]})",
    };
    for (const char* text : cases) {
        CAPTURE(text);
        try {
            io::rational_tripoly(Json::parse(text));
            FAIL("expected rejection");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
    Json complex_coef = Json::parse(R"({"degree":0,"terms":[{"exp":[0,0,0],"coef":{"re":"1","im":"1"}}]})");
    CHECK_THROWS_AS(io::rational_tripoly(complex_coef), Error);
    CHECK(io::complex_tripoly(complex_coef)[0] == Complex(1, 1));
}

TEST_CASE("parameterizations round trip") {
    Json j = Json::parse(R"({"var":"t","components":[["-1","0","1"],["0","-1","0","1"],["1"]]})");
    auto p = io::param_from_json(j);
    CHECK(p.degree() == 3);
    CHECK(io::to_json(p) == j);
    CHECK_THROWS_AS(io::param_from_json(Json::parse(R"({"components":[["1"],["2"]]})")), Error);
    CHECK_THROWS_AS(io::param_from_json(Json::parse(R"({"components":[[{"re":1,"im":1}],["1"],["0","1"]]})")), Error);
}

TEST_CASE("schemes round trip") {
    EquiclassicalScheme z;
    z.nodes.push_back({Point3{Complex(1), Complex(0.5, 0.25), Complex(-2)}, Complex(-1), Complex(1)});
    z.cusps.push_back({Point3{Complex(1), Complex(0), Complex(1)}, Point3{Complex(2), Complex(0), Complex(0)}, Complex(0)});
    auto back = io::scheme_from_json(Json::parse(io::to_json(z).dump()));
    REQUIRE(back.delta() == 1);
    REQUIRE(back.kappa() == 1);
    CHECK(back.nodes[0].point == z.nodes[0].point);
    CHECK(back.nodes[0].t == z.nodes[0].t);
    CHECK(back.cusps[0].direction == z.cusps[0].direction);
    // parameters are optional
    auto bare = io::scheme_from_json(Json::parse(R"({"nodes":[{"point":[1,0,"1/2"]}]})"));
    CHECK(bare.nodes[0].point[2] == Complex(0.5));
}

TEST_CASE("report shapes") {
    TriPoly<Rational> g(2);
    g.coeff(0, 0, 2) = 1;
    g.coeff(2, 0, 0) = -2;
    g.coeff(0, 2, 0) = -1;
    auto j = io::to_json(focal_divisor(g));
    REQUIRE(j["real_foci"].size() == 2);
    CHECK(std::abs(std::abs(j["real_foci"][0][0].get<double>()) - 1.0) < 1e-12);
    CHECK(j["degree_drop"] == 0);
    CHECK(j["diagnostics"].contains("residual"));
    CHECK(j["focal_divisor"][0].contains("singular"));

    auto rep = analyze_equiclassical(to_complex(g), {});
    auto r = io::to_json(rep);
    CHECK(r["rank"] == 4);
    CHECK(r["kernel_dim"] == 1);
    CHECK(r["kernel"].size() == 1);

    auto e = io::error_json(Error(ErrorCode::TooFewFoci, "x"));
    CHECK(e["error"]["code"] == "TooFewFoci");

    auto inv = io::to_json(plucker_invariants(4, 0, 3));
    CHECK(inv["c"] == 3);
    CHECK(inv["expected_confocal_dim"] == 2);
}

TEST_CASE("load reads inline text and files") {
    CHECK(io::load(R"({"a":1})")["a"] == 1);
    CHECK_THROWS_AS(io::load("/nonexistent/file.json"), Error);
    CHECK_THROWS_AS(io::load("{not json"), Error);
}
