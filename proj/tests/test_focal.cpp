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

#include "confocal/focal.hpp"
#include "gen.hpp"

using namespace confocal;

namespace {

TriPoly<Rational> conic(const Rational& uu, const Rational& vv, const Rational& ww) {
    TriPoly<Rational> g(2);
    g.coeff(2, 0, 0) = uu;
    g.coeff(0, 2, 0) = vv;
    g.coeff(0, 0, 2) = ww;
    return g;
}

TriPoly<Complex> random_real_chart(int c) {
    auto g = gen::tripoly_real(c);
    g[0] = 1.0;
    return g;
}

}  // namespace

TEST_CASE("conic examples") {
    SUBCASE("w^2 - v^2 - 2u^2 has foci +-1") {
        auto r = focal_divisor(conic(-2, -1, 1));
        REQUIRE(r.divisor.entries.size() == 2);
        CHECK(std::abs(r.divisor.entries[0].root + 1.0) < 1e-14);
        CHECK(std::abs(r.divisor.entries[1].root - 1.0) < 1e-14);
        CHECK(r.divisor.degree_drop == 0);
        auto rf = real_foci(r.divisor);
        CHECK(rf[0].x == doctest::Approx(-1.0));
        CHECK(rf[1].y == doctest::Approx(0.0));
    }
    SUBCASE("circle: double singular focus at the origin") {
        auto r = focal_divisor(conic(1, 1, -1));
        REQUIRE(r.divisor.entries.size() == 1);
        CHECK(r.divisor.entries[0].root == Complex(0));
        CHECK(r.divisor.entries[0].multiplicity == 2);
        CHECK(r.divisor.entries[0].singular);
        CHECK(r.diagnostics.passes_circular_points[0]);
        CHECK(r.diagnostics.passes_circular_points[1]);
        auto rf = real_foci(r.divisor);
        REQUIRE(rf.size() == 1);
        CHECK(rf[0].multiplicity == 2);
    }
    SUBCASE("ellipse a^2 u^2 + b^2 v^2 - w^2") {
        auto r = focal_divisor(conic(9, 4, -1));
        REQUIRE(r.divisor.entries.size() == 2);
        CHECK(std::abs(r.divisor.entries[1].root - std::sqrt(5.0)) < 1e-14);
        CHECK_FALSE(r.divisor.entries[1].singular);
    }
}

TEST_CASE("real_foci maps roots to points") {
    FocalDivisor fd{{{Complex(2, 3), 1, false}}, 0};
    auto rf = real_foci(fd);
    REQUIRE(rf.size() == 1);
    CHECK(rf[0].x == 2.0);
    CHECK(rf[0].y == 3.0);
}

TEST_CASE("degenerate and dropped focal polynomials") {
    CHECK_THROWS_AS(focal_divisor(conic(1, 1, 0)), Error);
    try {
        focal_divisor(conic(1, 1, 0));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateFocalPolynomial);
    }
    // u^2 - v w : tangent to the line at infinity in the primal
    TriPoly<Rational> g(2);
    g.coeff(2, 0, 0) = 1;
    g.coeff(0, 1, 1) = -1;
    auto r = focal_divisor(g);
    CHECK(r.divisor.degree_drop == 1);
    CHECK(r.diagnostics.tangent_at_infinity);
    CHECK(r.divisor.degree() + r.divisor.degree_drop == 2);

    TriPoly<Complex> nonreal(1);
    nonreal[0] = Complex(1, 1);
    CHECK_THROWS_AS(focal_divisor(nonreal), Error);
}

TEST_CASE("multiple root through a singular point is not flagged singular") {
    const Complex r0(0.5, 0.3);
    auto l = TriPoly<Complex>::linear(1, 0, 1.0 / r0);
    auto m = TriPoly<Complex>::linear(0, 1, Complex(0, 1) / r0);
    auto g = l * m * conj(l) * conj(m);
    auto r = focal_divisor(g);
    CHECK(r.divisor.degree() == 4);
    bool found = false;
    for (const auto& e : r.divisor.entries)
        if (std::abs(e.root - r0) < 1e-6) {
            found = true;
            CHECK(e.multiplicity == 2);
            CHECK_FALSE(e.singular);
        }
    CHECK(found);
    CHECK(r.diagnostics.singular_point_roots.size() == 1);
    CHECK_FALSE(r.diagnostics.passes_circular_points[0]);
}

TEST_CASE("fiber property: adding (u^2+v^2)Q keeps the focal divisor") {
    for (int c = 2; c <= 5; ++c)
        for (int trial = 0; trial < 100; ++trial) {
            auto g = random_real_chart(c);
            auto q = gen::tripoly_real(c - 2);
            auto h = g + isotropic_conic<Complex>() * q;
            auto rep = are_confocal(g, h);
            CHECK(rep.confocal);
            CHECK(rep.coefficient_distance < 1e-10);
            CHECK(rep.matching_distance < 1e-10);
        }
}

TEST_CASE("confocal examples") {
    // a^2 - b^2 = 3 for both
    auto e1 = conic(4, 1, -1), e2 = conic(7, 4, -1);
    CHECK(are_confocal(e1, e2).confocal);
    CHECK_FALSE(are_confocal(e1, conic(5, 1, -1)).confocal);
    int agree = 0;
    for (int trial = 0; trial < 20; ++trial)
        if (are_confocal(random_real_chart(3), random_real_chart(3)).confocal) ++agree;
    CHECK(agree == 0);
    CHECK_THROWS_AS(are_confocal(conic(1, 1, 0), e1), Error);
}

TEST_CASE("simple real curves have c real foci from conjugate pairs") {
    for (int c = 1; c <= 6; ++c)
        for (int trial = 0; trial < 10; ++trial) {
            auto g = random_real_chart(c);
            auto r = focal_divisor(g);
            CHECK(r.divisor.degree() == c);
            CHECK(r.divisor.degree_drop == 0);
            auto plus = find_roots(restrict_isotropic(g, Isotropic::plus));
            auto minus = find_roots(restrict_isotropic(g, Isotropic::minus));
            int real = 0;
            for (const auto& f : match_focal_pairs(plus, minus)) real += f.is_real ? f.multiplicity : 0;
            CHECK(real == c);
        }
}

TEST_CASE("focal divisor is deterministic and sorted") {
    auto g = random_real_chart(5);
    auto a = focal_divisor(g), b = focal_divisor(g);
    REQUIRE(a.divisor.entries.size() == b.divisor.entries.size());
    for (size_t k = 0; k < a.divisor.entries.size(); ++k) CHECK(a.divisor.entries[k].root == b.divisor.entries[k].root);
    for (size_t k = 1; k < a.divisor.entries.size(); ++k)
        CHECK(a.divisor.entries[k - 1].root.real() <= a.divisor.entries[k].root.real());
}
