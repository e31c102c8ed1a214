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

#include "confocal/equiclassical.hpp"
#include "gen.hpp"

using namespace confocal;

namespace {

using Q = UniPoly<Rational>;

// (t^2 + 1, t^3 - t, 1): node at (2 : 0 : 1) from t = -1, 1.
RationalCurveParam nodal_cubic() { return RationalCurveParam({Q{1, 0, 1}, Q{0, -1, 0, 1}, Q{1}}); }
// (t^2 + 1, t^3, 1): cusp at (1 : 0 : 1) from t = 0.
RationalCurveParam cuspidal_cubic() { return RationalCurveParam({Q{1, 0, 1}, Q{0, 0, 0, 1}, Q{1}}); }

TriPoly<Complex> implicit_of(const RationalCurveParam& p) { return to_complex(normalize_chart(implicitize(p))); }

UniPoly<Complex> along(const TriPoly<Complex>& h, const RationalCurveParam& p) { return compose(h, p.to_complex()); }

std::vector<TriPoly<Complex>> basis_of(const EquiclassicalScheme& z, int c) {
    NullSpace ns = null_space(equiclassical_conditions(z, c));
    std::vector<TriPoly<Complex>> out;
    for (Eigen::Index j = 0; j < ns.basis.cols(); ++j) out.push_back(to_tripoly(ns.basis.col(j), c));
    return out;
}

double max_coeff(const UniPoly<Complex>& p) {
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

std::vector<std::array<double, 2>> random_foci(int c) {
    std::vector<std::array<double, 2>> f;
    while (static_cast<int>(f.size()) < c) {
        std::array<double, 2> p{gen::uniform(), gen::uniform()};
        bool far = true;
        for (const auto& q : f) far = far && std::hypot(p[0] - q[0], p[1] - q[1]) > 0.1;
        if (far) f.push_back(p);
    }
    return f;
}

std::vector<Complex> as_complex(const std::vector<std::array<double, 2>>& f) {
    std::vector<Complex> out;
    for (const auto& p : f) out.emplace_back(p[0], p[1]);
    return out;
}

}  // namespace

TEST_CASE("numerical rank decisions") {
    Eigen::VectorXd sv(3);
    sv << 1.0, 1e-3, 1e-15;
    auto d = numerical_rank(sv);
    CHECK(d.rank == 2);
    CHECK(d.gap == doctest::Approx(std::min(1e-3 / 1e-8, 1e-8 / 1e-15)));
    sv << 1.0, 0.5, 0.25;
    d = numerical_rank(sv);
    CHECK(d.rank == 3);
    CHECK(d.gap == doctest::Approx(0.25 / 1e-8));
    sv << 1.0, 5e-8, 0.0;
    try {
        numerical_rank(sv);
        FAIL("expected ambiguity");
    } catch (const ToleranceAmbiguityError& e) {
        CHECK(e.code() == ErrorCode::ToleranceAmbiguity);
        CHECK(e.low() == 1);
        CHECK(e.high() == 2);
    }
    sv << 0.0, 0.0, 0.0;
    CHECK(numerical_rank(sv).rank == 0);
}

TEST_CASE("condition matrices of cubic examples") {
    SUBCASE("node") {
        auto p = nodal_cubic();
        auto z = scheme_from(locate_singularities(p));
        auto m = equiclassical_conditions(p, z);
        CHECK(m.rows() == 1);
        CHECK(m.cols() == 9);
        auto basis = basis_of(z, 3);
        REQUIRE(basis.size() == 8);
        for (const auto& h : basis) {
            auto r = along(h, p);
            CHECK(std::abs(r(Complex(1.0))) < 1e-12);
            CHECK(std::abs(r(Complex(-1.0))) < 1e-12);
            CHECK(std::abs(h(Complex(2.0), Complex(0.0), Complex(1.0))) < 1e-12);
        }
        CHECK(shifted_section_dim(z, 3) == 2);
    }
    SUBCASE("cusp") {
        auto p = cuspidal_cubic();
        auto z = scheme_from(locate_singularities(p));
        auto m = equiclassical_conditions(p, z);
        CHECK(m.rows() == 2);
        auto basis = basis_of(z, 3);
        REQUIRE(basis.size() == 7);
        for (const auto& h : basis) {
            // H o psi has a double root at the cusp parameter
            auto r = along(h, p);
            CHECK(std::abs(r.coeff(0)) < 1e-12);
            CHECK(std::abs(r.coeff(1)) < 1e-12);
        }
        CHECK(shifted_section_dim(z, 3) == 1);
    }
    SUBCASE("empty scheme") {
        EquiclassicalScheme z;
        CHECK(equiclassical_conditions(z, 2).rows() == 0);
        CHECK(basis_of(z, 2).size() == 5);
        CHECK(shifted_section_dim(z, 2) == 1);
        CHECK(shifted_section_dim(z, 3) == 3);
    }
    SUBCASE("acnode gives one real row") {
        auto p = RationalCurveParam({Q{5, 0, 1}, Q{0, 1, 0, 1}, Q{1}});
        auto z = scheme_from(locate_singularities(p));
        REQUIRE(z.delta() == 1);
        CHECK(equiclassical_conditions(p, z).rows() == 1);
    }
}

TEST_CASE("non-real singularities pair with their conjugates") {
    const Point3 a{Complex(1, 0.5), Complex(0.3, -0.2), Complex(1)};
    const Point3 abar{std::conj(a[0]), std::conj(a[1]), std::conj(a[2])};
    EquiclassicalScheme lone;
    lone.nodes.push_back({a});
    CHECK_THROWS_AS(equiclassical_conditions(lone, 3), Error);

    EquiclassicalScheme pair;
    pair.nodes.push_back({a});
    pair.nodes.push_back({abar});
    auto m = equiclassical_conditions(pair, 3);
    CHECK(m.rows() == 2);
    for (const auto& h : basis_of(pair, 3)) {
        CHECK(std::abs(h(a[0], a[1], a[2])) < 1e-12);
        CHECK(std::abs(h(abar[0], abar[1], abar[2])) < 1e-12);
    }
    CHECK(complex_conditions(pair, 3).rows() == 2);
}

TEST_CASE("scheme validation") {
    EquiclassicalScheme on_conic;
    on_conic.nodes.push_back({Point3{Complex(1), Complex(0, 1), Complex(0.5)}});
    try {
        equiclassical_conditions(on_conic, 3);
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SchemeOnIsotropicConic);
    }
    auto p = nodal_cubic();
    auto z = scheme_from(locate_singularities(p));
    CHECK_NOTHROW(validate_scheme(p, z));
    z.nodes[0].t = 0.5;
    CHECK_THROWS_AS(validate_scheme(p, z), Error);
    auto zc = scheme_from(locate_singularities(cuspidal_cubic()));
    zc.cusps[0].t = 0.25;
    CHECK_THROWS_AS(validate_scheme(cuspidal_cubic(), zc), Error);
}

TEST_CASE("coefficient vectors round trip") {
    auto h = gen::tripoly_real(4);
    auto v = to_vector(h, false);
    CHECK(to_tripoly(v, 4, true) == h);
    h[0] = 0.0;
    CHECK(to_tripoly(to_vector(h, true), 4) == h);
    CHECK_THROWS_AS(to_tripoly(v, 3, true), Error);
}

TEST_CASE("restriction matrix agrees with substitution") {
    for (int c = 1; c <= 5; ++c) {
        auto h = gen::tripoly_real(c);
        h[0] = 0.0;
        for (auto sign : {Isotropic::plus, Isotropic::minus}) {
            Eigen::VectorXcd a = isotropic_restriction_matrix(c, sign) * to_vector(h, true).cast<Complex>();
            auto r = restrict_isotropic(h, sign);
            for (int k = 0; k < c; ++k) CHECK(std::abs(a(k) - r[k]) < 1e-13);
        }
    }
}

TEST_CASE("focal Jacobian of examples") {
    SUBCASE("circle") {
        // u^2 + v^2 - w^2 in the chart w^2 = 1
        TriPoly<Complex> g(2);
        g.coeff(0, 0, 2) = 1.0;
        g.coeff(2, 0, 0) = -1.0;
        g.coeff(0, 2, 0) = -1.0;
        auto rep = analyze_equiclassical(g, {});
        CHECK(rep.tangent_dim == 5);
        CHECK(rep.rank == 4);
        CHECK(rep.kernel_dim() == 1);
        CHECK(rep.expected_rank == 4);
        CHECK(rep.expected_kernel == 1);
        REQUIRE(rep.kernel.size() == 1);
        // kernel is spanned by u^2 + v^2
        const auto& k = rep.kernel[0].k;
        CHECK(std::abs(k.coeff(2, 0, 0) - k.coeff(0, 2, 0)) < 1e-12);
        CHECK(std::abs(k.coeff(1, 1, 0)) < 1e-12);
        CHECK(std::abs(k.coeff(1, 0, 1)) < 1e-12);
        CHECK(std::abs(k.coeff(0, 1, 1)) < 1e-12);
        CHECK(rep.complex_rank == 4);
    }
    SUBCASE("nodal cubic") {
        auto p = nodal_cubic();
        auto rep = analyze_equiclassical(implicit_of(p), scheme_from(locate_singularities(p)));
        CHECK(rep.d == 4);
        CHECK(rep.genus == 0);
        CHECK(rep.tangent_dim == 8);
        CHECK(rep.rank == 6);
        CHECK(rep.kernel_dim() == 2);
        CHECK(rep.shifted_dim == 2);
        CHECK(rep.expected_kernel == 2);
        CHECK(rep.complex_rank == 6);
        CHECK(rep.max_division_residual() < 1e-10);
        CHECK(rep.max_shifted_residual() < 1e-10);
    }
    SUBCASE("cuspidal cubic") {
        auto p = cuspidal_cubic();
        auto rep = analyze_equiclassical(implicit_of(p), scheme_from(locate_singularities(p)));
        CHECK(rep.d == 3);
        CHECK(rep.tangent_dim == 7);
        CHECK(rep.rank == 6);
        CHECK(rep.kernel_dim() == 1);
        CHECK(rep.shifted_dim == 1);
        CHECK(rep.max_division_residual() < 1e-10);
        CHECK(rep.max_shifted_residual() < 1e-10);
    }
    SUBCASE("smooth cubic") {
        auto g = gen::tripoly_real(3);
        g[0] = 1.0;
        auto rep = analyze_equiclassical(g, {});
        CHECK(rep.genus == 1);
        CHECK(rep.tangent_dim == 9);
        CHECK(rep.rank == 6);
        CHECK(rep.kernel_dim() == 3);
        CHECK(rep.expected_rank == 6);
        CHECK(rep.expected_kernel == 3);
        CHECK(rep.shifted_dim == 3);
    }
}

TEST_CASE("kernel elements leave the focal polynomial fixed") {
    auto p = nodal_cubic();
    auto g = implicit_of(p);
    auto rep = analyze_equiclassical(g, scheme_from(locate_singularities(p)));
    for (const auto& e : rep.kernel) {
        CHECK(max_coeff(restrict_isotropic(e.k, Isotropic::plus)) < 1e-12);
        CHECK(max_coeff(restrict_isotropic(e.k, Isotropic::minus)) < 1e-12);
        // Q vanishes at the node as well
        CHECK(std::abs(e.q(Complex(2.0), Complex(0.0), Complex(1.0))) < 1e-12);
    }
}

TEST_CASE("rank law over generated curves") {
    const std::vector<std::pair<int, int>> cells = {{2, 0}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}, {5, 0}};
    for (auto [c, kappa] : cells)
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            CAPTURE(c);
            CAPTURE(kappa);
            CAPTURE(seed);
            auto curve = generate_curve(c, kappa, seed);
            auto rep = analyze_equiclassical(to_complex(curve.implicit), scheme_from(curve.singularities));
            const int d = 2 * (c - 1) - kappa;
            CHECK(rep.d == d);
            CHECK(rep.tangent_dim == 3 * c - 1 - kappa);
            CHECK(rep.rank == std::min(2 * c, c + d + 1));
            CHECK(rep.kernel_dim() == std::max(0, d - c + 1));
            CHECK(rep.kernel_dim() == rep.shifted_dim);
            CHECK(rep.complex_rank == rep.rank);
            CHECK(rep.gap >= 1e3);
            CHECK(rep.condition_gap >= 1e3);
            CHECK(rep.max_division_residual() < 1e-8);
            CHECK(rep.max_shifted_residual() < 1e-8);
        }
}

TEST_CASE("focal system of a conic") {
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_foci(2);
        auto sys = focal_system(f);
        REQUIRE(sys.matrix.rows() == 4);
        REQUIRE(sys.matrix.cols() == 5);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
        CHECK(numerical_rank(svd.singularValues()).rank == 4);
        Eigen::VectorXd a0 = svd.solve(sys.rhs);
        Eigen::VectorXd k = svd.matrixV().col(4);
        const double x1 = f[0][0], y1 = f[0][1], x2 = f[1][0], y2 = f[1][1];
        for (double tau : {0.0, 1.0, -2.5}) {
            Eigen::VectorXd a = a0 + tau * k;
            CHECK((sys.matrix * a - sys.rhs).norm() < 1e-12);
            CHECK(std::abs(a(0) - (y1 + y2)) < 1e-10);
            CHECK(std::abs(a(1) - (x1 + x2)) < 1e-10);
            CHECK(std::abs(a(3) - (x1 * y2 + x2 * y1)) < 1e-10);
            CHECK(std::abs(a(2) - (a(4) - x1 * x2 + y1 * y2)) < 1e-10);
        }
    }
}

TEST_CASE("focal system of a class-three curve") {
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_foci(3);
        auto sys = focal_system(f);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
        CHECK(numerical_rank(svd.singularValues()).rank == 6);
        Eigen::VectorXd a = svd.solve(sys.rhs);
        // elementary symmetric functions of the complex foci
        Complex z[3] = {{f[0][0], f[0][1]}, {f[1][0], f[1][1]}, {f[2][0], f[2][1]}};
        Complex e1 = z[0] + z[1] + z[2], e2 = z[0] * z[1] + z[0] * z[2] + z[1] * z[2], e3 = z[0] * z[1] * z[2];
        CHECK(std::abs(a(0) - e1.imag()) < 1e-9);
        CHECK(std::abs(a(1) - e1.real()) < 1e-9);
        CHECK(std::abs(a(2) - a(4) + e2.real()) < 1e-9);
        CHECK(std::abs(a(3) - e2.imag()) < 1e-9);
        CHECK(std::abs(a(5) - a(7) + e3.imag()) < 1e-9);
        CHECK(std::abs(a(6) - a(8) + e3.real()) < 1e-9);
    }
}

TEST_CASE("minimal-class construction") {
    for (int c = 2; c <= 6; ++c)
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_foci(c);
            std::vector<std::array<Complex, 2>> fc;
            for (const auto& p : f) fc.push_back({Complex(p[0]), Complex(p[1])});
            auto q = gen::tripoly_real(c - 2);
            auto g = construct_min_class(fc, q);
            auto fd = focal_divisor(g).divisor;
            CHECK(matching_distance(fd.expanded(), as_complex(f)) < 1e-8);
            auto fam = confocal_family(g);
            CHECK(fam.dimension() == c * (c - 1) / 2);
            for (const auto& b : fam.basis) {
                auto moved = g + Complex(gen::uniform()) * b;
                CHECK(are_confocal(g, moved).confocal);
            }
        }
    std::vector<std::array<Rational, 2>> one{{Rational(1), Rational(0)}};
    try {
        construct_min_class(one, TriPoly<Rational>(0));
        FAIL("expected rejection");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooFewFoci);
    }
    std::vector<std::array<Rational, 2>> exact{{Rational(1), Rational(0)}, {Rational(-1), Rational(0)}};
    auto g = construct_min_class(exact, TriPoly<Rational>(0));
    // (u + w)(-u + w) = w^2 - u^2
    CHECK(g.coeff(0, 0, 2) == 1);
    CHECK(g.coeff(2, 0, 0) == -1);
}

TEST_CASE("polar foci are the critical points") {
    for (int trial = 0; trial < 30; ++trial) {
        const int n = gen::integer(2, 8);
        std::vector<Complex> roots;
        for (int k = 0; k < n; ++k) roots.push_back(gen::complex());
        auto rep = siebeck(roots);
        CHECK(rep.identity_residual < 1e-12);
        CHECK(rep.matching_distance < 1e-9);
        CHECK(rep.polar.degree() == n - 1);
    }
    const double s = std::sqrt(3.0) / 2.0;
    auto rep = siebeck({Complex(1, 0), Complex(-0.5, s), Complex(-0.5, -s)});
    REQUIRE(rep.foci.entries.size() == 1);
    CHECK(rep.foci.entries[0].multiplicity == 2);
    CHECK(std::abs(rep.foci.entries[0].root) < 1e-9);
}
