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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <Eigen/Eigenvalues>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "confocal/experiment.hpp"
#include "confocal/plucker.hpp"

using namespace confocal;

namespace {

struct Verdict {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

using Check = std::function<void(Verdict&)>;

double dist(Complex a, Complex b) { return std::abs(a - b); }

// Roots from the companion matrix, independent of the Aberth solver.
std::vector<Complex> companion_roots(const UniPoly<Complex>& p) {
    const int n = p.degree();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) m(k, k - 1) = 1.0;
    for (int k = 0; k < n; ++k) m(k, n - 1) = -p[k] / p[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    return {es.eigenvalues().data(), es.eigenvalues().data() + n};
}

std::vector<std::array<double, 2>> separated_points(Rng& rng, int c, double sep) {
    std::vector<std::array<double, 2>> f;
    while (static_cast<int>(f.size()) < c) {
        std::array<double, 2> p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        bool far = true;
        for (const auto& q : f) far = far && std::hypot(p[0] - q[0], p[1] - q[1]) > sep;
        if (far) f.push_back(p);
    }
    return f;
}

void ac1(Verdict& v) {
    // a^2 u^2 + b^2 v^2 - w^2 with (a, b) = (sqrt 2, 1)
    TriPoly<Rational> ellipse(2);
    ellipse.coeff(2, 0, 0) = 2;
    ellipse.coeff(0, 2, 0) = 1;
    ellipse.coeff(0, 0, 2) = -1;
    auto foci = real_foci(focal_divisor(ellipse).divisor);
    v.require(foci.size() == 2, "ellipse has two foci");
    if (foci.size() == 2) {
        v.require(std::hypot(foci[0].x + 1.0, foci[0].y) < 1e-10, "focus (-1, 0)");
        v.require(std::hypot(foci[1].x - 1.0, foci[1].y) < 1e-10, "focus (1, 0)");
        v.detail << "ellipse foci (" << foci[0].x << ", " << foci[0].y << "), (" << foci[1].x << ", " << foci[1].y << "); ";
    }
    TriPoly<Rational> circle(2);
    circle.coeff(2, 0, 0) = 1;
    circle.coeff(0, 2, 0) = 1;
    circle.coeff(0, 0, 2) = -1;
    auto fd = focal_divisor(circle).divisor;
    v.require(fd.entries.size() == 1 && fd.entries[0].multiplicity == 2, "circle focus has multiplicity 2");
    if (!fd.entries.empty()) v.require(std::abs(fd.entries[0].root) < 1e-10, "circle focus at the origin");
}

void check_conic_relations(Verdict& v, const std::vector<std::array<double, 2>>& f, double& worst) {
    const FocalSystem sys = focal_system(f);
    v.require(sys.matrix.rows() == 4 && sys.matrix.cols() == 5, "4 x 5 focal system");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const RankDecision d = numerical_rank(svd.singularValues());
    v.require(d.rank == 4, "rank 4");
    v.require(d.gap >= 1e3, "clean rank decision");
    const Eigen::VectorXd a0 = svd.solve(sys.rhs);
    const Eigen::VectorXd k = svd.matrixV().col(4);
    const double x1 = f[0][0], y1 = f[0][1], x2 = f[1][0], y2 = f[1][1];
    for (double tau : {0.0, 1.0, -3.0, 10.0}) {
        const Eigen::VectorXd a = a0 + tau * k;
        const double err = std::max({std::abs(a(0) - (y1 + y2)), std::abs(a(1) - (x1 + x2)),
                                     std::abs(a(3) - (x1 * y2 + x2 * y1)), std::abs(a(2) - (a(4) - x1 * x2 + y1 * y2)),
                                     (sys.matrix * a - sys.rhs).norm()});
        worst = std::max(worst, err);
    }
}

void ac2(Verdict& v) {
    double worst = 0.0;
    check_conic_relations(v, {{{1.0, 0.0}, {-1.0, 0.0}}}, worst);
    Rng rng(2, 0);
    for (int t = 0; t < 20; ++t) check_conic_relations(v, separated_points(rng, 2, 0.05), worst);
    v.require(worst < 1e-10, "relations to 1e-10");
    v.detail << "max relation error " << worst << "; ";
}

void ac3(Verdict& v) {
    Rng rng(3, 0);
    double worst = 0.0;
    for (int t = 0; t < 25; ++t) {
        const auto f = separated_points(rng, 3, 0.05);
        const FocalSystem sys = focal_system(f);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const RankDecision d = numerical_rank(svd.singularValues());
        v.require(d.rank == 6 && sys.matrix.cols() - d.rank == 3, "rank 6 and kernel 3");
        const Eigen::VectorXd a = svd.solve(sys.rhs);
        Complex z[3] = {{f[0][0], f[0][1]}, {f[1][0], f[1][1]}, {f[2][0], f[2][1]}};
        const Complex e2 = z[0] * z[1] + z[0] * z[2] + z[1] * z[2], e3 = z[0] * z[1] * z[2];
        const double sx = f[0][0] + f[1][0] + f[2][0], sy = f[0][1] + f[1][1] + f[2][1];
        worst = std::max({worst, std::abs(a(0) - sy), std::abs(a(1) - sx), std::abs(a(3) - e2.imag()),
                          std::abs(a(2) - a(4) + e2.real()), std::abs(a(5) - a(7) + e3.imag()),
                          std::abs(a(6) - a(8) + e3.real())});
        // the free directions leave every listed combination unchanged
        for (int j = 6; j < 9; ++j) {
            const Eigen::VectorXd k = svd.matrixV().col(j);
            worst = std::max({worst, std::abs(k(0)), std::abs(k(1)), std::abs(k(3)), std::abs(k(2) - k(4)),
                              std::abs(k(5) - k(7)), std::abs(k(6) - k(8))});
        }
    }
    v.require(worst < 1e-9, "combinations to 1e-9");
    v.detail << "max combination error " << worst << "; ";
}

const std::vector<std::pair<int, int>> kGrid = {{2, 0}, {3, 0}, {3, 1}, {4, 0}, {4, 1}, {4, 2}, {5, 0}};

std::vector<ExperimentSummary>& grid_runs() {
    static std::vector<ExperimentSummary> runs = [] {
        std::vector<ExperimentSummary> out;
        ExperimentOptions opts;
        opts.trials = 25;
        opts.seed = 1000;
        for (auto [c, kappa] : kGrid) out.push_back(run_rank_experiment(c, kappa, opts));
        return out;
    }();
    return runs;
}

void ac4(Verdict& v) {
    int total = 0, clean = 0;
    for (const auto& s : grid_runs()) {
        const int d = 2 * (s.c - 1) - s.kappa;
        for (const auto& t : s.trials) {
            ++total;
            if (t.outcome == TrialOutcome::degenerate) continue;
            ++clean;
            const auto& r = *t.report;
            v.require(r.gap >= 1e3 && r.condition_gap >= 1e3, "gap on a clean trial");
            v.require(r.rank == std::min(2 * s.c, s.c + d + 1), "rank min(2c, c+d+1)");
            v.require(r.kernel_dim() == std::max(0, d - s.c + 1), "kernel max(0, d-c+1)");
        }
        v.detail << "(" << s.c << "," << s.kappa << ") " << s.clean() << "/" << s.trials.size() << " clean; ";
    }
    v.require(clean >= 0.95 * total, "at least 95% clean");
    v.detail << "overall " << clean << "/" << total << "; ";
}

void ac5(Verdict& v) {
    double div = 0.0, shift = 0.0;
    int checked = 0;
    for (const auto& s : grid_runs())
        for (const auto& t : s.trials) {
            if (!t.report) continue;
            const auto& r = *t.report;
            ++checked;
            div = std::max(div, r.max_division_residual());
            shift = std::max(shift, r.max_shifted_residual());
            v.require(r.kernel_dim() == r.shifted_dim, "kernel dimension = shifted section dimension");
            v.require(static_cast<int>(r.kernel.size()) == r.kernel_dim(), "kernel basis size");
        }
    v.require(div < 1e-8, "division residual < 1e-8");
    v.require(shift < 1e-8, "shifted residual < 1e-8");
    v.detail << checked << " trials, max division residual " << div << ", max shifted residual " << shift << "; ";
}

void ac6(Verdict& v) {
    double worst = 0.0;
    for (int c = 2; c <= 6; ++c) {
        Rng rng(6, static_cast<std::uint64_t>(c));
        for (int t = 0; t < 20; ++t) {
            std::vector<std::array<Rational, 2>> foci;
            std::vector<Complex> want;
            while (static_cast<int>(foci.size()) < c) {
                std::array<Rational, 2> p{rng.dyadic(), rng.dyadic()};
                const Complex z(to_double(p[0]), to_double(p[1]));
                bool far = true;
                for (const auto& w : want) far = far && std::abs(z - w) > 0.05;
                if (!far) continue;
                foci.push_back(p);
                want.push_back(z);
            }
            TriPoly<Rational> q(c - 2);
            for (int n = 0; n < q.size(); ++n) q[n] = rng.dyadic();
            const auto g = construct_min_class(foci, q);
            const auto fd = focal_divisor(g).divisor;
            worst = std::max(worst, matching_distance(fd.expanded(), want));
            v.require(confocal_family(to_complex(g)).dimension() == c * (c - 1) / 2, "family dimension c(c-1)/2");
        }
    }
    v.require(worst < 1e-8, "matching distance < 1e-8");
    v.detail << "max matching distance " << worst << "; ";
}

void ac7(Verdict& v) {
    Rng rng(7, 0);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const int n = 2 + static_cast<int>(rng.next() % 7);
        std::vector<Complex> roots;
        UniPoly<Complex> f = UniPoly<Complex>::constant(1.0);
        for (int k = 0; k < n; ++k) {
            roots.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
            f = f * UniPoly<Complex>({-roots.back(), Complex(1)});
        }
        const SiebeckReport r = siebeck(roots);
        const auto crit = n == 2 ? std::vector<Complex>{derivative(f)[0] / -derivative(f)[1]}
                                 : companion_roots(derivative(f));
        worst = std::max({worst, r.matching_distance, matching_distance(r.foci.expanded(), crit)});
    }
    v.require(worst < 1e-9, "matching distance < 1e-9");
    const double s = std::sqrt(3.0) / 2.0;
    const SiebeckReport tri = siebeck({Complex(1, 0), Complex(-0.5, s), Complex(-0.5, -s)});
    v.require(tri.foci.entries.size() == 1 && tri.foci.entries[0].multiplicity == 2, "equilateral double focus");
    if (!tri.foci.entries.empty()) v.require(std::abs(tri.foci.entries[0].root) < 1e-9, "focus at the centroid");
    v.detail << "max matching distance " << worst << "; ";
}

void ac8(Verdict& v) {
    v.require(class_of(6, 0, 9) == 3 && genus_of(6, 0, 9) == 1, "class_of(6,0,9) = 3, g = 1");
    v.require(expected_confocal_dim(6, 1, 3) == 3, "smooth-cubic duals: 3");
    v.require(expected_confocal_dim(4, 0, 3) == 2, "tri-cuspidal quartics: 2");
    v.require(expected_confocal_dim(3, 0, 3) == 1, "cuspidal cubics: 1");
    v.require(maximal_class_rational_dim(2) == 1 && maximal_class_rational_dim(3) == 0 &&
                  maximal_class_rational_dim(4) == -1,
              "maximal class dims (1, 0, -1)");
    v.detail << "class_of(6,0,9)=" << class_of(6, 0, 9) << " g=" << genus_of(6, 0, 9) << "; ";
}

void ac9(Verdict& v) {
    Rng rng(9, 0);
    int conics = 0, cubics = 0;
    while (conics < 10 || cubics < 10) {
        const int n = conics < 10 ? 2 : 3;
        const RationalCurveParam p = random_param(n, rng);
        if (p.degree() != n) continue;
        if (n == 3) {
            const auto sd = locate_singularities(p);
            v.require(sd.delta() == 1 && sd.kappa() == 0, "random cubic is nodal");
        }
        const RationalCurveParam dual = dual_param(p);
        v.require(dual.degree() == (n == 2 ? 2 : 4), "dual degree of conic 2, nodal cubic 4");
        v.require(proportional(implicitize(dual_param(dual)), implicitize(p)), "biduality");
        (n == 2 ? conics : cubics)++;
    }
    int curves = 0;
    for (auto [c, kappa] : kGrid)
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const GeneratedCurve g = generate_curve(c, kappa, seed);
            v.require(dual_param(g.param).degree() == 2 * (c - 1) - kappa, "reduced dual degree 2(c-1) - kappa");
            ++curves;
        }
    v.detail << conics << " conics, " << cubics << " nodal cubics, " << curves << " generated curves; ";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Check>> criteria = {
        {"AC1 ellipse and circle foci", ac1},
        {"AC2 conic focal system", ac2},
        {"AC3 class-three focal system", ac3},
        {"AC4 focal-map rank Monte Carlo", ac4},
        {"AC5 kernel factorization", ac5},
        {"AC6 minimal-class construction", ac6},
        {"AC7 polar foci and critical points", ac7},
        {"AC8 Plucker and dimension tables", ac8},
        {"AC9 biduality and class law", ac9},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            check(v);
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail << "exception: " << e.what();
        }
        std::printf("%s %s: %s\n", v.ok ? "PASS" : "FAIL", name, v.detail.str().c_str());
        failures += v.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
