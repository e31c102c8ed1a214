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

#include "confocal/ratgen.hpp"

#include <algorithm>

#include "confocal/resultant.hpp"
#include "confocal/rootfind.hpp"

namespace confocal {

namespace {

Point3 normalized(Point3 p) {
    Complex big = p[0];
    for (auto x : p)
        if (std::abs(x) > std::abs(big)) big = x;
    for (auto& x : p) x /= big;
    return p;
}

Point3 eval(const std::array<UniPoly<Rational>, 3>& f, Complex t) { return {f[0](t), f[1](t), f[2](t)}; }

bool before(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

// Res_s, with a vanishing input treated as giving no information.
UniPoly<Rational> eliminant(const BiPoly<Rational>& p, const BiPoly<Rational>& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly<Rational>();
    return resultant(p, q, Eliminate::s);
}

std::vector<Complex> simple_roots(const UniPoly<Rational>& f, double tol) {
    if (f.degree() < 1) return {};
    RootSet rs = find_roots(to_complex(f), tol);
    std::vector<Complex> out;
    for (const auto& r : rs.roots) {
        if (r.multiplicity != 1) throw Error(ErrorCode::ClusterAmbiguity, "singular parameters closer than tolerance");
        out.push_back(r.value);
    }
    return out;
}

std::vector<CuspData> locate_cusps(const RationalCurveParam& p, const UniPoly<Rational>& k, double tol) {
    std::vector<CuspData> out;
    if (k.degree() < 1) return out;
    if (gcd(k, derivative(k)).degree() > 0) throw Error(ErrorCode::CensusMismatch, "non-ordinary cusp");
    auto d1 = p.derivative();
    std::array<UniPoly<Rational>, 3> d2{derivative(d1[0]), derivative(d1[1]), derivative(d1[2])};
    for (Complex t : simple_roots(k, tol)) {
        Point3 pt = p.at(t);
        Point3 dir = eval(d2, t);
        if (projective_distance(pt, dir) < 1e-6) throw Error(ErrorCode::CensusMismatch, "cusp is not ordinary");
        CuspData c{t, normalized(pt), dir, 0.0};
        // psi' is parallel to psi at a cusp; report how far from parallel it is
        Point3 tangent = eval(d1, t);
        double tn = std::max({std::abs(tangent[0]), std::abs(tangent[1]), std::abs(tangent[2])});
        c.residual = tn == 0.0 ? 0.0 : projective_distance(pt, tangent);
        out.push_back(c);
    }
    return out;
}

}  // namespace

double projective_distance(const Point3& a, const Point3& b) {
    double na = 0, nb = 0;
    for (int k = 0; k < 3; ++k) {
        na += std::norm(a[k]);
        nb += std::norm(b[k]);
    }
    if (na == 0.0 || nb == 0.0) return 1.0;
    // Lagrange identity: |a ^ b|^2 = |a|^2 |b|^2 - |<a, b>|^2, without the cancellation.
    double wedge = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) wedge += std::norm(a[i] * b[j] - a[j] * b[i]);
    return std::min(1.0, std::sqrt(wedge / (na * nb)));
}

SingularityData locate_singularities(const RationalCurveParam& p, double tol) {
    const int n = p.degree();
    const int expected = (n - 1) * (n - 2) / 2;
    SingularityData out;

    auto wedge = cross(p.components(), p.derivative());
    UniPoly<Rational> k = gcd(gcd(wedge[0], wedge[1]), wedge[2]);
    out.cusps = locate_cusps(p, k, tol);

    if (n >= 3) {
        BiPoly<Rational> dac = divided_difference(p[0], p[2]);
        BiPoly<Rational> dbc = divided_difference(p[1], p[2]);
        BiPoly<Rational> dab = divided_difference(p[0], p[1]);
        UniPoly<Rational> e = gcd(gcd(eliminant(dac, dbc), eliminant(dac, dab)), eliminant(dbc, dab));
        if (e.is_zero()) throw Error(ErrorCode::CensusMismatch, "parameterization is not birational");
        UniPoly<Rational> nodes = e.degree() > 0 ? squarefree_part(e) : e;
        if (k.degree() > 0) {
            UniPoly<Rational> common = gcd(nodes, k);
            if (common.degree() > 0) nodes = ring_exact_div(nodes, common);
        }
        std::vector<Complex> roots = simple_roots(nodes, tol);
        const int m = static_cast<int>(roots.size());
        std::vector<int> partner(m, -1);
        for (int i = 0; i < m; ++i) {
            const Complex t = roots[i];
            // candidate partners: roots in s of the first divided difference not vanishing at t
            std::vector<Complex> candidates;
            for (const BiPoly<Rational>* f : {&dac, &dbc, &dab}) {
                UniPoly<Complex> in_s = f->at_t(t);
                double big = 0.0;
                for (auto c : in_s.coeffs()) big = std::max(big, std::abs(c));
                if (big == 0.0 || in_s.trimmed().formal_degree() < 1) continue;
                RootOptions opts;
                opts.tol = tol;
                opts.drop_tol = 1e-10;
                try {
                    candidates = find_roots(in_s, opts).expanded();
                } catch (const NonConvergenceError&) {
                    continue;
                }
                if (!candidates.empty()) break;
            }
            double best = std::numeric_limits<double>::infinity();
            Complex chosen = t;
            for (Complex s : candidates) {
                if (std::abs(s - t) < 1e-6 * (1.0 + std::abs(t))) continue;
                double r = std::abs(dac(s, t)) + std::abs(dbc(s, t)) + std::abs(dab(s, t));
                if (r < best) {
                    best = r;
                    chosen = s;
                }
            }
            int j = -1;
            double snap = std::numeric_limits<double>::infinity();
            for (int q = 0; q < m; ++q) {
                if (q == i) continue;
                double dist = std::abs(roots[q] - chosen);
                if (dist < snap) {
                    snap = dist;
                    j = q;
                }
            }
            if (j < 0 || projective_distance(p.at(roots[i]), p.at(roots[j])) > tol)
                throw Error(ErrorCode::CensusMismatch, "node parameter without a partner");
            partner[i] = j;
        }
        for (int i = 0; i < m; ++i) {
            if (partner[partner[i]] != i) throw Error(ErrorCode::ClusterAmbiguity, "node partners are not mutual");
            if (i > partner[i]) continue;
            Complex s = roots[i], t = roots[partner[i]];
            if (before(t, s)) std::swap(s, t);
            NodeData nd{s, t, normalized(p.at(t)), projective_distance(p.at(s), p.at(t))};
            out.nodes.push_back(nd);
        }
        std::sort(out.nodes.begin(), out.nodes.end(), [](const NodeData& a, const NodeData& b) { return before(a.s, b.s); });
    }

    std::vector<Point3> points;
    for (const auto& nd : out.nodes) points.push_back(nd.point);
    for (const auto& c : out.cusps) points.push_back(c.point);
    for (size_t a = 0; a < points.size(); ++a)
        for (size_t b = a + 1; b < points.size(); ++b)
            if (projective_distance(points[a], points[b]) <= tol)
                throw Error(ErrorCode::ClusterAmbiguity, "two singular points coincide");
    for (const auto& nd : out.nodes) out.residual = std::max(out.residual, nd.residual);
    for (const auto& c : out.cusps) out.residual = std::max(out.residual, c.residual);
    if (out.delta() + out.kappa() != expected)
        throw Error(ErrorCode::CensusMismatch, "found " + std::to_string(out.delta()) + " nodes and " +
                                                   std::to_string(out.kappa()) + " cusps, expected " +
                                                   std::to_string(expected) + " singular points");
    return out;
}

RationalCurveParam random_param(int n, Rng& rng) {
    for (;;) {
        std::array<UniPoly<Rational>, 3> c;
        for (auto& comp : c) {
            std::vector<Rational> coeffs(n + 1);
            for (auto& x : coeffs) x = rng.dyadic();
            comp = UniPoly<Rational>(std::move(coeffs));
        }
        try {
            RationalCurveParam p(c);
            if (p.degree() == n) return p;
        } catch (const Error&) {
        }
    }
}

GeneratedCurve generate_curve(int c, int kappa, std::uint64_t seed) {
    if (c < 2) throw Error(ErrorCode::InvalidArgument, "curve degree must be at least 2");
    if (kappa < 0 || kappa > (c - 1) * (c - 2) / 2)
        throw Error(ErrorCode::InvalidArgument, "cusp count outside 0..(c-1)(c-2)/2");
    if (kappa > c - 2)
        throw Error(ErrorCode::GenerationExhausted, "planted-cusp construction needs kappa <= c - 2");
    Rng rng(seed, (static_cast<std::uint64_t>(c) << 32) | static_cast<std::uint64_t>(kappa));
    constexpr int kMaxRejections = 50;
    constexpr double kMinSingularSeparation = 1e-2;
    for (int attempt = 0; attempt <= kMaxRejections; ++attempt) {
        std::vector<Rational> params;
        while (static_cast<int>(params.size()) < kappa) {
            Rational t = rng.dyadic(6);
            bool spaced = true;
            for (const auto& s : params) spaced = spaced && abs(t - s) >= Rational(1, 8);
            if (spaced) params.push_back(t);
        }
        UniPoly<Rational> m = UniPoly<Rational>::constant(1);
        for (const auto& t : params) m = m * UniPoly<Rational>{Rational(-t), Rational(1)};
        auto factor = [&] {
            std::vector<Rational> coeffs(c - 1 - kappa + 1);
            for (auto& x : coeffs) x = rng.dyadic();
            return UniPoly<Rational>(std::move(coeffs));
        };
        auto integrate = [&](const UniPoly<Rational>& f) {
            std::vector<Rational> out(f.formal_degree() + 2);
            out[0] = rng.dyadic();
            for (int k = 0; k <= f.formal_degree(); ++k) out[k + 1] = f[k] / (k + 1);
            return UniPoly<Rational>(std::move(out));
        };
        UniPoly<Rational> x = integrate(m * factor());
        UniPoly<Rational> y = integrate(m * factor());
        try {
            RationalCurveParam param({x, y, UniPoly<Rational>{1}});
            if (param.degree() != c) continue;
            SingularityData sd = locate_singularities(param);
            if (sd.kappa() != kappa) continue;
            bool on_conic = false;
            for (const auto& nd : sd.nodes) {
                Point3 q = nd.point;
                on_conic = on_conic || std::abs(q[0] * q[0] + q[1] * q[1]) <= 1e-6;
            }
            for (const auto& cd : sd.cusps) {
                Point3 q = cd.point;
                on_conic = on_conic || std::abs(q[0] * q[0] + q[1] * q[1]) <= 1e-6;
            }
            if (on_conic) continue;
            // general position: singular points well apart in the plane
            std::vector<Point3> sing;
            for (const auto& nd : sd.nodes) sing.push_back(nd.point);
            for (const auto& cd : sd.cusps) sing.push_back(cd.point);
            bool crowded = false;
            for (size_t i = 0; i < sing.size(); ++i)
                for (size_t j = i + 1; j < sing.size(); ++j)
                    crowded = crowded || projective_distance(sing[i], sing[j]) < kMinSingularSeparation;
            if (crowded) continue;
            Implicitization imp = implicitize_report(param);
            if (!imp.birational || imp.poly.degree() != c) continue;
            TriPoly<Rational> prim = primitive_part(imp.poly);
            if (std::abs(prim.top_w().get_d()) <= 1e-8 * prim.max_abs()) continue;
            return {param, sd, imp.poly, attempt};
        } catch (const Error& e) {
            if (e.code() != ErrorCode::CensusMismatch && e.code() != ErrorCode::ClusterAmbiguity &&
                e.code() != ErrorCode::NonConvergence && e.code() != ErrorCode::DegenerateCurve)
                throw;
        }
    }
    throw Error(ErrorCode::GenerationExhausted, "no acceptable curve after 50 rejections");
}

RationalCurveParam random_rational_curve(int c, int kappa, std::uint64_t seed) {
    return generate_curve(c, kappa, seed).param;
}

}  // namespace confocal
