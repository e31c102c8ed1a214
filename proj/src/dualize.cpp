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

#include "confocal/dualize.hpp"

#include <numbers>

#include "confocal/random.hpp"
#include "confocal/resultant.hpp"

namespace confocal {

namespace {

UniPoly<Rational> gcd3(const std::array<UniPoly<Rational>, 3>& c) { return gcd(gcd(c[0], c[1]), c[2]); }

// Coefficient (i, j) of the dehomogenized (z = 1) form, as a BiPoly in (x, y).
BiPoly<Rational> dehomogenize(const TriPoly<Rational>& f) {
    const int d = f.degree();
    BiPoly<Rational> out(d + 1, d + 1);
    int idx = 0;
    for (const auto& e : monomials(d)) out.at(e.i, e.j) += f[idx++];
    return out.trimmed();
}

TriPoly<Rational> homogenize(const BiPoly<Rational>& r, int degree) {
    TriPoly<Rational> out(degree);
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) {
            Rational c = r.coeff(i, j);
            if (sgn(c) != 0) out.coeff(i, j, degree - i - j) = c;
        }
    return out;
}

// Scales all three components by one rational so they become integral with unit content.
std::array<UniPoly<Rational>, 3> common_primitive(std::array<UniPoly<Rational>, 3> c) {
    mpz_class den = 1, content = 0;
    for (const auto& p : c)
        for (const auto& x : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& p : c)
        for (const auto& x : p.coeffs()) {
            mpz_class v = x.get_num() * (den / x.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        }
    if (content == 0) return c;
    Rational scale(den, content);
    scale.canonicalize();
    for (auto& p : c) p = scale * p;
    return c;
}

bool is_squarefree_on_line(const TriPoly<Rational>& f, Rng& rng) {
    std::array<UniPoly<Rational>, 3> line{UniPoly<Rational>{rng.dyadic(), rng.dyadic()},
                                          UniPoly<Rational>{rng.dyadic(), rng.dyadic()}, UniPoly<Rational>{1}};
    UniPoly<Rational> r = compose(f, line);
    if (r.degree() < 1) return false;
    return gcd(r, derivative(r)).degree() == 0;
}

Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// No singular point on z = 0: the three partials restricted to the line share no root.
bool no_singular_point_at_infinity(const std::array<TriPoly<Rational>, 3>& grad) {
    const std::array<UniPoly<Rational>, 3> chart{UniPoly<Rational>{0, 1}, UniPoly<Rational>{1}, UniPoly<Rational>{}};
    std::array<UniPoly<Rational>, 3> onx;  // partial(x, 1, 0)
    for (int a = 0; a < 3; ++a) onx[a] = compose(grad[a], chart);
    if (gcd3(onx).degree() != 0) return false;
    // the point (1 : 0 : 0), missed by the chart y = 1
    for (int a = 0; a < 3; ++a)
        if (sgn(grad[a](Rational(1), Rational(0), Rational(0))) != 0) return true;
    return false;
}

bool smooth_trial(const TriPoly<Rational>& f, Rng& rng) {
    std::array<std::array<Rational, 3>, 3> m;
    do {
        for (auto& row : m)
            for (auto& x : row) x = Rational(static_cast<long>(rng.next() % 13) - 6);
    } while (sgn(det3(m)) == 0);
    TriPoly<Rational> g = compose_linear(f, m);
    std::array<TriPoly<Rational>, 3> grad{derivative(g, Var::u), derivative(g, Var::v), derivative(g, Var::w)};
    if (!no_singular_point_at_infinity(grad)) return false;
    try {
        BiPoly<Rational> fx = dehomogenize(grad[0]), fy = dehomogenize(grad[1]), fz = dehomogenize(grad[2]);
        // A constant leading x-coefficient makes Res_x vanish exactly over common roots.
        if (fx.degree_s() != f.degree() - 1) return false;
        UniPoly<Rational> r1 = resultant(fx, fy, Eliminate::s);
        UniPoly<Rational> r2 = resultant(fx, fz, Eliminate::s);
        if (r1.is_zero() || r2.is_zero()) return false;
        return gcd(r1, r2).degree() == 0;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ZeroPolynomial) return false;
        throw;
    }
}

// Coefficients in y^l z^(d-l) of f(r z + sigma y, y, z) at a numeric r.
UniPoly<Complex> isotropic_binary_form(const TriPoly<Complex>& f, Complex r, Complex sigma) {
    const int d = f.degree();
    std::vector<Complex> out(d + 1, Complex(0));
    std::vector<std::vector<double>> binom(d + 1, std::vector<double>(d + 1, 0.0));
    for (int n = 0; n <= d; ++n) {
        binom[n][0] = 1.0;
        for (int k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0.0);
    }
    int idx = 0;
    for (const auto& e : monomials(d)) {
        Complex c = f[idx++];
        if (c == Complex(0)) continue;
        for (int l = 0; l <= e.i; ++l)
            out[l + e.j] += c * binom[e.i][l] * std::pow(sigma, l) * std::pow(r, e.i - l);
    }
    return UniPoly<Complex>(std::move(out));
}

}  // namespace

RationalCurveParam::RationalCurveParam(std::array<UniPoly<Rational>, 3> components) {
    UniPoly<Rational> g = gcd3(components);
    if (g.is_zero()) throw Error(ErrorCode::DegenerateCurve, "all components vanish");
    for (int k = 0; k < 3; ++k) comps_[k] = ring_exact_div(components[k].trimmed(), g).trimmed();
    if (degree() < 1) throw Error(ErrorCode::DegenerateCurve, "parameterization image is a point");
}

int RationalCurveParam::degree() const {
    return std::max({comps_[0].degree(), comps_[1].degree(), comps_[2].degree()});
}

std::array<Complex, 3> RationalCurveParam::at(Complex t) const { return {comps_[0](t), comps_[1](t), comps_[2](t)}; }

std::array<UniPoly<Complex>, 3> RationalCurveParam::to_complex() const {
    return {confocal::to_complex(comps_[0]), confocal::to_complex(comps_[1]), confocal::to_complex(comps_[2])};
}

std::array<UniPoly<Rational>, 3> RationalCurveParam::derivative() const {
    return {confocal::derivative(comps_[0]), confocal::derivative(comps_[1]), confocal::derivative(comps_[2])};
}

std::array<UniPoly<Rational>, 3> cross(const std::array<UniPoly<Rational>, 3>& a,
                                       const std::array<UniPoly<Rational>, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

RationalCurveParam dual_param(const RationalCurveParam& p) {
    auto w = cross(p.components(), p.derivative());
    if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero())
        throw Error(ErrorCode::DegenerateCurve, "a line has no dual curve");
    w = common_primitive(w);
    try {
        return RationalCurveParam(w);
    } catch (const Error&) {
        throw Error(ErrorCode::DegenerateCurve, "tangent lines are constant: the curve is a line");
    }
}

Implicitization implicitize_report(const RationalCurveParam& p) {
    const auto& a = p[0];
    const auto& b = p[1];
    const auto& c = p[2];
    if (c.is_zero()) return {TriPoly<Rational>::linear(0, 0, 1), true};
    const int n = p.degree();
    std::vector<BiPoly<Rational>> px(n + 1), py(n + 1);
    for (int k = 0; k <= n; ++k) {
        px[k] = BiPoly<Rational>::monomial(1, 0, c.coeff(k)) - BiPoly<Rational>::constant(a.coeff(k));
        py[k] = BiPoly<Rational>::monomial(0, 1, c.coeff(k)) - BiPoly<Rational>::constant(b.coeff(k));
    }
    BiPoly<Rational> r = resultant(px, py, BiPoly<Rational>::constant(Rational(1))).trimmed();
    const int degree = r.total_degree();
    if (degree < 1) throw Error(ErrorCode::DegenerateCurve, "implicit equation is constant");
    Implicitization out;
    out.poly = primitive_part(homogenize(r, degree));
    if (sgn(out.poly.top_w()) != 0) out.poly = normalize_chart(out.poly);
    Rng rng(0x5eed, static_cast<std::uint64_t>(degree));
    out.birational = false;
    for (int trial = 0; trial < 3 && !out.birational; ++trial) out.birational = is_squarefree_on_line(out.poly, rng);
    return out;
}

TriPoly<Rational> implicitize(const RationalCurveParam& p) { return implicitize_report(p).poly; }

std::pair<BiPoly<Rational>, BiPoly<Rational>> divided_difference_pair(const RationalCurveParam& p) {
    return {divided_difference(p[0], p[2]), divided_difference(p[1], p[2])};
}

bool probe_smooth(const TriPoly<Rational>& f, std::uint64_t seed) {
    if (f.degree() < 1) throw Error(ErrorCode::DegreeTooLow, "smoothness probe needs degree >= 1");
    if (f.degree() == 1) return !f.is_zero();
    Rng rng(seed, 0x50100);
    for (int trial = 0; trial < 5; ++trial)
        if (smooth_trial(f, rng)) return true;
    return false;
}

UniPoly<Complex> isotropic_focal_poly(const TriPoly<Rational>& f, Isotropic sign) {
    const int d = f.degree();
    if (d < 2) throw Error(ErrorCode::DegreeTooLow, "isotropic discriminant needs degree >= 2");
    if (!probe_smooth(f)) throw Error(ErrorCode::SingularInputRejected, "curve failed the smoothness probe");
    const TriPoly<Complex> fc = to_complex(f);
    const Complex sigma = sign == Isotropic::plus ? Complex(0, -1) : Complex(0, 1);
    const int n = d * (d - 1);
    const int samples = n + 1;
    std::vector<Complex> values(samples);
    for (int k = 0; k < samples; ++k) {
        Complex r = std::polar(1.0, 2.0 * std::numbers::pi * k / samples);
        values[k] = discriminant_binary(isotropic_binary_form(fc, r, sigma));
    }
    std::vector<Complex> coeffs(samples, Complex(0));
    for (int m = 0; m < samples; ++m) {
        for (int k = 0; k < samples; ++k)
            coeffs[m] += values[k] * std::polar(1.0, -2.0 * std::numbers::pi * k * m / samples);
        coeffs[m] /= static_cast<double>(samples);
    }
    return UniPoly<Complex>(std::move(coeffs));
}

FocalResult primal_focal_divisor(const TriPoly<Rational>& f, double tol) {
    UniPoly<Complex> gp = isotropic_focal_poly(f, Isotropic::plus);
    double scale = 0.0;
    for (auto c : gp.coeffs()) scale = std::max(scale, std::abs(c));
    // interpolation noise in vanishing top coefficients
    std::vector<Complex> cleaned = gp.coeffs();
    for (auto& c : cleaned)
        if (std::abs(c) <= 1e-12 * scale) c = 0.0;
    RootSet rs = find_roots(UniPoly<Complex>(cleaned), tol);
    FocalResult out;
    out.divisor = focal_divisor_of(rs);
    out.diagnostics.tangent_at_infinity = rs.degree_drop > 0;
    out.diagnostics.residual = rs.residual;
    out.diagnostics.reconstruction_error = rs.reconstruction_error;

    const TriPoly<Complex> fc = to_complex(f);
    const std::array<Complex, 3> circular{Complex(1), Complex(0, 1), Complex(0)};
    const bool through = std::abs(fc(circular[0], circular[1], circular[2])) <= 1e-12 * fc.max_abs();
    out.diagnostics.passes_circular_points = {through, through};
    Complex tangent_root = std::numeric_limits<double>::quiet_NaN();
    if (through) {
        auto grad = gradient_at(fc, circular);
        if (std::abs(grad[0]) > 1e-12 * fc.max_abs()) tangent_root = -grad[2] / grad[0];
    }
    for (auto& e : out.divisor.entries) {
        if (e.multiplicity < 2) continue;
        out.diagnostics.multiple_focal_roots.push_back(e.root);
        if (through && std::abs(e.root - tangent_root) <= 1e-6 * (1.0 + std::abs(tangent_root)))
            e.singular = true;
    }
    return out;
}

}  // namespace confocal
