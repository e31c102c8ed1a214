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

#include "confocal/focal.hpp"

#include <algorithm>

namespace confocal {

namespace {

constexpr double kSmoothThreshold = 1e-6;

bool is_negligible(const UniPoly<Complex>& p, double scale) {
    for (const auto& c : p.coeffs())
        if (std::abs(c) > 1e-14 * scale) return false;
    return true;
}

Complex isotropic_v(Isotropic sign) { return sign == Isotropic::plus ? Complex(0, -1) : Complex(0, 1); }

// True when (-1, -+i, r) is a smooth point of {g = 0}, judged by the relative gradient size.
bool smooth_at(const TriPoly<Complex>& g, Isotropic sign, Complex r) {
    std::array<Complex, 3> pt{Complex(-1), isotropic_v(sign), r};
    double norm = std::max({1.0, std::abs(r)});
    auto grad = gradient_at(g, pt);
    double gnorm = std::max({std::abs(grad[0]), std::abs(grad[1]), std::abs(grad[2])});
    double scale = g.max_abs() * g.degree() * std::pow(norm, g.degree() - 1) * monomial_count(g.degree());
    return gnorm > kSmoothThreshold * scale;
}

std::vector<FocalEntry> entries_of(const RootSet& rs) {
    std::vector<FocalEntry> out;
    for (const auto& r : rs.roots) out.push_back({r.value, r.multiplicity, false});
    std::sort(out.begin(), out.end(), [](const FocalEntry& a, const FocalEntry& b) {
        if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
        return a.root.imag() < b.root.imag();
    });
    return out;
}

}  // namespace

int FocalDivisor::degree() const {
    int n = 0;
    for (const auto& e : entries) n += e.multiplicity;
    return n;
}

std::vector<Complex> FocalDivisor::expanded() const {
    std::vector<Complex> out;
    for (const auto& e : entries)
        for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.root);
    return out;
}

FocalDivisor focal_divisor_of(const UniPoly<Complex>& g_plus, double tol) {
    double scale = 0.0;
    for (const auto& c : g_plus.coeffs()) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw Error(ErrorCode::DegenerateFocalPolynomial, "focal polynomial vanishes identically");
    return focal_divisor_of(find_roots(g_plus, tol));
}

FocalDivisor focal_divisor_of(const RootSet& roots) { return {entries_of(roots), roots.degree_drop}; }

FocalResult focal_divisor(const TriPoly<Complex>& g, double tol) {
    if (g.degree() < 1) throw Error(ErrorCode::InvalidArgument, "focal divisor needs degree >= 1");
    if (!g.is_real()) throw Error(ErrorCode::InvalidArgument, "focal divisor needs a real curve");
    const TriPoly<Complex> gr = real_part(g);
    const UniPoly<Complex> gp = restrict_isotropic(gr, Isotropic::plus);
    if (is_negligible(gp, gr.max_abs()))
        throw Error(ErrorCode::DegenerateFocalPolynomial, "G+ vanishes: the dual curve contains the line u + iv = 0");
    RootSet rs = find_roots(gp, tol);

    FocalResult out;
    out.divisor = {entries_of(rs), rs.degree_drop};
    out.diagnostics.tangent_at_infinity = rs.degree_drop > 0;
    out.diagnostics.residual = rs.residual;
    out.diagnostics.reconstruction_error = rs.reconstruction_error;
    for (auto& e : out.divisor.entries) {
        if (e.multiplicity < 2) continue;
        out.diagnostics.multiple_focal_roots.push_back(e.root);
        if (smooth_at(gr, Isotropic::plus, e.root)) {
            e.singular = true;
            out.diagnostics.passes_circular_points[0] = true;
        } else {
            out.diagnostics.singular_point_roots.push_back(e.root);
        }
    }
    // G- is the conjugate of G+ for real g.
    out.diagnostics.passes_circular_points[1] = out.diagnostics.passes_circular_points[0];
    return out;
}

FocalResult focal_divisor(const TriPoly<Rational>& g, double tol) { return focal_divisor(to_complex(g), tol); }

std::vector<RealFocus> real_foci(const FocalDivisor& fd) {
    std::vector<RealFocus> out;
    for (const auto& e : fd.entries) out.push_back({e.root.real(), e.root.imag(), e.multiplicity});
    return out;
}

ConfocalReport are_confocal(const TriPoly<Complex>& g1, const TriPoly<Complex>& g2, double tol) {
    if (g1.degree() != g2.degree()) return {false, std::numeric_limits<double>::infinity(),
                                            std::numeric_limits<double>::infinity()};
    auto n1 = normalize_chart(g1);
    auto n2 = normalize_chart(g2);
    auto p1 = restrict_isotropic(n1, Isotropic::plus);
    auto p2 = restrict_isotropic(n2, Isotropic::plus);
    ConfocalReport out;
    for (int k = 0; k <= g1.degree(); ++k)
        out.coefficient_distance = std::max(out.coefficient_distance, std::abs(p1.coeff(k) - p2.coeff(k)));
    out.confocal = out.coefficient_distance <= tol;
    out.matching_distance = matching_distance(find_roots(p1, tol).expanded(), find_roots(p2, tol).expanded());
    return out;
}

ConfocalReport are_confocal(const TriPoly<Rational>& g1, const TriPoly<Rational>& g2, double tol) {
    if (g1.degree() == g2.degree()) {
        // exact zero test of the chart coefficient before converting
        if (sgn(g1.top_w()) == 0 || sgn(g2.top_w()) == 0)
            throw Error(ErrorCode::NormalizationFailure, "w^c coefficient vanishes");
    }
    return are_confocal(to_complex(g1), to_complex(g2), tol);
}

}  // namespace confocal
