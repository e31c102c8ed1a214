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

#ifndef CONFOCAL_FOCAL_HPP
#define CONFOCAL_FOCAL_HPP

#include <array>
#include <vector>

#include "confocal/rootfind.hpp"
#include "confocal/tripoly.hpp"

namespace confocal {

struct FocalEntry {
    Complex root;
    int multiplicity = 1;
    /// Multiple root coming from a tangency of the isotropic line with {g = 0}.
    bool singular = false;
};

struct FocalDivisor {
    /// Sorted by (Re, Im).
    std::vector<FocalEntry> entries;
    /// Foci lost at infinity (vanishing top coefficients of G+).
    int degree_drop = 0;

    int degree() const;
    std::vector<Complex> expanded() const;
};

struct FocalDiagnostics {
    bool tangent_at_infinity = false;
    /// Index 0 for (1:i:0), index 1 for (1:-i:0).
    std::array<bool, 2> passes_circular_points{false, false};
    std::vector<Complex> multiple_focal_roots;
    /// Multiple roots where the isotropic line runs through a singular point of {g = 0};
    /// reported without classifying the focus.
    std::vector<Complex> singular_point_roots;
    double residual = 0.0;
    double reconstruction_error = 0.0;
};

struct FocalResult {
    FocalDivisor divisor;
    FocalDiagnostics diagnostics;
};

struct RealFocus {
    double x = 0.0;
    double y = 0.0;
    int multiplicity = 1;
};

/// Focal divisor of a real dual curve g from the roots of G+(w) = g(-1, -i, w).
/// Throws DegenerateFocalPolynomial if G+ vanishes identically.
FocalResult focal_divisor(const TriPoly<Complex>& g, double tol = 1e-9);
FocalResult focal_divisor(const TriPoly<Rational>& g, double tol = 1e-9);

/// Focal divisor from a focal polynomial directly, without tangency classification.
FocalDivisor focal_divisor_of(const UniPoly<Complex>& g_plus, double tol = 1e-9);
FocalDivisor focal_divisor_of(const RootSet& roots);

/// Each root a + ib becomes the real point (a, b).
std::vector<RealFocus> real_foci(const FocalDivisor& fd);

struct ConfocalReport {
    bool confocal = false;
    /// Max-norm distance between the normalized G+ coefficient vectors.
    double coefficient_distance = 0.0;
    /// Largest matched distance between the two focal divisors.
    double matching_distance = 0.0;
};

/// Throws NormalizationFailure if either w^c coefficient vanishes.
ConfocalReport are_confocal(const TriPoly<Complex>& g1, const TriPoly<Complex>& g2, double tol = 1e-9);
ConfocalReport are_confocal(const TriPoly<Rational>& g1, const TriPoly<Rational>& g2, double tol = 1e-9);

}  // namespace confocal

#endif  // CONFOCAL_FOCAL_HPP
