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

#ifndef CONFOCAL_RATGEN_HPP
#define CONFOCAL_RATGEN_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "confocal/dualize.hpp"
#include "confocal/random.hpp"

namespace confocal {

using Point3 = std::array<Complex, 3>;

struct NodeData {
    /// Preimage parameters, s before t by (Re, Im).
    Complex s;
    Complex t;
    /// Image point scaled so its largest component is 1.
    Point3 point;
    /// Projective distance between psi(s) and psi(t).
    double residual = 0.0;
};

struct CuspData {
    Complex t;
    Point3 point;
    /// psi''(t), the direction the cuspidal branch leaves along.
    Point3 direction;
    double residual = 0.0;
};

struct SingularityData {
    std::vector<NodeData> nodes;
    std::vector<CuspData> cusps;
    /// Largest node or cusp residual.
    double residual = 0.0;

    int delta() const { return static_cast<int>(nodes.size()); }
    int kappa() const { return static_cast<int>(cusps.size()); }
};

/// Sine of the angle between two nonzero complex 3-vectors.
double projective_distance(const Point3& a, const Point3& b);

/// Nodes and cusps of a rational curve. Throws CensusMismatch when delta + kappa differs
/// from (n-1)(n-2)/2 or a singularity is not an ordinary node or cusp, and ClusterAmbiguity
/// when two singularities cannot be separated at tol.
SingularityData locate_singularities(const RationalCurveParam& p, double tol = 1e-8);

struct GeneratedCurve {
    RationalCurveParam param;
    SingularityData singularities;
    /// Implicit equation, w^c coefficient scaled to 1.
    TriPoly<Rational> implicit;
    int rejections = 0;
};

/// Random rational curve of degree c with kappa planted cusps at real parameters.
/// Draws whose singular points lie within projective distance 1e-2 of each other are rejected.
/// Throws GenerationExhausted after 50 rejected draws, or at once when kappa > c - 2
/// (the planted construction then degenerates to a line).
GeneratedCurve generate_curve(int c, int kappa, std::uint64_t seed);
RationalCurveParam random_rational_curve(int c, int kappa, std::uint64_t seed);

/// Random degree-n parameterization with generic dyadic coefficients.
RationalCurveParam random_param(int n, Rng& rng);

}  // namespace confocal

#endif  // CONFOCAL_RATGEN_HPP
