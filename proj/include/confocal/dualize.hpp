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

#ifndef CONFOCAL_DUALIZE_HPP
#define CONFOCAL_DUALIZE_HPP

#include <array>
#include <utility>

#include "confocal/bipoly.hpp"
#include "confocal/focal.hpp"
#include "confocal/tripoly.hpp"

namespace confocal {

/// Rational plane curve t -> (A(t) : B(t) : C(t)) with exact coefficients.
/// Construction divides out the common gcd of the components.
class RationalCurveParam {
   public:
    /// Throws DegenerateCurve if the components are all zero or the image is a point.
    explicit RationalCurveParam(std::array<UniPoly<Rational>, 3> components);

    const UniPoly<Rational>& operator[](int k) const { return comps_[k]; }
    const std::array<UniPoly<Rational>, 3>& components() const { return comps_; }
    /// Nominal degree: the largest component degree.
    int degree() const;

    std::array<Complex, 3> at(Complex t) const;
    std::array<UniPoly<Complex>, 3> to_complex() const;
    std::array<UniPoly<Rational>, 3> derivative() const;

    friend bool operator==(const RationalCurveParam&, const RationalCurveParam&) = default;

   private:
    std::array<UniPoly<Rational>, 3> comps_;
};

/// Componentwise cross product of two triples of polynomials.
std::array<UniPoly<Rational>, 3> cross(const std::array<UniPoly<Rational>, 3>& a,
                                       const std::array<UniPoly<Rational>, 3>& b);

/// Tangent lines phi x phi', reduced by the gcd of the three components.
/// Throws DegenerateCurve for a line.
RationalCurveParam dual_param(const RationalCurveParam& p);

struct Implicitization {
    TriPoly<Rational> poly;
    /// False when the parameterization covers its image more than once; poly is then a power.
    bool birational = true;
};

/// Res_t(x C - A, y C - B) homogenized, content removed, z^n coefficient scaled to 1 when nonzero.
Implicitization implicitize_report(const RationalCurveParam& p);
TriPoly<Rational> implicitize(const RationalCurveParam& p);

/// ((A(s)C(t) - A(t)C(s))/(s - t), (B(s)C(t) - B(t)C(s))/(s - t)).
std::pair<BiPoly<Rational>, BiPoly<Rational>> divided_difference_pair(const RationalCurveParam& p);

/// Exact Monte Carlo smoothness test: after a random rational change of coordinates,
/// gcd(Res_x(f_x, f_y), Res_x(f_x, f_z)) = 1 proves {f = 0} smooth. False after five
/// inconclusive trials.
bool probe_smooth(const TriPoly<Rational>& f, std::uint64_t seed = 0);

/// Discriminant in r of the binary form f(r z -+ i y, y, z); its roots are the r+ (sign plus)
/// or r- values of isotropic tangents of the smooth curve {f = 0}. Degree d(d-1).
/// Throws SingularInputRejected if the smoothness probe fails.
UniPoly<Complex> isotropic_focal_poly(const TriPoly<Rational>& f, Isotropic sign);

/// Focal divisor of a smooth primal curve through the isotropic discriminant. A multiple
/// root is flagged singular when it comes from the tangent at a circular point on the curve.
FocalResult primal_focal_divisor(const TriPoly<Rational>& f, double tol = 1e-9);

}  // namespace confocal

#endif  // CONFOCAL_DUALIZE_HPP
