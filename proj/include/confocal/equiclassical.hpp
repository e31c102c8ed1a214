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

#ifndef CONFOCAL_EQUICLASSICAL_HPP
#define CONFOCAL_EQUICLASSICAL_HPP

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "confocal/focal.hpp"
#include "confocal/ratgen.hpp"
#include "confocal/tripoly.hpp"

namespace confocal {

struct SchemeNode {
    Point3 point;
    /// Preimage parameters when known (parameterized input).
    Complex s = 0.0;
    Complex t = 0.0;
};

struct SchemeCusp {
    Point3 point;
    /// Second derivative of the parameterization at the cusp parameter.
    Point3 direction;
    Complex t = 0.0;
};

/// Zero-dimensional scheme of conditions: one per node, two per cusp.
struct EquiclassicalScheme {
    std::vector<SchemeNode> nodes;
    std::vector<SchemeCusp> cusps;

    int delta() const { return static_cast<int>(nodes.size()); }
    int kappa() const { return static_cast<int>(cusps.size()); }
};

EquiclassicalScheme scheme_from(const SingularityData& sd);

/// Checks node pairs, cusp degeneracy and disjointness from u^2 + v^2 = 0.
/// Throws SchemeOnIsotropicConic or InvalidArgument.
void validate_scheme(const RationalCurveParam& p, const EquiclassicalScheme& z, double tol = 1e-8);

/// Real condition matrix on the degree-c coefficients, w^c slot removed when drop_top.
/// Conjugate singularities contribute the real and imaginary parts of one complex row;
/// points and rows are normalized. Throws SchemeOnIsotropicConic.
Eigen::MatrixXd equiclassical_conditions(const EquiclassicalScheme& z, int degree, bool drop_top = true);
Eigen::MatrixXd equiclassical_conditions(const RationalCurveParam& d_curve, const EquiclassicalScheme& z);

/// Every condition as a complex row, conjugates included.
Eigen::MatrixXcd complex_conditions(const EquiclassicalScheme& z, int degree, bool drop_top = true);

struct RankDecision {
    int rank = 0;
    double threshold = 0.0;
    /// min(sigma_r / threshold, threshold / sigma_{r+1}); infinite on a missing side.
    double gap = 0.0;
};

/// Raised when a singular value is within the ambiguity band of the threshold.
class ToleranceAmbiguityError : public Error {
   public:
    ToleranceAmbiguityError(int low, int high)
        : Error(ErrorCode::ToleranceAmbiguity,
                "rank undecided between " + std::to_string(low) + " and " + std::to_string(high)),
          low_(low),
          high_(high) {}
    int low() const { return low_; }
    int high() const { return high_; }

   private:
    int low_;
    int high_;
};

/// sigma < rel * sigma_max counts as zero; a value within a factor band of the threshold
/// throws ToleranceAmbiguityError.
RankDecision numerical_rank(const Eigen::VectorXd& singular_values, double rel = 1e-8, double band = 10.0);

struct NullSpace {
    /// Orthonormal columns.
    Eigen::MatrixXd basis;
    RankDecision decision;
    Eigen::VectorXd singular_values;
};

NullSpace null_space(const Eigen::MatrixXd& m, double rel = 1e-8);

/// Coefficient vector (monomial order, optionally without w^c) to a TriPoly and back.
TriPoly<Complex> to_tripoly(const Eigen::VectorXd& coeffs, int degree, bool has_top = false);
Eigen::VectorXd to_vector(const TriPoly<Complex>& p, bool drop_top = true);

/// c x (n - 1) complex matrix taking chart coefficients to those of w^0..w^(c-1) in H(-1, -+i, w).
Eigen::MatrixXcd isotropic_restriction_matrix(int degree, Isotropic sign);

struct KernelElement {
    TriPoly<Complex> k;
    TriPoly<Complex> q;
    /// |K - (u^2+v^2) Q| / |K| in max norm.
    double division_residual = 0.0;
    /// |S q| / |q| for the degree c-2 condition system S.
    double shifted_residual = 0.0;
};

struct FocalJacobianReport {
    int c = 0;
    int delta = 0;
    int kappa = 0;
    int genus = 0;
    /// Class of the curve, c(c-1) - 2 delta - 3 kappa.
    int d = 0;
    int tangent_dim = 0;
    int condition_rank = 0;
    double condition_gap = 0.0;
    Eigen::MatrixXd jacobian;
    Eigen::VectorXd singular_values;
    int rank = 0;
    double gap = 0.0;
    /// Rank of [R+ N; R- N] over the complex null space of all conditions.
    int complex_rank = 0;
    std::vector<KernelElement> kernel;
    int shifted_dim = 0;
    int expected_rank = 0;
    int expected_kernel = 0;

    int kernel_dim() const { return tangent_dim - rank; }
    double max_division_residual() const;
    double max_shifted_residual() const;
};

/// Jacobian of the focal map on the span of tangent_basis (each with zero w^c coefficient).
/// Throws ToleranceAmbiguityError when the rank is undecided.
FocalJacobianReport focal_jacobian(const TriPoly<Complex>& g, const std::vector<TriPoly<Complex>>& tangent_basis,
                                   double rel = 1e-8);

/// Tangent space from the scheme, focal Jacobian, kernel factorization and the shifted
/// system cross-check, with the expected values min(2c, c+d-g+1) and m minus that.
FocalJacobianReport analyze_equiclassical(const TriPoly<Complex>& g, const EquiclassicalScheme& z,
                                          double rel = 1e-8);

/// Null-space dimension of the degree-(c-2) condition system.
int shifted_section_dim(const EquiclassicalScheme& z, int c, double rel = 1e-8);

/// prod_j (x_j u + y_j v + w) + (u^2 + v^2) q. Throws TooFewFoci for fewer than two foci.
template <class S>
TriPoly<S> construct_min_class(const std::vector<std::array<S, 2>>& foci, const TriPoly<S>& q) {
    const int c = static_cast<int>(foci.size());
    if (c < 2) throw Error(ErrorCode::TooFewFoci, "minimal-class construction needs at least two foci");
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            if (foci[a] == foci[b]) throw Error(ErrorCode::InvalidArgument, "foci must be distinct");
    if (q.degree() != c - 2) throw Error(ErrorCode::InvalidArgument, "q must have degree c - 2");
    TriPoly<S> g = TriPoly<S>::monomial({0, 0, 0}, S(1));
    for (const auto& f : foci) g = g * TriPoly<S>::linear(f[0], f[1], S(1));
    return g + isotropic_conic<S>() * q;
}

struct ConfocalFamily {
    TriPoly<Complex> base;
    std::vector<TriPoly<Complex>> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
};

/// base + span of (u^2 + v^2) * (monomials of degree c - 2); dimension c(c-1)/2.
ConfocalFamily confocal_family(const TriPoly<Complex>& base);

struct FocalSystem {
    /// 2c x (n - 1) real matrix on the chart coefficients alpha_1.. in monomial order.
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
};

/// Linear conditions for G(-1, -i, w) = prod (w - x_j - i y_j) with w^c coefficient 1.
FocalSystem focal_system(const std::vector<std::array<double, 2>>& foci);

struct SiebeckReport {
    /// Dual equation of the polar of prod (x_j u + y_j v + w) with respect to (0:0:1).
    TriPoly<Complex> polar;
    FocalDivisor foci;
    std::vector<Complex> critical_points;
    double matching_distance = 0.0;
    /// Max coefficient difference between polar(-1, -i, w) and f'(w).
    double identity_residual = 0.0;
};

/// Foci of the polar dual curve against the roots of f' for f = prod (z - z_j).
SiebeckReport siebeck(const std::vector<Complex>& roots, double tol = 1e-9);

}  // namespace confocal

#endif  // CONFOCAL_EQUICLASSICAL_HPP
