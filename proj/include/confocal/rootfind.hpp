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

#ifndef CONFOCAL_ROOTFIND_HPP
#define CONFOCAL_ROOTFIND_HPP

#include <vector>

#include "confocal/unipoly.hpp"

namespace confocal {

struct Root {
    Complex value;
    int multiplicity = 1;
};

struct RootSet {
    std::vector<Root> roots;
    /// Leading coefficients stripped as negligible before iterating.
    int degree_drop = 0;
    /// max |p(r)| / |lead| over simple roots.
    double residual = 0.0;
    /// Coefficient-wise error of lead * prod (w - r)^m against p, relative to max |p_k|.
    double reconstruction_error = 0.0;
    int iterations = 0;

    int count() const;
    /// Roots repeated according to multiplicity.
    std::vector<Complex> expanded() const;
};

struct RootOptions {
    double tol = 1e-9;
    int max_iterations = 200;
    /// Leading coefficients below drop_tol * max |p_k| count as zero.
    double drop_tol = 1e-13;
};

/// Raised when simultaneous iteration hits the cap; carries the unconverged estimates.
class NonConvergenceError : public Error {
   public:
    NonConvergenceError(const std::string& what, RootSet partial)
        : Error(ErrorCode::NonConvergence, what), partial_(std::move(partial)) {}
    const RootSet& partial() const { return partial_; }

   private:
    RootSet partial_;
};

/// All roots by Aberth-Ehrlich iteration, Newton-polished, clustered into multiplicities.
/// Throws ZeroPolynomial for p == 0.
RootSet find_roots(const UniPoly<Complex>& p, const RootOptions& opts = {});
RootSet find_roots(const UniPoly<Complex>& p, double tol);

struct FocusCandidate {
    Complex x;
    Complex y;
    bool is_real = false;
    int multiplicity = 1;
};

/// The c^2 grid of intersections of one isotropic tangent from each circular point:
/// x = (r+ + r-)/2, y = -i (r+ - r-)/2, multiplicity m+ * m-.
std::vector<FocusCandidate> match_focal_pairs(const RootSet& plus, const RootSet& minus, double tol = 1e-9);

/// Minimum-total-cost assignment (Hungarian); returns the largest matched distance.
/// Infinite when the sizes differ.
double matching_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace confocal

#endif  // CONFOCAL_ROOTFIND_HPP
