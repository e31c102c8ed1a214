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

#include "confocal/plucker.hpp"

#include <algorithm>
#include <string>

#include "confocal/errors.hpp"

namespace confocal {

namespace {

void require_degree(int d) {
    if (d < 2) throw Error(ErrorCode::Inadmissible, "degree must be at least 2, got " + std::to_string(d));
}

}  // namespace

PluckerInvariants plucker_invariants(int d, int delta, int kappa) {
    if (d < 1 || delta < 0 || kappa < 0)
        throw Error(ErrorCode::Inadmissible, "degree must be positive and singularity counts non-negative");
    PluckerInvariants inv{d, (d - 1) * (d - 2) / 2 - delta - kappa, d * (d - 1) - 2 * delta - 3 * kappa, delta, kappa};
    if (inv.g < 0)
        throw Error(ErrorCode::Inadmissible, "too many singularities: genus " + std::to_string(inv.g));
    if (inv.c < 0) throw Error(ErrorCode::Inadmissible, "negative class " + std::to_string(inv.c));
    return inv;
}

int class_of(int d, int delta, int kappa) { return plucker_invariants(d, delta, kappa).c; }

int genus_of(int d, int delta, int kappa) { return plucker_invariants(d, delta, kappa).g; }

int expected_confocal_dim(int d, int g, int c) { return d - g - c + 1; }

int expected_confocal_dim_clamped(int d, int g, int c) { return std::max(0, expected_confocal_dim(d, g, c)); }

int smooth_curve_count(int d) {
    require_degree(d);
    return -d * (3 * d - 7) / 2;
}

int maximal_class_rational_dim(int d) {
    require_degree(d);
    return 3 - d;
}

int nodal_cuspidal_dim(int d, int kappa) {
    require_degree(d);
    if (kappa < 0) throw Error(ErrorCode::Inadmissible, "negative cusp count");
    return 3 - d + kappa;
}

int nodal_cuspidal_threshold(int d) {
    require_degree(d);
    return d - 2;
}

RiemannRochAlternative riemann_roch_alternative(int b, int g) {
    if (g < 0) throw Error(ErrorCode::Inadmissible, "negative genus");
    RiemannRochAlternative r;
    r.expected_h0 = std::max(0, b - g + 1);
    r.which_vanishing = b <= g - 1 ? VanishingSide::H0 : VanishingSide::H1;
    r.automatic = b < 0 || b >= 2 * g - 1;
    return r;
}

}  // namespace confocal
