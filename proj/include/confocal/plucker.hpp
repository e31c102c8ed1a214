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

#ifndef CONFOCAL_PLUCKER_HPP
#define CONFOCAL_PLUCKER_HPP

#include <string_view>

namespace confocal {

/// Degree d, genus g and class c of a plane curve with delta nodes and kappa cusps.
struct PluckerInvariants {
    int d = 0;
    int g = 0;
    int c = 0;
    int delta = 0;
    int kappa = 0;
};

/// Throws Inadmissible when a count is negative or the class or genus would be.
PluckerInvariants plucker_invariants(int d, int delta, int kappa);

/// d(d-1) - 2 delta - 3 kappa.
int class_of(int d, int delta, int kappa);
/// (d-1)(d-2)/2 - delta - kappa.
int genus_of(int d, int delta, int kappa);

/// d - g - c + 1, negative values returned as they are.
int expected_confocal_dim(int d, int g, int c);
/// max(0, d - g - c + 1).
int expected_confocal_dim_clamped(int d, int g, int c);

/// Smooth degree-d curves less 2c conditions: -d(3d - 7)/2. Requires d >= 2.
int smooth_curve_count(int d);
/// Rational curves of maximal class 2(d-1): 3 - d. Requires d >= 2.
int maximal_class_rational_dim(int d);
/// Rational curves of degree d with kappa cusps and class 2(d-1) - kappa: 3 - d + kappa.
int nodal_cuspidal_dim(int d, int kappa);
/// Least kappa with nodal_cuspidal_dim(d, kappa) >= 1, namely d - 2.
int nodal_cuspidal_threshold(int d);

enum class VanishingSide { H0, H1 };

constexpr std::string_view to_string(VanishingSide s) noexcept { return s == VanishingSide::H0 ? "H0" : "H1"; }

struct RiemannRochAlternative {
    /// max(0, b - g + 1).
    int expected_h0 = 0;
    /// H0 when b <= g - 1, otherwise H1.
    VanishingSide which_vanishing = VanishingSide::H0;
    /// b < 0 or b >= 2g - 1: the vanishing holds for every line bundle of degree b.
    bool automatic = false;
};

RiemannRochAlternative riemann_roch_alternative(int b, int g);

}  // namespace confocal

#endif  // CONFOCAL_PLUCKER_HPP
