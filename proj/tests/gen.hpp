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

// Small random generators shared by the property tests.

#ifndef CONFOCAL_TESTS_GEN_HPP
#define CONFOCAL_TESTS_GEN_HPP

#include <random>

#include "confocal/tripoly.hpp"

namespace gen {

using confocal::Complex;
using confocal::Rational;

inline std::mt19937_64& engine() {
    static std::mt19937_64 e(20260101);
    return e;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine());
}

inline int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine()); }

/// Small rational with denominator up to 16.
inline Rational rational() {
    Rational q(integer(-20, 20), integer(1, 16));
    q.canonicalize();
    return q;
}

inline Complex complex() { return {uniform(), uniform()}; }

inline confocal::TriPoly<Rational> tripoly_q(int degree) {
    confocal::TriPoly<Rational> p(degree);
    for (int n = 0; n < p.size(); ++n) p[n] = rational();
    return p;
}

inline confocal::TriPoly<Complex> tripoly_real(int degree) {
    confocal::TriPoly<Complex> p(degree);
    for (int n = 0; n < p.size(); ++n) p[n] = Complex(uniform(), 0.0);
    return p;
}

inline confocal::TriPoly<Complex> tripoly_c(int degree) {
    confocal::TriPoly<Complex> p(degree);
    for (int n = 0; n < p.size(); ++n) p[n] = complex();
    return p;
}

inline confocal::UniPoly<Rational> unipoly_q(int degree) {
    std::vector<Rational> c(degree + 1);
    for (auto& x : c) x = rational();
    if (c.back() == 0) c.back() = 1;
    return confocal::UniPoly<Rational>(std::move(c));
}

/// Max-abs coefficient difference, with zero padding.
template <class A, class B>
double coeff_distance(const confocal::UniPoly<A>& a, const confocal::UniPoly<B>& b) {
    double m = 0.0;
    int n = std::max(a.formal_degree(), b.formal_degree());
    for (int k = 0; k <= n; ++k)
        m = std::max(m, std::abs(confocal::to_complex(a.coeff(k)) - confocal::to_complex(b.coeff(k))));
    return m;
}

}  // namespace gen

#endif  // CONFOCAL_TESTS_GEN_HPP
