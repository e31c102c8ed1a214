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

#ifndef CONFOCAL_SCALAR_HPP
#define CONFOCAL_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

namespace confocal {

/// Arbitrary precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;
using Complex = std::complex<double>;

/// Absolute tolerance on imaginary parts for deciding that a float polynomial is real.
inline constexpr double kRealTolerance = 1e-10;

/// Nearest double; mpq_class::get_d truncates toward zero.
double to_double(const Rational& x);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool is_exact = true;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Complex to_complex(const Rational& x) { return {to_double(x), 0.0}; }
    static Rational conj(const Rational& x) { return x; }
    static double abs(const Rational& x) { return std::abs(to_double(x)); }
    static bool is_real(const Rational&, double) { return true; }
    static bool is_finite(const Rational&) { return true; }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool is_exact = false;
    static bool is_zero(const Complex& x) { return x == Complex(0.0, 0.0); }
    static Complex to_complex(const Complex& x) { return x; }
    static Complex conj(const Complex& x) { return std::conj(x); }
    static double abs(const Complex& x) { return std::abs(x); }
    static bool is_real(const Complex& x, double tol) { return std::abs(x.imag()) <= tol; }
    static bool is_finite(const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); }
};

template <class S>
Complex to_complex(const S& x) {
    return ScalarTraits<S>::to_complex(x);
}

/// Converts a coefficient to the evaluation type: identity, widening to complex, or the real part.
template <class T, class S>
T scalar_cast(const S& x) {
    if constexpr (std::is_same_v<T, S>)
        return x;
    else if constexpr (std::is_floating_point_v<T>)
        return static_cast<T>(ScalarTraits<S>::to_complex(x).real());
    else
        return T(ScalarTraits<S>::to_complex(x));
}

/// Parses "p/q", an integer, or a decimal literal such as "-1.25e-3" exactly.
Rational parse_rational(std::string_view text);

/// Continued-fraction snap: the convergent of lowest denominator within tol*max(1,|x|).
Rational rationalize(double x, double tol = 1e-12);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);

/// Shortest round-tripping decimal representation.
std::string to_decimal_string(double x);

}  // namespace confocal

#endif  // CONFOCAL_SCALAR_HPP
