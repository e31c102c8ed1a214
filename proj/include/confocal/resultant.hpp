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

#ifndef CONFOCAL_RESULTANT_HPP
#define CONFOCAL_RESULTANT_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "confocal/bipoly.hpp"
#include "confocal/unipoly.hpp"

namespace confocal {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Fraction-free Gaussian elimination. R must provide ring_is_zero and ring_exact_div.
template <class R>
R bareiss_determinant(Matrix<R> m, const R& one) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return one;
    bool negate = false;
    R prev = one;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = k;
        while (pivot < n && ring_is_zero(m[pivot][k])) ++pivot;
        if (pivot == n) return R();
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                R num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = k == 0 ? std::move(num) : ring_exact_div(num, prev);
            }
            m[i][k] = R();
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? R(-det) : det;
}

struct FloatDeterminant {
    Complex value;
    double growth = 1.0;  // max |U_ij| / max |A_ij|
};

/// Partially pivoted LU determinant with element-growth monitoring.
FloatDeterminant lu_determinant(Matrix<Complex> m);

/// Sylvester matrix of two coefficient lists (ascending), using their formal degrees.
template <class R>
Matrix<R> sylvester(const std::vector<R>& p, const std::vector<R>& q) {
    const int dp = static_cast<int>(p.size()) - 1;
    const int dq = static_cast<int>(q.size()) - 1;
    const int n = dp + dq;
    Matrix<R> m(n, std::vector<R>(n, R()));
    for (int r = 0; r < dq; ++r)
        for (int k = 0; k <= dp; ++k) m[r][r + k] = p[dp - k];
    for (int r = 0; r < dp; ++r)
        for (int k = 0; k <= dq; ++k) m[dq + r][r + k] = q[dq - k];
    return m;
}

template <class R>
std::vector<R> trim_leading(std::vector<R> coeffs) {
    while (coeffs.size() > 1 && ring_is_zero(coeffs.back())) coeffs.pop_back();
    return coeffs;
}

/// Resultant over an exact ring of polynomials given by ascending coefficient lists.
/// Throws ZeroPolynomial if either input is identically zero.
template <class R>
R resultant(const std::vector<R>& p, const std::vector<R>& q, const R& one) {
    auto a = trim_leading(p);
    auto b = trim_leading(q);
    if ((a.size() == 1 && ring_is_zero(a[0])) || (b.size() == 1 && ring_is_zero(b[0])))
        throw Error(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
    return bareiss_determinant(sylvester(a, b), one);
}

Rational resultant(const UniPoly<Rational>& p, const UniPoly<Rational>& q);
Complex resultant(const UniPoly<Complex>& p, const UniPoly<Complex>& q);

enum class Eliminate { s, t };

/// Eliminates one variable of two bivariate polynomials, leaving a polynomial in the other.
UniPoly<Rational> resultant(const BiPoly<Rational>& p, const BiPoly<Rational>& q, Eliminate var);

/// Discriminant of a binary form; coefficient k multiplies y^k z^(d-k), d = formal degree.
/// Zero iff the form has a repeated root in P^1 (including a double root at y:z = 1:0).
Rational discriminant_binary(const UniPoly<Rational>& f);
Complex discriminant_binary(const UniPoly<Complex>& f);

/// (A(s)C(t) - A(t)C(s)) / (s - t) by exact synthetic division in s.
BiPoly<Rational> divided_difference(const UniPoly<Rational>& a, const UniPoly<Rational>& c);

}  // namespace confocal

#endif  // CONFOCAL_RESULTANT_HPP
