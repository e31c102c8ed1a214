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

#include "confocal/resultant.hpp"

#include <algorithm>

namespace confocal {

FloatDeterminant lu_determinant(Matrix<Complex> m) {
    const int n = static_cast<int>(m.size());
    FloatDeterminant out{Complex(1.0), 1.0};
    if (n == 0) return out;
    double scale = 0.0;
    for (const auto& row : m)
        for (const auto& x : row) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return {Complex(0.0), 1.0};
    double biggest = scale;
    Complex det(1.0);
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
        if (m[pivot][k] == Complex(0.0)) return {Complex(0.0), biggest / scale};
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int i = k + 1; i < n; ++i) {
            Complex f = m[i][k] / m[k][k];
            for (int j = k + 1; j < n; ++j) {
                m[i][j] -= f * m[k][j];
                biggest = std::max(biggest, std::abs(m[i][j]));
            }
        }
    }
    out.value = det;
    out.growth = biggest / scale;
    return out;
}

Rational resultant(const UniPoly<Rational>& p, const UniPoly<Rational>& q) {
    return resultant(p.coeffs(), q.coeffs(), Rational(1));
}

Complex resultant(const UniPoly<Complex>& p, const UniPoly<Complex>& q) {
    if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
    return lu_determinant(sylvester(p.trimmed().coeffs(), q.trimmed().coeffs())).value;
}

UniPoly<Rational> resultant(const BiPoly<Rational>& p, const BiPoly<Rational>& q, Eliminate var) {
    auto a = var == Eliminate::s ? p.as_poly_in_s() : p.as_poly_in_t();
    auto b = var == Eliminate::s ? q.as_poly_in_s() : q.as_poly_in_t();
    return resultant(a, b, UniPoly<Rational>::constant(Rational(1))).trimmed();
}

namespace {

template <class S>
std::pair<std::vector<S>, std::vector<S>> binary_partials(const UniPoly<S>& f) {
    const int d = f.formal_degree();
    if (d < 2) throw Error(ErrorCode::DegreeTooLow, "binary discriminant needs degree >= 2");
    std::vector<S> fy(d), fz(d);
    for (int k = 0; k < d; ++k) {
        fy[k] = S(k + 1) * f[k + 1];
        fz[k] = S(d - k) * f[k];
    }
    return {fy, fz};
}

}  // namespace

Rational discriminant_binary(const UniPoly<Rational>& f) {
    const int d = f.formal_degree();
    auto [fy, fz] = binary_partials(f);
    Rational r = bareiss_determinant(sylvester(fy, fz), Rational(1));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(d - 2));
    r /= scale;
    if ((d * (d - 1) / 2) % 2 == 1) r = -r;
    return r;
}

Complex discriminant_binary(const UniPoly<Complex>& f) {
    const int d = f.formal_degree();
    auto [fy, fz] = binary_partials(f);
    Complex r = lu_determinant(sylvester(fy, fz)).value / std::pow(static_cast<double>(d), d - 2);
    return (d * (d - 1) / 2) % 2 == 1 ? -r : r;
}

BiPoly<Rational> divided_difference(const UniPoly<Rational>& a, const UniPoly<Rational>& c) {
    const int n = std::max(a.formal_degree(), c.formal_degree());
    if (n == 0) return BiPoly<Rational>();
    // numerator = sum_i s^i (a_i C(t) - c_i A(t))
    std::vector<UniPoly<Rational>> num(n + 1);
    for (int i = 0; i <= n; ++i) num[i] = a.coeff(i) * c - c.coeff(i) * a;
    const UniPoly<Rational> t = UniPoly<Rational>::monomial(1, Rational(1));
    std::vector<UniPoly<Rational>> quot(n);
    quot[n - 1] = num[n];
    for (int i = n - 1; i >= 1; --i) quot[i - 1] = num[i] + t * quot[i];
    if (!(num[0] + t * quot[0]).is_zero())
        throw Error(ErrorCode::NotDivisible, "divided difference left a remainder");
    int cols = 1;
    for (const auto& q : quot) cols = std::max(cols, q.degree() + 1);
    BiPoly<Rational> out(n, cols);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= quot[i].degree(); ++j) out.at(i, j) = quot[i][j];
    return out.trimmed();
}

}  // namespace confocal
