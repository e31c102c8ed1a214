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

#ifndef CONFOCAL_UNIPOLY_HPP
#define CONFOCAL_UNIPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "confocal/errors.hpp"
#include "confocal/scalar.hpp"

namespace confocal {

/// Univariate polynomial, coefficients in ascending powers.
///
/// The coefficient list fixes a formal degree; the leading coefficient may be
/// zero, which is how degree drops (e.g. a focal polynomial losing its top
/// term) are carried around. Arithmetic results are trimmed.
template <class S>
class UniPoly {
   public:
    using Scalar = S;

    UniPoly() : coeffs_(1, S(0)) {}
    explicit UniPoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.assign(1, S(0));
    }
    UniPoly(std::initializer_list<S> coeffs) : UniPoly(std::vector<S>(coeffs)) {}

    static UniPoly constant(const S& c) { return UniPoly(std::vector<S>{c}); }
    static UniPoly monomial(int power, const S& c) {
        std::vector<S> v(power + 1, S(0));
        v[power] = c;
        return UniPoly(std::move(v));
    }

    int formal_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Effective degree; -1 for the zero polynomial.
    int degree() const {
        for (int k = formal_degree(); k >= 0; --k)
            if (!ScalarTraits<S>::is_zero(coeffs_[k])) return k;
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    S coeff(int k) const { return (k >= 0 && k <= formal_degree()) ? coeffs_[k] : S(0); }
    S& operator[](int k) { return coeffs_[k]; }
    const S& operator[](int k) const { return coeffs_[k]; }
    S leading() const {
        int d = degree();
        return d < 0 ? S(0) : coeffs_[d];
    }

    const std::vector<S>& coeffs() const { return coeffs_; }

    UniPoly trimmed() const {
        int d = std::max(degree(), 0);
        return UniPoly(std::vector<S>(coeffs_.begin(), coeffs_.begin() + d + 1));
    }

    /// Horner evaluation; T may be wider than S (rational coefficients at a complex point).
    template <class T>
    T operator()(const T& x) const {
        T acc = convert<T>(coeffs_.back());
        for (int k = formal_degree() - 1; k >= 0; --k) acc = acc * x + convert<T>(coeffs_[k]);
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        int d = std::max(a.degree(), b.degree());
        for (int k = 0; k <= d; ++k)
            if (!(a.coeff(k) == b.coeff(k))) return false;
        return true;
    }

   private:
    template <class T>
    static T convert(const S& c) {
        return scalar_cast<T>(c);
    }

    std::vector<S> coeffs_;
};

template <class S>
UniPoly<S> operator+(const UniPoly<S>& a, const UniPoly<S>& b) {
    int n = std::max(a.formal_degree(), b.formal_degree());
    std::vector<S> r(n + 1, S(0));
    for (int k = 0; k <= n; ++k) r[k] = a.coeff(k) + b.coeff(k);
    return UniPoly<S>(std::move(r)).trimmed();
}

template <class S>
UniPoly<S> operator-(const UniPoly<S>& a) {
    std::vector<S> r(a.coeffs());
    for (auto& c : r) c = -c;
    return UniPoly<S>(std::move(r));
}

template <class S>
UniPoly<S> operator-(const UniPoly<S>& a, const UniPoly<S>& b) {
    int n = std::max(a.formal_degree(), b.formal_degree());
    std::vector<S> r(n + 1, S(0));
    for (int k = 0; k <= n; ++k) r[k] = a.coeff(k) - b.coeff(k);
    return UniPoly<S>(std::move(r)).trimmed();
}

template <class S>
UniPoly<S> operator*(const UniPoly<S>& a, const UniPoly<S>& b) {
    int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return UniPoly<S>();
    std::vector<S> r(da + db + 1, S(0));
    for (int i = 0; i <= da; ++i) {
        if (ScalarTraits<S>::is_zero(a[i])) continue;
        for (int j = 0; j <= db; ++j) r[i + j] += a[i] * b[j];
    }
    return UniPoly<S>(std::move(r));
}

template <class S>
UniPoly<S> operator*(const S& s, const UniPoly<S>& a) {
    std::vector<S> r(a.coeffs());
    for (auto& c : r) c = s * c;
    return UniPoly<S>(std::move(r)).trimmed();
}

template <class S>
UniPoly<S> derivative(const UniPoly<S>& p) {
    int n = p.formal_degree();
    if (n == 0) return UniPoly<S>();
    std::vector<S> r(n, S(0));
    for (int k = 1; k <= n; ++k) r[k - 1] = S(k) * p[k];
    return UniPoly<S>(std::move(r));
}

template <class S>
UniPoly<S> pow(const UniPoly<S>& p, int e) {
    UniPoly<S> r = UniPoly<S>::constant(S(1));
    for (int k = 0; k < e; ++k) r = r * p;
    return r;
}

/// Quotient and remainder over a field. Throws ZeroPolynomial for a zero divisor.
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> divmod(const UniPoly<S>& a, const UniPoly<S>& b) {
    int db = b.degree();
    if (db < 0) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
    std::vector<S> rem(a.trimmed().coeffs());
    int da = a.degree();
    if (da < db) return {UniPoly<S>(), a.trimmed()};
    std::vector<S> quot(da - db + 1, S(0));
    const S lead = b[db];
    for (int k = da; k >= db; --k) {
        if (ScalarTraits<S>::is_zero(rem[k])) continue;
        S q = rem[k] / lead;
        quot[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b[j];
        rem[k] = S(0);
    }
    return {UniPoly<S>(std::move(quot)).trimmed(), UniPoly<S>(std::move(rem)).trimmed()};
}

template <class S>
UniPoly<S> conj(const UniPoly<S>& p) {
    std::vector<S> r(p.coeffs());
    for (auto& c : r) c = ScalarTraits<S>::conj(c);
    return UniPoly<S>(std::move(r));
}

template <class S>
UniPoly<Complex> to_complex(const UniPoly<S>& p) {
    std::vector<Complex> r;
    r.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) r.push_back(to_complex(c));
    return UniPoly<Complex>(std::move(r));
}

/// Ring hooks used by fraction-free elimination.
inline bool ring_is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational ring_exact_div(const Rational& a, const Rational& b) { return a / b; }

template <class S>
bool ring_is_zero(const UniPoly<S>& p) {
    return p.is_zero();
}

/// Exact quotient; throws NotDivisible when the remainder is nonzero.
template <class S>
UniPoly<S> ring_exact_div(const UniPoly<S>& a, const UniPoly<S>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorCode::NotDivisible, "univariate exact division left a remainder");
    return q;
}

// Exact-coefficient utilities.

/// Integer coefficients with unit content and positive leading coefficient.
UniPoly<Rational> primitive_part(const UniPoly<Rational>& p);
UniPoly<Rational> monic(const UniPoly<Rational>& p);
/// Monic gcd via a primitive remainder sequence; gcd(0,0) = 0.
UniPoly<Rational> gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b);
UniPoly<Rational> squarefree_part(const UniPoly<Rational>& p);

}  // namespace confocal

#endif  // CONFOCAL_UNIPOLY_HPP
