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

#ifndef CONFOCAL_TRIPOLY_HPP
#define CONFOCAL_TRIPOLY_HPP

#include <array>
#include <cmath>
#include <vector>

#include "confocal/unipoly.hpp"

namespace confocal {

/// Exponent triple of a monomial u^i v^j w^k (x^i y^j z^k on the primal side).
struct Exponent {
    int i = 0;
    int j = 0;
    int k = 0;
    friend bool operator==(const Exponent&, const Exponent&) = default;
};

enum class Var { u = 0, v = 1, w = 2 };

/// The two isotropic lines u + iv = 0 (plus) and u - iv = 0 (minus) of the dual plane.
enum class Isotropic { plus, minus };

constexpr int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

/// Monomials are ordered by decreasing k, then decreasing j; w^c comes first.
/// For c = 2 this is w^2, wv, wu, v^2, vu, u^2.
constexpr int monomial_index(int degree, int j, int k) {
    int r = degree - k;
    return r * (r + 1) / 2 + (r - j);
}

inline std::vector<Exponent> monomials(int degree) {
    std::vector<Exponent> out;
    out.reserve(monomial_count(degree));
    for (int k = degree; k >= 0; --k)
        for (int j = degree - k; j >= 0; --j) out.push_back({degree - k - j, j, k});
    return out;
}

/// Homogeneous polynomial in three variables with dense coefficient storage.
template <class S>
class TriPoly {
   public:
    using Scalar = S;

    explicit TriPoly(int degree = 0) : degree_(degree), coeffs_(monomial_count(degree), S(0)) {
        if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
    }
    TriPoly(int degree, std::vector<S> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
        if (degree < 0 || static_cast<int>(coeffs_.size()) != monomial_count(degree))
            throw Error(ErrorCode::InvalidArgument, "coefficient count does not match degree");
        for (const auto& c : coeffs_)
            if (!ScalarTraits<S>::is_finite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite coefficient");
    }

    /// a*u + b*v + c*w
    static TriPoly linear(const S& a, const S& b, const S& c) {
        TriPoly p(1);
        p.coeff(1, 0, 0) = a;
        p.coeff(0, 1, 0) = b;
        p.coeff(0, 0, 1) = c;
        return p;
    }
    static TriPoly monomial(const Exponent& e, const S& c = S(1)) {
        TriPoly p(e.i + e.j + e.k);
        p.coeff(e.i, e.j, e.k) = c;
        return p;
    }

    int degree() const { return degree_; }
    int size() const { return static_cast<int>(coeffs_.size()); }

    const S& operator[](int idx) const { return coeffs_[idx]; }
    S& operator[](int idx) { return coeffs_[idx]; }

    const S& coeff(int i, int j, int k) const { return coeffs_[index(i, j, k)]; }
    S& coeff(int i, int j, int k) { return coeffs_[index(i, j, k)]; }
    /// Coefficient of w^c, the affine-chart normalizer.
    const S& top_w() const { return coeffs_[0]; }

    const std::vector<S>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!ScalarTraits<S>::is_zero(c)) return false;
        return true;
    }
    bool is_real(double tol = kRealTolerance) const {
        for (const auto& c : coeffs_)
            if (!ScalarTraits<S>::is_real(c, tol)) return false;
        return true;
    }
    double max_abs() const {
        double m = 0.0;
        for (const auto& c : coeffs_) m = std::max(m, ScalarTraits<S>::abs(c));
        return m;
    }

    template <class T>
    T operator()(const T& u, const T& v, const T& w) const {
        std::vector<T> pu(degree_ + 1), pv(degree_ + 1), pw(degree_ + 1);
        pu[0] = pv[0] = pw[0] = T(1);
        for (int e = 1; e <= degree_; ++e) {
            pu[e] = pu[e - 1] * u;
            pv[e] = pv[e - 1] * v;
            pw[e] = pw[e - 1] * w;
        }
        T acc = T(0);
        int idx = 0;
        for (const auto& e : monomials(degree_)) {
            const S& c = coeffs_[idx++];
            if (ScalarTraits<S>::is_zero(c)) continue;
            acc += convert<T>(c) * pu[e.i] * pv[e.j] * pw[e.k];
        }
        return acc;
    }

    friend bool operator==(const TriPoly& a, const TriPoly& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

   private:
    int index(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i + j + k != degree_)
            throw Error(ErrorCode::InvalidArgument, "exponent triple does not match degree");
        return monomial_index(degree_, j, k);
    }

    template <class T>
    static T convert(const S& c) {
        return scalar_cast<T>(c);
    }

    int degree_;
    std::vector<S> coeffs_;
};

template <class S>
TriPoly<S> operator+(const TriPoly<S>& a, const TriPoly<S>& b) {
    if (a.degree() != b.degree()) throw Error(ErrorCode::InvalidArgument, "adding forms of different degree");
    TriPoly<S> r(a.degree());
    for (int n = 0; n < r.size(); ++n) r[n] = a[n] + b[n];
    return r;
}

template <class S>
TriPoly<S> operator-(const TriPoly<S>& a, const TriPoly<S>& b) {
    if (a.degree() != b.degree()) throw Error(ErrorCode::InvalidArgument, "subtracting forms of different degree");
    TriPoly<S> r(a.degree());
    for (int n = 0; n < r.size(); ++n) r[n] = a[n] - b[n];
    return r;
}

template <class S>
TriPoly<S> operator*(const S& s, const TriPoly<S>& a) {
    TriPoly<S> r(a.degree());
    for (int n = 0; n < r.size(); ++n) r[n] = s * a[n];
    return r;
}

template <class S>
TriPoly<S> operator*(const TriPoly<S>& a, const TriPoly<S>& b) {
    const int da = a.degree(), db = b.degree();
    TriPoly<S> r(da + db);
    auto ma = monomials(da);
    auto mb = monomials(db);
    for (int x = 0; x < a.size(); ++x) {
        if (ScalarTraits<S>::is_zero(a[x])) continue;
        for (int y = 0; y < b.size(); ++y) {
            if (ScalarTraits<S>::is_zero(b[y])) continue;
            r.coeff(ma[x].i + mb[y].i, ma[x].j + mb[y].j, ma[x].k + mb[y].k) += a[x] * b[y];
        }
    }
    return r;
}

template <class S>
TriPoly<S> pow(const TriPoly<S>& p, int e) {
    TriPoly<S> r = TriPoly<S>::monomial({0, 0, 0});
    for (int n = 0; n < e; ++n) r = r * p;
    return r;
}

/// Partial derivative; the derivative of a constant is the zero constant.
template <class S>
TriPoly<S> derivative(const TriPoly<S>& p, Var var) {
    if (p.degree() == 0) return TriPoly<S>(0);
    TriPoly<S> r(p.degree() - 1);
    int idx = 0;
    for (const auto& e : monomials(p.degree())) {
        const S& c = p[idx++];
        switch (var) {
            case Var::u:
                if (e.i > 0) r.coeff(e.i - 1, e.j, e.k) += S(e.i) * c;
                break;
            case Var::v:
                if (e.j > 0) r.coeff(e.i, e.j - 1, e.k) += S(e.j) * c;
                break;
            case Var::w:
                if (e.k > 0) r.coeff(e.i, e.j, e.k - 1) += S(e.k) * c;
                break;
        }
    }
    return r;
}

template <class S, class T>
std::array<T, 3> gradient_at(const TriPoly<S>& p, const std::array<T, 3>& pt) {
    return {derivative(p, Var::u)(pt[0], pt[1], pt[2]), derivative(p, Var::v)(pt[0], pt[1], pt[2]),
            derivative(p, Var::w)(pt[0], pt[1], pt[2])};
}

/// p(A(t), B(t), C(t)) for a parameterized curve.
template <class S, class T>
UniPoly<T> compose(const TriPoly<S>& p, const std::array<UniPoly<T>, 3>& param) {
    const int d = p.degree();
    std::array<std::vector<UniPoly<T>>, 3> powers;
    for (int a = 0; a < 3; ++a) {
        powers[a].push_back(UniPoly<T>::constant(T(1)));
        for (int e = 1; e <= d; ++e) powers[a].push_back(powers[a].back() * param[a]);
    }
    UniPoly<T> acc;
    int idx = 0;
    for (const auto& e : monomials(d)) {
        const S& c = p[idx++];
        if (ScalarTraits<S>::is_zero(c)) continue;
        acc = acc + scalar_cast<T>(c) * (powers[0][e.i] * powers[1][e.j] * powers[2][e.k]);
    }
    return acc;
}

/// p(L0, L1, L2) where row r of `m` holds the coefficients of the linear form L_r.
template <class S>
TriPoly<S> compose_linear(const TriPoly<S>& p, const std::array<std::array<S, 3>, 3>& m) {
    const int d = p.degree();
    std::array<std::vector<TriPoly<S>>, 3> powers;
    for (int a = 0; a < 3; ++a) {
        TriPoly<S> form = TriPoly<S>::linear(m[a][0], m[a][1], m[a][2]);
        powers[a].push_back(TriPoly<S>::monomial({0, 0, 0}));
        for (int e = 1; e <= d; ++e) powers[a].push_back(powers[a].back() * form);
    }
    TriPoly<S> acc(d);
    int idx = 0;
    for (const auto& e : monomials(d)) {
        const S& c = p[idx++];
        if (ScalarTraits<S>::is_zero(c)) continue;
        acc = acc + c * (powers[0][e.i] * powers[1][e.j] * powers[2][e.k]);
    }
    return acc;
}

/// (-1)^i s^j with s = -i for the plus line and s = +i for the minus line.
inline Complex isotropic_weight(int i, int j, Isotropic sign) {
    static constexpr Complex units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    // (-1)^i = i^(2i); (-i)^j = i^(3j); (+i)^j = i^j
    int power = 2 * i + (sign == Isotropic::plus ? 3 * j : j);
    return units[power % 4];
}

/// g(-1, -i, w) for plus, g(-1, i, w) for minus, with formal degree c.
template <class S>
UniPoly<Complex> restrict_isotropic(const TriPoly<S>& g, Isotropic sign) {
    std::vector<Complex> out(g.degree() + 1, Complex(0));
    int idx = 0;
    for (const auto& e : monomials(g.degree())) {
        const S& c = g[idx++];
        if (ScalarTraits<S>::is_zero(c)) continue;
        out[e.k] += to_complex(c) * isotropic_weight(e.i, e.j, sign);
    }
    return UniPoly<Complex>(std::move(out));
}

template <class S>
TriPoly<S> isotropic_conic() {
    TriPoly<S> y(2);
    y.coeff(2, 0, 0) = S(1);
    y.coeff(0, 2, 0) = S(1);
    return y;
}

template <class S>
struct ConicQuotient {
    TriPoly<S> quotient;
    double residual = 0.0;  // max-abs coefficient of K - (u^2+v^2) Q
};

/// Division by u^2 + v^2, solved from the top u-power down; the remainder is reported.
template <class S>
ConicQuotient<S> divide_by_isotropic_conic(const TriPoly<S>& kpoly) {
    const int c = kpoly.degree();
    if (c < 2) throw Error(ErrorCode::DegreeTooLow, "division by u^2+v^2 needs degree >= 2");
    TriPoly<S> q(c - 2);
    for (int k = c - 2; k >= 0; --k) {
        const int r = c - 2 - k;
        for (int a = r; a >= 0; --a) {
            const int b = r - a;
            S val = kpoly.coeff(a + 2, b, k);
            if (b >= 2) val -= q.coeff(a + 2, b - 2, k);
            q.coeff(a, b, k) = val;
        }
    }
    TriPoly<S> rem = kpoly - isotropic_conic<S>() * q;
    return {std::move(q), rem.max_abs()};
}

template <class S>
TriPoly<Complex> to_complex(const TriPoly<S>& p) {
    std::vector<Complex> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(to_complex(c));
    return TriPoly<Complex>(p.degree(), std::move(out));
}

inline TriPoly<Complex> conj(const TriPoly<Complex>& p) {
    std::vector<Complex> out(p.coeffs());
    for (auto& c : out) c = std::conj(c);
    return TriPoly<Complex>(p.degree(), std::move(out));
}

/// Real parts of the coefficients (for polynomials already known to be real).
inline TriPoly<Complex> real_part(const TriPoly<Complex>& p) {
    std::vector<Complex> out(p.coeffs());
    for (auto& c : out) c = Complex(c.real(), 0.0);
    return TriPoly<Complex>(p.degree(), std::move(out));
}

/// Integer coefficients, unit content, first nonzero coefficient positive.
TriPoly<Rational> primitive_part(const TriPoly<Rational>& p);

/// True when a = lambda * b for some nonzero rational lambda.
bool proportional(const TriPoly<Rational>& a, const TriPoly<Rational>& b);

/// Divide by the w^c coefficient. Throws NormalizationFailure when it vanishes.
template <class S>
TriPoly<S> normalize_chart(const TriPoly<S>& g) {
    const S lead = g.top_w();
    if (ScalarTraits<S>::is_zero(lead)) throw Error(ErrorCode::NormalizationFailure, "w^c coefficient vanishes");
    TriPoly<S> r(g.degree());
    for (int n = 0; n < r.size(); ++n) r[n] = g[n] / lead;
    return r;
}

}  // namespace confocal

#endif  // CONFOCAL_TRIPOLY_HPP
