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

#ifndef CONFOCAL_BIPOLY_HPP
#define CONFOCAL_BIPOLY_HPP

#include <algorithm>
#include <vector>

#include "confocal/unipoly.hpp"

namespace confocal {

/// Dense polynomial in two variables (s, t); coeff(i, j) multiplies s^i t^j.
/// Arithmetic results have trailing zero rows and columns trimmed.
template <class S>
class BiPoly {
   public:
    BiPoly() : rows_(1), cols_(1), data_(1, S(0)) {}

    BiPoly(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, S(0)) {}

    static BiPoly constant(const S& c) {
        BiPoly p;
        p.data_[0] = c;
        return p;
    }
    static BiPoly monomial(int i, int j, const S& c) {
        BiPoly p(i + 1, j + 1);
        p.at(i, j) = c;
        return p;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    S coeff(int i, int j) const {
        if (i < 0 || j < 0 || i >= rows_ || j >= cols_) return S(0);
        return data_[static_cast<size_t>(i) * cols_ + j];
    }
    S& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const S& c) { return ScalarTraits<S>::is_zero(c); });
    }

    int degree_s() const {
        for (int i = rows_ - 1; i >= 0; --i)
            for (int j = 0; j < cols_; ++j)
                if (!ScalarTraits<S>::is_zero(coeff(i, j))) return i;
        return -1;
    }
    int degree_t() const {
        for (int j = cols_ - 1; j >= 0; --j)
            for (int i = 0; i < rows_; ++i)
                if (!ScalarTraits<S>::is_zero(coeff(i, j))) return j;
        return -1;
    }
    int total_degree() const {
        int d = -1;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!ScalarTraits<S>::is_zero(coeff(i, j))) d = std::max(d, i + j);
        return d;
    }

    BiPoly trimmed() const {
        int r = std::max(degree_s(), 0) + 1;
        int c = std::max(degree_t(), 0) + 1;
        if (r == rows_ && c == cols_) return *this;
        BiPoly out(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) out.at(i, j) = coeff(i, j);
        return out;
    }

    /// Coefficients in s, each a polynomial in t.
    std::vector<UniPoly<S>> as_poly_in_s() const {
        std::vector<UniPoly<S>> out;
        int ds = std::max(degree_s(), 0);
        for (int i = 0; i <= ds; ++i) {
            std::vector<S> row(cols_);
            for (int j = 0; j < cols_; ++j) row[j] = coeff(i, j);
            out.push_back(UniPoly<S>(std::move(row)).trimmed());
        }
        return out;
    }
    /// Coefficients in t, each a polynomial in s.
    std::vector<UniPoly<S>> as_poly_in_t() const {
        std::vector<UniPoly<S>> out;
        int dt = std::max(degree_t(), 0);
        for (int j = 0; j <= dt; ++j) {
            std::vector<S> col(rows_);
            for (int i = 0; i < rows_; ++i) col[i] = coeff(i, j);
            out.push_back(UniPoly<S>(std::move(col)).trimmed());
        }
        return out;
    }

    template <class T>
    T operator()(const T& s, const T& t) const {
        T acc = T(0);
        for (int i = rows_ - 1; i >= 0; --i) {
            T row = T(0);
            for (int j = cols_ - 1; j >= 0; --j) row = row * t + convert<T>(coeff(i, j));
            acc = acc * s + row;
        }
        return acc;
    }

    /// Fix t, leaving a polynomial in s.
    template <class T>
    UniPoly<T> at_t(const T& t) const {
        std::vector<T> out(rows_, T(0));
        for (int i = 0; i < rows_; ++i) {
            T row = T(0);
            for (int j = cols_ - 1; j >= 0; --j) row = row * t + convert<T>(coeff(i, j));
            out[i] = row;
        }
        return UniPoly<T>(std::move(out));
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        int r = std::max(a.rows_, b.rows_), c = std::max(a.cols_, b.cols_);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (!(a.coeff(i, j) == b.coeff(i, j))) return false;
        return true;
    }

   private:
    template <class T>
    static T convert(const S& c) {
        return scalar_cast<T>(c);
    }

    int rows_;
    int cols_;
    std::vector<S> data_;
};

template <class S>
BiPoly<S> operator+(const BiPoly<S>& a, const BiPoly<S>& b) {
    BiPoly<S> r(std::max(a.rows(), b.rows()), std::max(a.cols(), b.cols()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) = a.coeff(i, j) + b.coeff(i, j);
    return r.trimmed();
}

template <class S>
BiPoly<S> operator-(const BiPoly<S>& a, const BiPoly<S>& b) {
    BiPoly<S> r(std::max(a.rows(), b.rows()), std::max(a.cols(), b.cols()));
    for (int i = 0; i < r.rows(); ++i)
        for (int j = 0; j < r.cols(); ++j) r.at(i, j) = a.coeff(i, j) - b.coeff(i, j);
    return r.trimmed();
}

template <class S>
BiPoly<S> operator-(const BiPoly<S>& a) {
    return BiPoly<S>() - a;
}

template <class S>
BiPoly<S> operator*(const BiPoly<S>& a, const BiPoly<S>& b) {
    BiPoly<S> r(a.rows() + b.rows() - 1, a.cols() + b.cols() - 1);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            S c = a.coeff(i, j);
            if (ScalarTraits<S>::is_zero(c)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    S d = b.coeff(k, l);
                    if (ScalarTraits<S>::is_zero(d)) continue;
                    r.at(i + k, j + l) += c * d;
                }
        }
    return r.trimmed();
}

template <class S>
bool ring_is_zero(const BiPoly<S>& p) {
    return p.is_zero();
}

/// Exact quotient by lex-order long division (s before t). Throws NotDivisible.
template <class S>
BiPoly<S> ring_exact_div(const BiPoly<S>& a, const BiPoly<S>& divisor) {
    const BiPoly<S> b = divisor.trimmed();
    if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "bivariate division by zero");
    auto leading = [](const BiPoly<S>& p, int& li, int& lj) {
        li = p.degree_s();
        lj = -1;
        if (li < 0) return;
        for (int j = p.cols() - 1; j >= 0; --j)
            if (!ScalarTraits<S>::is_zero(p.coeff(li, j))) {
                lj = j;
                return;
            }
    };
    int bi, bj;
    leading(b, bi, bj);
    const S blead = b.coeff(bi, bj);
    BiPoly<S> rem = a.trimmed();
    BiPoly<S> quot(std::max(1, rem.rows() - bi), std::max(1, rem.cols()));
    int ri, rj;
    leading(rem, ri, rj);
    while (ri >= 0) {
        if (ri < bi || rj < bj) throw Error(ErrorCode::NotDivisible, "bivariate exact division left a remainder");
        S q = rem.coeff(ri, rj) / blead;
        int qi = ri - bi, qj = rj - bj;
        if (qj >= quot.cols()) {
            BiPoly<S> wider(quot.rows(), qj + 1);
            for (int i = 0; i < quot.rows(); ++i)
                for (int j = 0; j < quot.cols(); ++j) wider.at(i, j) = quot.coeff(i, j);
            quot = std::move(wider);
        }
        quot.at(qi, qj) += q;
        BiPoly<S> update(rem.rows(), std::max(rem.cols(), qj + b.cols()));
        for (int i = 0; i < rem.rows(); ++i)
            for (int j = 0; j < rem.cols(); ++j) update.at(i, j) = rem.coeff(i, j);
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) {
                S d = b.coeff(i, j);
                if (ScalarTraits<S>::is_zero(d)) continue;
                update.at(qi + i, qj + j) -= q * d;
            }
        update.at(ri, rj) = S(0);
        rem = update.trimmed();
        leading(rem, ri, rj);
    }
    return quot.trimmed();
}

}  // namespace confocal

#endif  // CONFOCAL_BIPOLY_HPP
