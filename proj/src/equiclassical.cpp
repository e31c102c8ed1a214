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

#include "confocal/equiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace confocal {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Point3 scale_by_largest(const Point3& p) {
    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (std::abs(p[k]) > std::abs(p[best])) best = k;
    const Complex s = p[best];
    if (std::abs(s) == 0.0) throw Error(ErrorCode::InvalidArgument, "zero vector is not a point");
    return {p[0] / s, p[1] / s, p[2] / s};
}

bool is_real_point(const Point3& p, double tol = 1e-9) {
    return std::all_of(p.begin(), p.end(), [&](const Complex& x) { return std::abs(x.imag()) <= tol; });
}

Point3 conj_point(const Point3& p) { return {std::conj(p[0]), std::conj(p[1]), std::conj(p[2])}; }

std::vector<Complex> powers(const Complex& x, int n) {
    std::vector<Complex> out(n + 1, Complex(1));
    for (int e = 1; e <= n; ++e) out[e] = out[e - 1] * x;
    return out;
}

// Values of the degree-n monomials at p; index 0 (w^n) is skipped when drop_top.
Eigen::RowVectorXcd value_row(int n, const Point3& p, bool drop_top) {
    const auto pu = powers(p[0], n), pv = powers(p[1], n), pw = powers(p[2], n);
    const int off = drop_top ? 1 : 0;
    Eigen::RowVectorXcd row(monomial_count(n) - off);
    int idx = 0;
    for (const auto& e : monomials(n)) {
        if (idx >= off) row(idx - off) = pu[e.i] * pv[e.j] * pw[e.k];
        ++idx;
    }
    return row;
}

// Directional derivative of each monomial at p along q.
Eigen::RowVectorXcd derivative_row(int n, const Point3& p, const Point3& q, bool drop_top) {
    const auto pu = powers(p[0], n), pv = powers(p[1], n), pw = powers(p[2], n);
    const int off = drop_top ? 1 : 0;
    Eigen::RowVectorXcd row(monomial_count(n) - off);
    int idx = 0;
    for (const auto& e : monomials(n)) {
        if (idx >= off) {
            Complex v = 0.0;
            if (e.i > 0) v += double(e.i) * pu[e.i - 1] * pv[e.j] * pw[e.k] * q[0];
            if (e.j > 0) v += double(e.j) * pu[e.i] * pv[e.j - 1] * pw[e.k] * q[1];
            if (e.k > 0) v += double(e.k) * pu[e.i] * pv[e.j] * pw[e.k - 1] * q[2];
            row(idx - off) = v;
        }
        ++idx;
    }
    return row;
}

void check_off_conic(const Point3& p) {
    if (std::abs(p[0] * p[0] + p[1] * p[1]) <= 1e-6)
        throw Error(ErrorCode::SchemeOnIsotropicConic, "scheme point lies on u^2 + v^2 = 0");
}

// One scheme point with its condition rows (complex, unit norm).
struct Site {
    Point3 point;
    Point3 direction;
    bool cusp = false;
    std::vector<Eigen::RowVectorXcd> rows;
};

std::vector<Site> sites(const EquiclassicalScheme& z, int n, bool drop_top) {
    std::vector<Site> out;
    for (const auto& node : z.nodes) {
        Site s;
        s.point = scale_by_largest(node.point);
        check_off_conic(s.point);
        s.rows.push_back(value_row(n, s.point, drop_top));
        out.push_back(std::move(s));
    }
    for (const auto& cusp : z.cusps) {
        Site s;
        s.point = scale_by_largest(cusp.point);
        s.direction = scale_by_largest(cusp.direction);
        s.cusp = true;
        check_off_conic(s.point);
        s.rows.push_back(value_row(n, s.point, drop_top));
        s.rows.push_back(derivative_row(n, s.point, s.direction, drop_top));
        out.push_back(std::move(s));
    }
    for (auto& s : out)
        for (auto& r : s.rows) {
            const double nr = r.norm();
            if (nr > 0.0) r /= nr;
        }
    return out;
}

int column_count(int n, bool drop_top) { return monomial_count(n) - (drop_top ? 1 : 0); }

Eigen::MatrixXd stack_real(const std::vector<Eigen::RowVectorXd>& rows, int cols) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = rows[r];
    return m;
}

Eigen::MatrixXcd complex_null_space(const Eigen::MatrixXcd& m, int cols, double rel) {
    if (m.rows() == 0) return Eigen::MatrixXcd::Identity(cols, cols);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const RankDecision d = numerical_rank(svd.singularValues(), rel);
    return svd.matrixV().rightCols(cols - d.rank);
}

}  // namespace

EquiclassicalScheme scheme_from(const SingularityData& sd) {
    EquiclassicalScheme z;
    for (const auto& n : sd.nodes) z.nodes.push_back({n.point, n.s, n.t});
    for (const auto& c : sd.cusps) z.cusps.push_back({c.point, c.direction, c.t});
    return z;
}

void validate_scheme(const RationalCurveParam& p, const EquiclassicalScheme& z, double tol) {
    const auto dp = p.derivative();
    auto eval = [](const std::array<UniPoly<Rational>, 3>& c, Complex t) {
        return Point3{c[0](t), c[1](t), c[2](t)};
    };
    for (const auto& n : z.nodes) {
        check_off_conic(scale_by_largest(n.point));
        const Point3 a = p.at(n.s), b = p.at(n.t);
        if (std::abs(n.s - n.t) <= tol)
            throw Error(ErrorCode::InvalidArgument, "node parameters coincide");
        if (projective_distance(a, b) > tol || projective_distance(a, n.point) > tol)
            throw Error(ErrorCode::InvalidArgument, "node parameters do not map to the node");
    }
    for (const auto& c : z.cusps) {
        check_off_conic(scale_by_largest(c.point));
        const Point3 a = p.at(c.t), d = eval(dp, c.t);
        if (projective_distance(a, c.point) > tol)
            throw Error(ErrorCode::InvalidArgument, "cusp parameter does not map to the cusp");
        double dn = 0.0;
        for (const auto& x : d) dn = std::max(dn, std::abs(x));
        if (dn > 0.0 && projective_distance(a, d) > tol)
            throw Error(ErrorCode::InvalidArgument, "derivative does not vanish at the cusp");
    }
}

Eigen::MatrixXd equiclassical_conditions(const EquiclassicalScheme& z, int degree, bool drop_top) {
    if (degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
    const int cols = column_count(degree, drop_top);
    std::vector<Site> all = sites(z, degree, drop_top);
    std::vector<bool> used(all.size(), false);
    std::vector<Eigen::RowVectorXd> rows;
    auto push = [&](const Eigen::RowVectorXd& r) {
        const double nr = r.norm();
        if (nr > 0.0) rows.push_back(r / nr);
    };
    for (size_t a = 0; a < all.size(); ++a) {
        if (used[a]) continue;
        used[a] = true;
        const Site& s = all[a];
        const bool real = is_real_point(s.point) && (!s.cusp || is_real_point(s.direction));
        if (real) {
            for (const auto& r : s.rows) push(r.real());
            continue;
        }
        size_t partner = all.size();
        for (size_t b = a + 1; b < all.size(); ++b)
            if (!used[b] && all[b].cusp == s.cusp && projective_distance(all[b].point, conj_point(s.point)) <= 1e-8) {
                partner = b;
                break;
            }
        if (partner == all.size())
            throw Error(ErrorCode::InvalidArgument, "non-real singularity without its conjugate");
        used[partner] = true;
        for (const auto& r : s.rows) {
            push(r.real());
            push(r.imag());
        }
    }
    return stack_real(rows, cols);
}

Eigen::MatrixXd equiclassical_conditions(const RationalCurveParam& d_curve, const EquiclassicalScheme& z) {
    validate_scheme(d_curve, z);
    return equiclassical_conditions(z, d_curve.degree());
}

Eigen::MatrixXcd complex_conditions(const EquiclassicalScheme& z, int degree, bool drop_top) {
    const int cols = column_count(degree, drop_top);
    std::vector<Eigen::RowVectorXcd> rows;
    for (auto& s : sites(z, degree, drop_top))
        for (auto& r : s.rows) rows.push_back(std::move(r));
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = rows[r];
    return m;
}

RankDecision numerical_rank(const Eigen::VectorXd& sv, double rel, double band) {
    RankDecision d;
    if (sv.size() == 0 || sv.maxCoeff() == 0.0) {
        d.gap = kInf;
        return d;
    }
    const double tau = rel * sv.maxCoeff();
    d.threshold = tau;
    int low = 0, high = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) > tau * band) ++low;
        if (sv(k) >= tau / band) ++high;
        if (sv(k) >= tau) ++d.rank;
    }
    if (low != high) throw ToleranceAmbiguityError(low, high);
    // Eigen returns singular values in decreasing order.
    const double above = d.rank > 0 ? sv(d.rank - 1) / tau : kInf;
    const double below = d.rank < sv.size() && sv(d.rank) > 0.0 ? tau / sv(d.rank) : kInf;
    d.gap = std::min(above, below);
    return d;
}

NullSpace null_space(const Eigen::MatrixXd& m, double rel) {
    NullSpace ns;
    const auto cols = m.cols();
    if (m.rows() == 0) {
        ns.basis = Eigen::MatrixXd::Identity(cols, cols);
        ns.decision.gap = kInf;
        return ns;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    ns.singular_values = svd.singularValues();
    ns.decision = numerical_rank(ns.singular_values, rel);
    ns.basis = svd.matrixV().rightCols(cols - ns.decision.rank);
    return ns;
}

TriPoly<Complex> to_tripoly(const Eigen::VectorXd& coeffs, int degree, bool has_top) {
    const int off = has_top ? 0 : 1;
    if (coeffs.size() != monomial_count(degree) - off)
        throw Error(ErrorCode::InvalidArgument, "coefficient vector does not match degree");
    TriPoly<Complex> p(degree);
    for (Eigen::Index n = 0; n < coeffs.size(); ++n) p[static_cast<int>(n) + off] = coeffs(n);
    return p;
}

Eigen::VectorXd to_vector(const TriPoly<Complex>& p, bool drop_top) {
    if (!p.is_real(1e-9 * std::max(1.0, p.max_abs())))
        throw Error(ErrorCode::InvalidArgument, "expected real coefficients");
    const int off = drop_top ? 1 : 0;
    Eigen::VectorXd v(p.size() - off);
    for (int n = off; n < p.size(); ++n) v(n - off) = p[n].real();
    return v;
}

Eigen::MatrixXcd isotropic_restriction_matrix(int degree, Isotropic sign) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(degree, monomial_count(degree) - 1);
    int idx = 0;
    for (const auto& e : monomials(degree)) {
        if (idx > 0) r(e.k, idx - 1) = isotropic_weight(e.i, e.j, sign);
        ++idx;
    }
    return r;
}

double FocalJacobianReport::max_division_residual() const {
    double m = 0.0;
    for (const auto& k : kernel) m = std::max(m, k.division_residual);
    return m;
}

double FocalJacobianReport::max_shifted_residual() const {
    double m = 0.0;
    for (const auto& k : kernel) m = std::max(m, k.shifted_residual);
    return m;
}

FocalJacobianReport focal_jacobian(const TriPoly<Complex>& g, const std::vector<TriPoly<Complex>>& tangent_basis,
                                   double rel) {
    const int c = g.degree();
    if (c < 2) throw Error(ErrorCode::DegreeTooLow, "focal Jacobian needs class at least 2");
    const int m = static_cast<int>(tangent_basis.size());
    const int n = monomial_count(c) - 1;
    Eigen::MatrixXd t(n, m);
    for (int j = 0; j < m; ++j) {
        const auto& h = tangent_basis[j];
        if (h.degree() != c) throw Error(ErrorCode::InvalidArgument, "tangent vector of the wrong degree");
        if (std::abs(h.top_w()) > 1e-12 * std::max(1.0, h.max_abs()))
            throw Error(ErrorCode::InvalidArgument, "tangent vector has a w^c term");
        t.col(j) = to_vector(h, true);
    }
    FocalJacobianReport rep;
    rep.c = c;
    rep.tangent_dim = m;
    const Eigen::MatrixXcd a = isotropic_restriction_matrix(c, Isotropic::plus) * t;
    rep.jacobian.resize(2 * c, m);
    rep.jacobian << a.real(), a.imag();
    if (m == 0) {
        rep.gap = kInf;
        return rep;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(rep.jacobian, Eigen::ComputeFullV);
    rep.singular_values = svd.singularValues();
    const RankDecision d = numerical_rank(rep.singular_values, rel);
    rep.rank = d.rank;
    rep.gap = d.gap;
    const Eigen::MatrixXd kernel = t * svd.matrixV().rightCols(m - d.rank);
    for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
        KernelElement e;
        e.k = to_tripoly(kernel.col(j), c);
        auto qr = divide_by_isotropic_conic(e.k);
        e.q = std::move(qr.quotient);
        e.division_residual = qr.residual / std::max(e.k.max_abs(), std::numeric_limits<double>::min());
        rep.kernel.push_back(std::move(e));
    }
    return rep;
}

FocalJacobianReport analyze_equiclassical(const TriPoly<Complex>& g, const EquiclassicalScheme& z, double rel) {
    const int c = g.degree();
    if (c < 2) throw Error(ErrorCode::DegreeTooLow, "equiclassical analysis needs class at least 2");
    const int genus = (c - 1) * (c - 2) / 2 - z.delta() - z.kappa();
    if (genus < 0) throw Error(ErrorCode::InvalidArgument, "more singularities than the arithmetic genus allows");

    const NullSpace tangent = null_space(equiclassical_conditions(z, c), rel);
    std::vector<TriPoly<Complex>> basis;
    for (Eigen::Index j = 0; j < tangent.basis.cols(); ++j) basis.push_back(to_tripoly(tangent.basis.col(j), c));

    FocalJacobianReport rep = focal_jacobian(g, basis, rel);
    rep.delta = z.delta();
    rep.kappa = z.kappa();
    rep.genus = genus;
    rep.d = c * (c - 1) - 2 * z.delta() - 3 * z.kappa();
    rep.condition_rank = tangent.decision.rank;
    rep.condition_gap = tangent.decision.gap;
    const int expected_dim = c + rep.d - genus + 1;
    rep.expected_rank = std::min(2 * c, expected_dim);
    rep.expected_kernel = expected_dim - rep.expected_rank;

    const Eigen::MatrixXd shifted = equiclassical_conditions(z, c - 2, false);
    rep.shifted_dim = static_cast<int>(null_space(shifted, rel).basis.cols());
    for (auto& e : rep.kernel) {
        const Eigen::VectorXd q = to_vector(real_part(e.q), false);
        const double qn = q.norm();
        e.shifted_residual = shifted.rows() == 0 || qn == 0.0 ? 0.0 : (shifted * q).norm() / qn;
    }

    const Eigen::MatrixXcd nc = complex_null_space(complex_conditions(z, c), monomial_count(c) - 1, rel);
    Eigen::MatrixXcd jc(2 * c, nc.cols());
    jc << isotropic_restriction_matrix(c, Isotropic::plus) * nc, isotropic_restriction_matrix(c, Isotropic::minus) * nc;
    rep.complex_rank = nc.cols() == 0 ? 0 : numerical_rank(Eigen::JacobiSVD<Eigen::MatrixXcd>(jc).singularValues(), rel).rank;
    return rep;
}

int shifted_section_dim(const EquiclassicalScheme& z, int c, double rel) {
    if (c < 2) throw Error(ErrorCode::DegreeTooLow, "shifted system needs class at least 2");
    return static_cast<int>(null_space(equiclassical_conditions(z, c - 2, false), rel).basis.cols());
}

ConfocalFamily confocal_family(const TriPoly<Complex>& base) {
    const int c = base.degree();
    if (c < 2) throw Error(ErrorCode::DegreeTooLow, "confocal family needs class at least 2");
    ConfocalFamily fam;
    fam.base = base;
    const auto y = isotropic_conic<Complex>();
    for (const auto& e : monomials(c - 2)) fam.basis.push_back(y * TriPoly<Complex>::monomial(e, Complex(1)));
    return fam;
}

FocalSystem focal_system(const std::vector<std::array<double, 2>>& foci) {
    const int c = static_cast<int>(foci.size());
    if (c < 1) throw Error(ErrorCode::TooFewFoci, "focal system needs at least one focus");
    UniPoly<Complex> target = UniPoly<Complex>::constant(Complex(1));
    for (const auto& f : foci) target = target * UniPoly<Complex>({-Complex(f[0], f[1]), Complex(1)});
    const Eigen::MatrixXcd r = isotropic_restriction_matrix(c, Isotropic::plus);
    FocalSystem sys;
    sys.matrix.resize(2 * c, r.cols());
    sys.matrix << r.real(), r.imag();
    sys.rhs.resize(2 * c);
    for (int k = 0; k < c; ++k) {
        sys.rhs(k) = target[k].real();
        sys.rhs(c + k) = target[k].imag();
    }
    return sys;
}

SiebeckReport siebeck(const std::vector<Complex>& roots, double tol) {
    const int n = static_cast<int>(roots.size());
    if (n < 2) throw Error(ErrorCode::DegreeTooLow, "polar construction needs at least two roots");
    TriPoly<Complex> h = TriPoly<Complex>::monomial({0, 0, 0}, Complex(1));
    UniPoly<Complex> f = UniPoly<Complex>::constant(Complex(1));
    for (const auto& z : roots) {
        h = h * TriPoly<Complex>::linear(z.real(), z.imag(), 1.0);
        f = f * UniPoly<Complex>({-z, Complex(1)});
    }
    SiebeckReport rep;
    rep.polar = derivative(h, Var::w);
    const UniPoly<Complex> fp = derivative(f);
    const UniPoly<Complex> pp = restrict_isotropic(rep.polar, Isotropic::plus);
    for (int k = 0; k <= std::max(fp.formal_degree(), pp.formal_degree()); ++k)
        rep.identity_residual = std::max(rep.identity_residual, std::abs(pp.coeff(k) - fp.coeff(k)));
    rep.foci = focal_divisor(rep.polar, tol).divisor;
    rep.critical_points = find_roots(fp, tol).expanded();
    rep.matching_distance = matching_distance(rep.foci.expanded(), rep.critical_points);
    return rep;
}

}  // namespace confocal
