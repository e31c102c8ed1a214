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

#include "confocal/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace confocal::io {

namespace {

const std::array<std::string, 3>& names(Plane plane) {
    static const std::array<std::string, 3> dual{"u", "v", "w"}, primal{"x", "y", "z"};
    return plane == Plane::dual ? dual : primal;
}

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

// Infinite values become null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json point_json(const Point3& p) { return Json::array({complex_json(p[0]), complex_json(p[1]), complex_json(p[2])}); }

Point3 point_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) bad("a point needs three coordinates");
    return {complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2])};
}

struct Term {
    Exponent e;
    Json coef;
};

std::pair<int, std::vector<Term>> read_terms(const Json& j) {
    if (!j.is_object()) bad("polynomial must be a JSON object");
    plane_of(j);
    if (!j.contains("degree") || !j["degree"].is_number_integer()) bad("polynomial needs an integer degree");
    const int degree = j["degree"].get<int>();
    if (degree < 0) bad("negative degree");
    if (!j.contains("terms") || !j["terms"].is_array()) bad("polynomial needs a terms array");
    std::vector<Term> out;
    std::set<std::array<int, 3>> seen;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exp") || !t.contains("coef")) bad("each term needs exp and coef");
        const auto& e = t["exp"];
        if (!e.is_array() || e.size() != 3) bad("exp must have three entries");
        std::array<int, 3> x{};
        for (int k = 0; k < 3; ++k) {
            if (!e[k].is_number_integer() || e[k].get<int>() < 0) bad("exponents must be non-negative integers");
            x[k] = e[k].get<int>();
        }
        if (x[0] + x[1] + x[2] != degree) bad("exponents do not sum to the degree");
        if (!seen.insert(x).second) bad("repeated monomial");
        out.push_back({{x[0], x[1], x[2]}, t["coef"]});
    }
    return {degree, std::move(out)};
}

std::pair<Rational, Rational> exact_parts(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("re")) bad("complex coefficient needs re");
        Rational im = j.contains("im") ? rational_from_json(j["im"]) : Rational(0);
        return {rational_from_json(j["re"]), im};
    }
    if (j.is_array()) {
        if (j.size() != 2) bad("complex pair needs two entries");
        return {rational_from_json(j[0]), rational_from_json(j[1])};
    }
    return {rational_from_json(j), Rational(0)};
}

UniPoly<Rational> unipoly_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("a component must be a non-empty coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j) {
        auto [re, im] = exact_parts(x);
        if (sgn(im) != 0) throw Error(ErrorCode::InvalidArgument, "parameterization coefficients must be real");
        c.push_back(re);
    }
    return UniPoly<Rational>(std::move(c));
}

}  // namespace

Plane plane_of(const Json& j) {
    if (!j.contains("vars")) return Plane::dual;
    const auto& v = j["vars"];
    for (Plane p : {Plane::dual, Plane::primal}) {
        const auto& n = names(p);
        if (v.is_array() && v.size() == 3 && v[0] == n[0] && v[1] == n[1] && v[2] == n[2]) return p;
    }
    bad("vars must be [\"u\",\"v\",\"w\"] or [\"x\",\"y\",\"z\"]");
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_unsigned()) return Rational(j.get<unsigned long>());
    if (j.is_number_float()) return parse_rational(to_decimal_string(j.get<double>()));
    bad("expected a number or numeric string");
}

Complex complex_from_json(const Json& j) {
    auto [re, im] = exact_parts(j);
    return {to_double(re), to_double(im)};
}

Json complex_json(const Complex& z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json to_json(const TriPoly<Rational>& p, Plane plane) {
    Json terms = Json::array();
    int idx = 0;
    for (const auto& e : monomials(p.degree())) {
        const Rational& c = p[idx++];
        if (sgn(c) == 0) continue;
        terms.push_back({{"exp", {e.i, e.j, e.k}}, {"coef", {{"re", to_string(c)}, {"im", "0"}}}});
    }
    return {{"vars", names(plane)}, {"degree", p.degree()}, {"terms", terms}};
}

Json to_json(const TriPoly<Complex>& p, Plane plane) {
    Json terms = Json::array();
    int idx = 0;
    for (const auto& e : monomials(p.degree())) {
        const Complex& c = p[idx++];
        if (c == 0.0) continue;
        terms.push_back({{"exp", {e.i, e.j, e.k}},
                         {"coef", {{"re", to_decimal_string(c.real())}, {"im", to_decimal_string(c.imag())}}}});
    }
    return {{"vars", names(plane)}, {"degree", p.degree()}, {"terms", terms}};
}

TriPoly<Rational> rational_tripoly(const Json& j) {
    auto [degree, terms] = read_terms(j);
    TriPoly<Rational> p(degree);
    for (const auto& t : terms) {
        auto [re, im] = exact_parts(t.coef);
        if (sgn(im) != 0) throw Error(ErrorCode::InvalidArgument, "expected real coefficients");
        p.coeff(t.e.i, t.e.j, t.e.k) = re;
    }
    return p;
}

TriPoly<Complex> complex_tripoly(const Json& j) {
    auto [degree, terms] = read_terms(j);
    TriPoly<Complex> p(degree);
    for (const auto& t : terms) p.coeff(t.e.i, t.e.j, t.e.k) = complex_from_json(t.coef);
    return p;
}

Json to_json(const RationalCurveParam& p) {
    Json comps = Json::array();
    for (const auto& c : p.components()) {
        Json a = Json::array();
        const UniPoly<Rational> t = c.trimmed();
        for (const auto& x : t.coeffs()) a.push_back(to_string(x));
        comps.push_back(a);
    }
    return {{"var", "t"}, {"components", comps}};
}

RationalCurveParam param_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("components")) bad("parameterization needs components");
    if (j.contains("var") && j["var"] != "t") bad("parameter must be named t");
    const auto& c = j["components"];
    if (!c.is_array() || c.size() != 3) bad("parameterization needs three components");
    return RationalCurveParam({unipoly_from_json(c[0]), unipoly_from_json(c[1]), unipoly_from_json(c[2])});
}

Json to_json(const FocalDivisor& fd) {
    Json entries = Json::array();
    for (const auto& e : fd.entries)
        entries.push_back({{"re", e.root.real()}, {"im", e.root.imag()}, {"mult", e.multiplicity}, {"singular", e.singular}});
    Json foci = Json::array();
    for (const auto& f : real_foci(fd)) foci.push_back({f.x, f.y, f.multiplicity});
    return {{"focal_divisor", entries}, {"real_foci", foci}, {"degree_drop", fd.degree_drop}};
}

Json to_json(const FocalResult& r) {
    Json j = to_json(r.divisor);
    const auto& d = r.diagnostics;
    Json multiple = Json::array(), singular = Json::array();
    for (const auto& z : d.multiple_focal_roots) multiple.push_back(complex_json(z));
    for (const auto& z : d.singular_point_roots) singular.push_back(complex_json(z));
    j["diagnostics"] = {{"tangent_at_infinity", d.tangent_at_infinity},
                        {"passes_circular_points", {d.passes_circular_points[0], d.passes_circular_points[1]}},
                        {"multiple_focal_roots", multiple},
                        {"singular_point_roots", singular},
                        {"residual", number(d.residual)},
                        {"reconstruction_error", number(d.reconstruction_error)}};
    return j;
}

Json to_json(const EquiclassicalScheme& z) {
    Json nodes = Json::array(), cusps = Json::array();
    for (const auto& n : z.nodes)
        nodes.push_back({{"point", point_json(n.point)}, {"params", {complex_json(n.s), complex_json(n.t)}}});
    for (const auto& c : z.cusps)
        cusps.push_back({{"point", point_json(c.point)}, {"direction", point_json(c.direction)}, {"param", complex_json(c.t)}});
    return {{"nodes", nodes}, {"cusps", cusps}};
}

EquiclassicalScheme scheme_from_json(const Json& j) {
    if (!j.is_object()) bad("scheme must be a JSON object");
    EquiclassicalScheme z;
    for (const auto& n : j.value("nodes", Json::array())) {
        SchemeNode node;
        node.point = point_from_json(n.at("point"));
        if (n.contains("params")) {
            if (!n["params"].is_array() || n["params"].size() != 2) bad("node params must be a pair");
            node.s = complex_from_json(n["params"][0]);
            node.t = complex_from_json(n["params"][1]);
        }
        z.nodes.push_back(node);
    }
    for (const auto& c : j.value("cusps", Json::array())) {
        if (!c.contains("point") || !c.contains("direction")) bad("a cusp needs point and direction");
        SchemeCusp cusp;
        cusp.point = point_from_json(c["point"]);
        cusp.direction = point_from_json(c["direction"]);
        if (c.contains("param")) cusp.t = complex_from_json(c["param"]);
        z.cusps.push_back(cusp);
    }
    return z;
}

Json to_json(const FocalJacobianReport& r) {
    Json sv = Json::array();
    for (Eigen::Index k = 0; k < r.singular_values.size(); ++k) sv.push_back(r.singular_values(k));
    Json kernel = Json::array();
    for (const auto& e : r.kernel)
        kernel.push_back({{"k", to_json(e.k)},
                          {"q", to_json(e.q)},
                          {"division_residual", number(e.division_residual)},
                          {"shifted_residual", number(e.shifted_residual)}});
    return {{"c", r.c},
            {"delta", r.delta},
            {"kappa", r.kappa},
            {"genus", r.genus},
            {"d", r.d},
            {"tangent_dim", r.tangent_dim},
            {"condition_rank", r.condition_rank},
            {"rank", r.rank},
            {"kernel_dim", r.kernel_dim()},
            {"expected_rank", r.expected_rank},
            {"expected_kernel", r.expected_kernel},
            {"shifted_dim", r.shifted_dim},
            {"complex_rank", r.complex_rank},
            {"gap", number(r.gap)},
            {"condition_gap", number(r.condition_gap)},
            {"singular_values", sv},
            {"residuals", {{"division", number(r.max_division_residual())}, {"shifted", number(r.max_shifted_residual())}}},
            {"kernel", kernel}};
}

Json to_json(const SiebeckReport& r) {
    Json crit = Json::array();
    for (const auto& z : r.critical_points) crit.push_back(complex_json(z));
    Json foci = to_json(r.foci);
    return {{"polar", to_json(r.polar)},
            {"foci", foci},
            {"critical_points", crit},
            {"matching_distance", number(r.matching_distance)},
            {"identity_residual", number(r.identity_residual)}};
}

Json to_json(const PluckerInvariants& inv) {
    auto rr = riemann_roch_alternative(inv.d - inv.c, inv.g);
    return {{"d", inv.d},
            {"g", inv.g},
            {"c", inv.c},
            {"delta", inv.delta},
            {"kappa", inv.kappa},
            {"expected_confocal_dim", expected_confocal_dim(inv.d, inv.g, inv.c)},
            {"expected_confocal_dim_clamped", expected_confocal_dim_clamped(inv.d, inv.g, inv.c)},
            {"riemann_roch",
             {{"b", inv.d - inv.c},
              {"expected_h0", rr.expected_h0},
              {"which_vanishing", std::string(to_string(rr.which_vanishing))},
              {"automatic", rr.automatic}}}};
}

Json to_json(const TrialRecord& t) {
    Json j = {{"index", t.index},
              {"seed", t.seed},
              {"c", t.c},
              {"kappa", t.kappa},
              {"d", t.d},
              {"expected_rank", std::min(2 * t.c, t.c + t.d + 1)},
              {"expected_kernel", std::max(0, t.d - t.c + 1)},
              {"outcome", std::string(to_string(t.outcome))},
              {"reason", t.reason}};
    if (t.report) {
        const auto& r = *t.report;
        j["tangent_dim"] = r.tangent_dim;
        j["rank"] = r.rank;
        j["kernel_dim"] = r.kernel_dim();
        j["shifted_dim"] = r.shifted_dim;
        j["complex_rank"] = r.complex_rank;
        j["gap"] = number(r.gap);
        j["condition_gap"] = number(r.condition_gap);
        j["residuals"] = {{"division", number(r.max_division_residual())}, {"shifted", number(r.max_shifted_residual())}};
    }
    return j;
}

Json to_json(const ExperimentSummary& s) {
    Json trials = Json::array();
    for (const auto& t : s.trials) trials.push_back(to_json(t));
    return {{"c", s.c},
            {"kappa", s.kappa},
            {"seed", s.seed},
            {"trials", trials},
            {"summary",
             {{"total", s.trials.size()},
              {"passed", s.passed},
              {"failed", s.failed},
              {"degenerate", s.degenerate},
              {"clean_fraction", s.clean_fraction()}}}};
}

Json error_json(std::string_view code, std::string_view message) {
    return {{"error", {{"code", std::string(code)}, {"message", std::string(message)}}}};
}

Json error_json(const Error& e) { return error_json(to_string(e.code()), e.what()); }

Json load(const std::string& text_or_path) {
    const auto first = text_or_path.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[')) {
        text = text_or_path;
    } else {
        std::ifstream in(text_or_path);
        if (!in) throw Error(ErrorCode::ParseError, "cannot read " + text_or_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace confocal::io
