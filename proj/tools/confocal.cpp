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

// Command-line front end: JSON in, JSON (or a table) out.
//
// Exit codes: 0 ok, 1 property violation, 2 validation failure, 3 numerical ambiguity.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "confocal/experiment.hpp"
#include "confocal/io.hpp"
#include "confocal/plucker.hpp"

using namespace confocal;
using io::Json;

namespace {

enum Exit { kOk = 0, kViolation = 1, kValidation = 2, kAmbiguity = 3 };

struct Global {
    double tol = 1e-9;
    std::string format = "json";
    bool table() const { return format == "table"; }
};

// Raised for CLI-level validation that no library call reports.
Error usage(const std::string& message) { return Error(ErrorCode::InvalidArgument, message); }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::array<Rational, 2>> exact_points(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a list of points");
    std::vector<std::array<Rational, 2>> out;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw Error(ErrorCode::ParseError, "a point is a pair [x, y]");
        out.push_back({io::rational_from_json(p[0]), io::rational_from_json(p[1])});
    }
    return out;
}

std::vector<Complex> complex_list(const Json& j) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected a list of complex numbers");
    std::vector<Complex> out;
    for (const auto& z : j) out.push_back(io::complex_from_json(z));
    return out;
}

TriPoly<Rational> dual_of_param(const RationalCurveParam& p) {
    auto imp = implicitize_report(dual_param(p));
    if (!imp.birational) throw usage("parameterization is not birational onto its image");
    return imp.poly;
}

void print_foci_table(const FocalDivisor& fd) {
    std::cout << std::setw(24) << "x" << std::setw(24) << "y" << std::setw(6) << "mult" << "\n";
    for (const auto& f : real_foci(fd))
        std::cout << std::setw(24) << to_decimal_string(f.x) << std::setw(24) << to_decimal_string(f.y)
                  << std::setw(6) << f.multiplicity << "\n";
    if (fd.degree_drop > 0) std::cout << "degree drop " << fd.degree_drop << "\n";
}

// Affine points of a parameterized primal curve on t in [-3, 3].
Json sample_points(const RationalCurveParam& p, int n) {
    Json pts = Json::array();
    for (int k = 0; k < n; ++k) {
        const double t = n == 1 ? 0.0 : -3.0 + 6.0 * k / (n - 1);
        const auto xyz = p.at(Complex(t));
        if (std::abs(xyz[2]) < 1e-12) continue;
        pts.push_back({(xyz[0] / xyz[2]).real(), (xyz[1] / xyz[2]).real()});
    }
    return pts;
}

struct FociArgs {
    std::string dual, primal, param;
    int emit_points = 0;
};

int cmd_foci(const FociArgs& a, const Global& g) {
    const int given = !a.dual.empty() + !a.primal.empty() + !a.param.empty();
    if (given != 1) throw usage("give exactly one of --dual, --primal, --param");
    if (a.emit_points > 0 && a.param.empty()) throw usage("--emit-points needs --param");
    FocalResult r;
    Json extra;
    if (!a.dual.empty()) {
        const Json j = io::load(a.dual);
        r = focal_divisor(io::complex_tripoly(j), g.tol);
    } else if (!a.primal.empty()) {
        r = primal_focal_divisor(io::rational_tripoly(io::load(a.primal)), g.tol);
    } else {
        const RationalCurveParam p = io::param_from_json(io::load(a.param));
        const TriPoly<Rational> dual = dual_of_param(p);
        r = focal_divisor(dual, g.tol);
        extra["dual_curve"] = io::to_json(dual);
        if (a.emit_points > 0) extra["points"] = sample_points(p, a.emit_points);
    }
    if (g.table()) {
        print_foci_table(r.divisor);
        return kOk;
    }
    Json out = io::to_json(r);
    for (auto it = extra.begin(); extra.is_object() && it != extra.end(); ++it) out[it.key()] = it.value();
    emit(out);
    return kOk;
}

struct ConstructArgs {
    std::string foci, q;
    bool random_q = false;
    bool family = false;
    std::optional<std::uint64_t> seed;
};

int cmd_construct(const ConstructArgs& a, const Global& g) {
    const auto foci = exact_points(io::load(a.foci));
    const int c = static_cast<int>(foci.size());
    if (c < 2) throw Error(ErrorCode::TooFewFoci, "minimal-class construction needs at least two foci");
    if (a.random_q && !a.q.empty()) throw usage("give at most one of --q, --random-q");
    TriPoly<Rational> q(c - 2);
    if (!a.q.empty()) {
        q = io::rational_tripoly(io::load(a.q));
    } else if (a.random_q) {
        if (!a.seed) throw usage("--random-q needs --seed");
        Rng rng(*a.seed, static_cast<std::uint64_t>(c));
        for (int n = 0; n < q.size(); ++n) q[n] = rng.dyadic();
    }
    const TriPoly<Rational> gpoly = construct_min_class(foci, q);
    const FocalResult fr = focal_divisor(gpoly, g.tol);
    std::vector<Complex> prescribed;
    for (const auto& f : foci) prescribed.emplace_back(to_double(f[0]), to_double(f[1]));
    const double dist = matching_distance(fr.divisor.expanded(), prescribed);
    Json out = {{"dual_curve", io::to_json(gpoly)},
                {"q", io::to_json(q)},
                {"verification", {{"focal", io::to_json(fr)}, {"matching_distance", dist}, {"ok", dist < 1e-8}}}};
    if (a.family) {
        const ConfocalFamily fam = confocal_family(to_complex(gpoly));
        Json basis = Json::array();
        for (const auto& b : fam.basis) basis.push_back(io::to_json(b));
        out["family"] = {{"dimension", fam.dimension()}, {"basis", basis}};
    }
    emit(out);
    return dist < 1e-8 ? kOk : kViolation;
}

int cmd_siebeck(const std::string& roots, const Global& g) {
    const SiebeckReport r = siebeck(complex_list(io::load(roots)), g.tol);
    emit(io::to_json(r));
    return r.matching_distance < 1e-9 ? kOk : kViolation;
}

struct ExperimentArgs {
    int c = 2;
    int kappa = 0;
    int trials = 25;
    int jobs = 1;
    std::uint64_t seed = 0;
};

int cmd_rank_experiment(const ExperimentArgs& a, const Global& g) {
    ExperimentOptions opts;
    opts.trials = a.trials;
    opts.seed = a.seed;
    opts.jobs = a.jobs;
    const ExperimentSummary s = run_rank_experiment(a.c, a.kappa, opts);
    if (g.table()) {
        std::cout << std::setw(6) << "trial" << std::setw(22) << "seed" << std::setw(5) << "m" << std::setw(6) << "rank"
                  << std::setw(8) << "kernel" << std::setw(12) << "outcome" << "  reason\n";
        for (const auto& t : s.trials) {
            std::cout << std::setw(6) << t.index << std::setw(22) << t.seed;
            if (t.report)
                std::cout << std::setw(5) << t.report->tangent_dim << std::setw(6) << t.report->rank << std::setw(8)
                          << t.report->kernel_dim();
            else
                std::cout << std::setw(5) << "-" << std::setw(6) << "-" << std::setw(8) << "-";
            std::cout << std::setw(12) << to_string(t.outcome) << "  " << t.reason << "\n";
        }
        std::cout << "passed " << s.passed << ", failed " << s.failed << ", degenerate " << s.degenerate << "\n";
    } else {
        emit(io::to_json(s));
    }
    return s.failed > 0 ? kViolation : kOk;
}

struct PluckerArgs {
    std::optional<int> degree;
    int delta = 0;
    int kappa = 0;
    std::optional<int> max_degree;
};

Json plucker_row(const PluckerInvariants& inv) {
    Json row = io::to_json(inv);
    if (inv.d >= 2) {
        row["maximal_class_rational_dim"] = maximal_class_rational_dim(inv.d);
        row["smooth_curve_count"] = smooth_curve_count(inv.d);
    }
    return row;
}

int cmd_plucker(const PluckerArgs& a, const Global& g) {
    if (a.degree.has_value() == a.max_degree.has_value()) throw usage("give exactly one of --degree, --max-degree");
    std::vector<PluckerInvariants> rows;
    if (a.degree) {
        rows.push_back(plucker_invariants(*a.degree, a.delta, a.kappa));
    } else {
        if (*a.max_degree < 2 || *a.max_degree > 30) throw usage("--max-degree must lie in 2..30");
        for (int d = 2; d <= *a.max_degree; ++d) {
            const int pa = (d - 1) * (d - 2) / 2;
            for (int kappa = 0; kappa <= pa; ++kappa)
                for (int delta = 0; delta + kappa <= pa; ++delta)
                    if (d * (d - 1) - 2 * delta - 3 * kappa >= 0) rows.push_back(plucker_invariants(d, delta, kappa));
        }
    }
    if (g.table()) {
        std::cout << std::setw(4) << "d" << std::setw(7) << "delta" << std::setw(7) << "kappa" << std::setw(4) << "g"
                  << std::setw(5) << "c" << std::setw(10) << "confocal" << "\n";
        for (const auto& r : rows)
            std::cout << std::setw(4) << r.d << std::setw(7) << r.delta << std::setw(7) << r.kappa << std::setw(4) << r.g
                      << std::setw(5) << r.c << std::setw(10) << expected_confocal_dim(r.d, r.g, r.c) << "\n";
        return kOk;
    }
    if (a.degree) {
        emit(plucker_row(rows.front()));
    } else {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(plucker_row(r));
        emit(arr);
    }
    return kOk;
}

int cmd_dualize(const std::string& param) {
    const RationalCurveParam p = io::param_from_json(io::load(param));
    const RationalCurveParam d = dual_param(p);
    const Implicitization imp = implicitize_report(d);
    emit({{"dual_param", io::to_json(d)},
          {"degree", d.degree()},
          {"implicit", io::to_json(imp.poly)},
          {"birational", imp.birational}});
    return kOk;
}

int cmd_implicitize(const std::string& param) {
    const Implicitization imp = implicitize_report(io::param_from_json(io::load(param)));
    emit({{"implicit", io::to_json(imp.poly, io::Plane::primal)}, {"birational", imp.birational}});
    return kOk;
}

struct KernelArgs {
    std::optional<int> c;
    int kappa = 0;
    std::optional<std::uint64_t> seed;
    std::string dual_param, dual, scheme;
};

int cmd_kernel(const KernelArgs& a) {
    const int given = a.c.has_value() + !a.dual_param.empty() + !a.dual.empty();
    if (given != 1) throw usage("give exactly one of --c, --dual-param, --dual");
    TriPoly<Complex> g;
    EquiclassicalScheme z;
    Json out;
    if (a.c) {
        if (!a.seed) throw usage("--c needs --seed");
        const GeneratedCurve curve = generate_curve(*a.c, a.kappa, *a.seed);
        g = to_complex(curve.implicit);
        z = scheme_from(curve.singularities);
        out["dual_param"] = io::to_json(curve.param);
    } else if (!a.dual_param.empty()) {
        const RationalCurveParam p = io::param_from_json(io::load(a.dual_param));
        const Implicitization imp = implicitize_report(p);
        if (!imp.birational) throw usage("parameterization is not birational onto its image");
        g = to_complex(normalize_chart(imp.poly));
        z = scheme_from(locate_singularities(p));
        validate_scheme(p, z);
    } else {
        g = io::complex_tripoly(io::load(a.dual));
        if (!a.scheme.empty()) z = io::scheme_from_json(io::load(a.scheme));
    }
    const FocalJacobianReport r = analyze_equiclassical(normalize_chart(g), z);
    out["dual_curve"] = io::to_json(g);
    out["scheme"] = io::to_json(z);
    out["report"] = io::to_json(r);
    // The rank formula is proven only for rational curves; the kernel factorization holds in every genus.
    bool violated = r.kernel_dim() != r.shifted_dim || r.complex_rank != r.rank;
    if (r.genus == 0) violated = violated || r.rank != r.expected_rank || r.kernel_dim() != r.expected_kernel;
    out["consistent"] = !violated;
    emit(out);
    return violated ? kViolation : kOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ToleranceAmbiguity:
        case ErrorCode::ClusterAmbiguity:
        case ErrorCode::NonConvergence: return kAmbiguity;
        default: return kValidation;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Foci, confocal families and focal-map ranks of plane curves"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--tol", g.tol, "Root and matching tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();

    FociArgs foci;
    auto* s_foci = app.add_subcommand("foci", "Focal divisor of a dual curve, smooth primal curve or parameterization");
    s_foci->add_option("--dual", foci.dual, "Dual curve G(u,v,w), JSON or path");
    s_foci->add_option("--primal", foci.primal, "Smooth primal curve f(x,y,z), JSON or path");
    s_foci->add_option("--param", foci.param, "Primal parameterization, JSON or path");
    s_foci->add_option("--emit-points", foci.emit_points, "Sample this many curve points (parameterized input)")
        ->check(CLI::NonNegativeNumber);

    ConstructArgs cons;
    auto* s_cons = app.add_subcommand("construct", "Minimal-class curve with prescribed foci");
    s_cons->add_option("--foci", cons.foci, "List of [x, y] foci")->required();
    s_cons->add_option("--q", cons.q, "Degree c-2 polynomial Q, JSON or path");
    s_cons->add_flag("--random-q", cons.random_q, "Draw Q from --seed");
    s_cons->add_option("--seed", cons.seed, "Seed for --random-q");
    s_cons->add_flag("--family", cons.family, "Also emit the confocal family basis");

    std::string roots;
    auto* s_sie = app.add_subcommand("siebeck", "Foci of the polar curve against the critical points of f");
    s_sie->add_option("--roots", roots, "Roots of f as [re, im] pairs")->required();

    ExperimentArgs exp;
    auto* s_exp = app.add_subcommand("rank-experiment", "Monte Carlo check of the focal-map rank");
    s_exp->add_option("--c", exp.c, "Class c (degree of the dual curve)")->required();
    s_exp->add_option("--kappa", exp.kappa, "Cusp count of the dual curve")->capture_default_str();
    s_exp->add_option("--trials", exp.trials, "Number of draws")->check(CLI::NonNegativeNumber)->capture_default_str();
    s_exp->add_option("--seed", exp.seed, "Base seed; trial i uses seed + i")->required();
    s_exp->add_option("--jobs", exp.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

    PluckerArgs pl;
    auto* s_pl = app.add_subcommand("plucker", "Plücker invariants and expected dimensions");
    s_pl->add_option("--degree", pl.degree, "Curve degree d");
    s_pl->add_option("--delta", pl.delta, "Node count")->capture_default_str();
    s_pl->add_option("--kappa", pl.kappa, "Cusp count")->capture_default_str();
    s_pl->add_option("--max-degree", pl.max_degree, "Tabulate every admissible row up to this degree");

    std::string dualize_param;
    auto* s_dual = app.add_subcommand("dualize", "Dual parameterization and its implicit equation");
    s_dual->add_option("--param", dualize_param, "Parameterization, JSON or path")->required();

    std::string imp_param;
    auto* s_imp = app.add_subcommand("implicitize", "Implicit equation of a parameterization");
    s_imp->add_option("--param", imp_param, "Parameterization, JSON or path")->required();

    KernelArgs ker;
    auto* s_ker = app.add_subcommand("kernel", "Focal Jacobian, kernel and its factorization through u^2 + v^2");
    s_ker->add_option("--c", ker.c, "Generate a dual curve of this class");
    s_ker->add_option("--kappa", ker.kappa, "Cusps of the generated curve")->capture_default_str();
    s_ker->add_option("--seed", ker.seed, "Seed of the generated curve");
    s_ker->add_option("--dual-param", ker.dual_param, "Parameterization of the dual curve, JSON or path");
    s_ker->add_option("--dual", ker.dual, "Dual curve G(u,v,w), JSON or path");
    s_ker->add_option("--scheme", ker.scheme, "Nodes and cusps of --dual, JSON or path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        emit(io::error_json("UsageError", e.what()));
        return kValidation;
    }

    try {
        if (*s_foci) return cmd_foci(foci, g);
        if (*s_cons) return cmd_construct(cons, g);
        if (*s_sie) return cmd_siebeck(roots, g);
        if (*s_exp) return cmd_rank_experiment(exp, g);
        if (*s_pl) return cmd_plucker(pl, g);
        if (*s_dual) return cmd_dualize(dualize_param);
        if (*s_imp) return cmd_implicitize(imp_param);
        if (*s_ker) return cmd_kernel(ker);
    } catch (const ToleranceAmbiguityError& e) {
        std::cerr << e.what() << "\n";
        Json j = io::error_json(e);
        j["error"]["candidates"] = {e.low(), e.high()};
        emit(j);
        return kAmbiguity;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        emit(io::error_json(e));
        return exit_code_for(e.code());
    }
    return kValidation;
}
