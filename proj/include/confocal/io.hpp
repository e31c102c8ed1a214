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

#ifndef CONFOCAL_IO_HPP
#define CONFOCAL_IO_HPP

#include <array>
#include <string>
#include <string_view>

#include "json.hpp"

#include "confocal/equiclassical.hpp"
#include "confocal/experiment.hpp"
#include "confocal/plucker.hpp"

namespace confocal::io {

using Json = nlohmann::json;

/// Variable names of a ternary form: dual coordinates or primal coordinates.
enum class Plane { dual, primal };

/// {"vars":[...],"degree":c,"terms":[{"exp":[i,j,k],"coef":{"re":"p/q","im":"0"}}]}; zero terms omitted.
Json to_json(const TriPoly<Rational>& p, Plane plane = Plane::dual);
Json to_json(const TriPoly<Complex>& p, Plane plane = Plane::dual);

/// Coefficients may be {"re","im"} objects, strings ("p/q" or decimal) or numbers.
/// Throws ParseError on malformed input and InvalidArgument on non-real exact input.
TriPoly<Rational> rational_tripoly(const Json& j);
TriPoly<Complex> complex_tripoly(const Json& j);
/// Plane named by "vars"; dual when absent.
Plane plane_of(const Json& j);

/// {"var":"t","components":[[a0,a1,...],[...],[...]]} with ascending coefficients.
Json to_json(const RationalCurveParam& p);
RationalCurveParam param_from_json(const Json& j);

Rational rational_from_json(const Json& j);
Complex complex_from_json(const Json& j);
Json complex_json(const Complex& z);

Json to_json(const FocalResult& r);
Json to_json(const FocalDivisor& fd);

/// {"nodes":[{"point":[z,z,z],"params":[s,t]}],"cusps":[{"point":..,"direction":..,"param":t}]}.
Json to_json(const EquiclassicalScheme& z);
EquiclassicalScheme scheme_from_json(const Json& j);

Json to_json(const FocalJacobianReport& r);
Json to_json(const SiebeckReport& r);
Json to_json(const PluckerInvariants& inv);

/// {c, kappa, d, tangent_dim, rank, kernel_dim, expected_rank, expected_kernel, residuals, seed, ...}.
Json to_json(const TrialRecord& t);
/// Per-trial records plus the pass/fail/degenerate summary.
Json to_json(const ExperimentSummary& s);

/// {"error":{"code":...,"message":...}}.
Json error_json(const Error& e);
Json error_json(std::string_view code, std::string_view message);

/// Inline JSON when the text starts with '{' or '[', otherwise a file path.
Json load(const std::string& text_or_path);

}  // namespace confocal::io

#endif  // CONFOCAL_IO_HPP
