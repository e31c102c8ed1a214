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

#include "confocal/tripoly.hpp"

namespace confocal {

TriPoly<Rational> primitive_part(const TriPoly<Rational>& p) {
    if (p.is_zero()) return p;
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> ints;
    ints.reserve(p.size());
    mpz_class content = 0;
    for (const auto& c : p.coeffs()) {
        ints.push_back(c.get_num() * (den_lcm / c.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
    }
    for (const auto& v : ints)
        if (v != 0) {
            if (v < 0) content = -content;
            break;
        }
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const auto& v : ints) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
        out.emplace_back(q);
    }
    return TriPoly<Rational>(p.degree(), std::move(out));
}

bool proportional(const TriPoly<Rational>& a, const TriPoly<Rational>& b) {
    if (a.degree() != b.degree()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return primitive_part(a) == primitive_part(b);
}

}  // namespace confocal
