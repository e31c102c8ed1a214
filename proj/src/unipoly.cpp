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

#include "confocal/unipoly.hpp"

namespace confocal {

UniPoly<Rational> primitive_part(const UniPoly<Rational>& p) {
    int d = p.degree();
    if (d < 0) return UniPoly<Rational>();
    mpz_class den_lcm = 1;
    for (int k = 0; k <= d; ++k) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), p[k].get_den_mpz_t());
    std::vector<mpz_class> ints(d + 1);
    mpz_class content = 0;
    for (int k = 0; k <= d; ++k) {
        ints[k] = p[k].get_num() * (den_lcm / p[k].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[k].get_mpz_t());
    }
    if (ints[d] < 0) content = -content;
    std::vector<Rational> out(d + 1);
    for (int k = 0; k <= d; ++k) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), ints[k].get_mpz_t(), content.get_mpz_t());
        out[k] = Rational(q);
    }
    return UniPoly<Rational>(std::move(out));
}

UniPoly<Rational> monic(const UniPoly<Rational>& p) {
    int d = p.degree();
    if (d < 0) return UniPoly<Rational>();
    Rational lead = p[d];
    std::vector<Rational> out(d + 1);
    for (int k = 0; k <= d; ++k) out[k] = p[k] / lead;
    return UniPoly<Rational>(std::move(out));
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions on integer inputs.
UniPoly<Rational> pseudo_remainder(UniPoly<Rational> a, const UniPoly<Rational>& b) {
    int db = b.degree();
    const Rational lead = b[db];
    std::vector<Rational> r(a.trimmed().coeffs());
    int dr = a.degree();
    while (dr >= db) {
        Rational top = r[dr];
        for (auto& c : r) c *= lead;
        for (int j = 0; j <= db; ++j) r[dr - db + j] -= top * b[j];
        r[dr] = 0;
        dr = UniPoly<Rational>(r).degree();
    }
    return UniPoly<Rational>(std::move(r)).trimmed();
}

}  // namespace

UniPoly<Rational> gcd(const UniPoly<Rational>& a, const UniPoly<Rational>& b) {
    UniPoly<Rational> x = primitive_part(a);
    UniPoly<Rational> y = primitive_part(b);
    if (x.is_zero()) return monic(y);
    if (y.is_zero()) return monic(x);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) return UniPoly<Rational>::constant(Rational(1));
        UniPoly<Rational> r = primitive_part(pseudo_remainder(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

UniPoly<Rational> squarefree_part(const UniPoly<Rational>& p) {
    if (p.degree() <= 0) return monic(p);
    UniPoly<Rational> g = gcd(p, derivative(p));
    return monic(ring_exact_div(p, g));
}

}  // namespace confocal
