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

#include "confocal/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>

namespace confocal {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Horner {
    Complex value;
    Complex slope;
    double bound;  // sum |a_k| |z|^k
};

Horner horner(const std::vector<Complex>& a, Complex z) {
    const int n = static_cast<int>(a.size()) - 1;
    Complex p = a[n], dp = 0.0;
    double b = std::abs(a[n]);
    const double az = std::abs(z);
    for (int k = n - 1; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + a[k];
        b = b * az + std::abs(a[k]);
    }
    return {p, dp, b};
}

// Roots of the monic polynomial a; returns false if the cap was hit.
bool aberth(const std::vector<Complex>& a, int max_iterations, std::vector<Complex>& z, int& iterations) {
    const int n = static_cast<int>(a.size()) - 1;
    Complex centroid = -a[n - 1] / static_cast<double>(n);
    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::abs(a[k]), 1.0 / (n - k)));
    if (radius == 0.0) radius = 1.0;
    z.resize(n);
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * std::numbers::pi * k / n + 0.4;
        z[k] = centroid + radius * Complex(std::cos(theta), std::sin(theta));
    }
    std::vector<bool> frozen(n, false);
    int active = n;
    for (iterations = 0; iterations < max_iterations && active > 0; ++iterations) {
        for (int k = 0; k < n; ++k) {
            if (frozen[k]) continue;
            Horner h = horner(a, z[k]);
            if (std::abs(h.value) <= 8.0 * n * kEps * h.bound) {
                frozen[k] = true;
                --active;
                continue;
            }
            Complex repulsion = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            Complex step;
            if (h.slope == Complex(0.0)) {
                step = Complex(1e-8 * (1.0 + std::abs(z[k])), 0.0);
            } else {
                Complex ratio = h.value / h.slope;
                step = ratio / (1.0 - ratio * repulsion);
            }
            z[k] -= step;
            if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(z[k]))) {
                frozen[k] = true;
                --active;
            }
        }
    }
    return active == 0;
}

void polish(const std::vector<Complex>& a, std::vector<Complex>& z) {
    for (auto& r : z) {
        for (int step = 0; step < 3; ++step) {
            Horner h = horner(a, r);
            if (h.slope == Complex(0.0)) break;
            Complex next = r - h.value / h.slope;
            if (std::abs(horner(a, next).value) < std::abs(h.value))
                r = next;
            else
                break;
        }
    }
}

// Connected components of the graph linking unassigned roots closer than radius.
std::vector<std::vector<int>> components(const std::vector<Complex>& z, const std::vector<bool>& taken, double radius) {
    const int n = static_cast<int>(z.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!taken[i] && !taken[j] && std::abs(z[i] - z[j]) <= radius) parent[find(i)] = find(j);
    std::vector<std::vector<int>> groups;
    std::vector<int> slot(n, -1);
    for (int i = 0; i < n; ++i) {
        if (taken[i]) continue;
        int r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(groups.size());
            groups.emplace_back();
        }
        groups[slot[r]].push_back(i);
    }
    return groups;
}

std::vector<Root> cluster(const std::vector<Complex>& z, double tol) {
    double scale = 1.0;
    for (auto r : z) scale = std::max(scale, std::abs(r));
    const int n = static_cast<int>(z.size());
    std::vector<bool> taken(n, false);
    std::vector<Root> out;
    auto accept = [&](const std::vector<int>& members) {
        Complex sum = 0.0;
        for (int k : members) {
            sum += z[k];
            taken[k] = true;
        }
        out.push_back({sum / static_cast<double>(members.size()), static_cast<int>(members.size())});
    };
    // An m-fold root computed in double precision splits into m roots spread over
    // about eps^(1/m); accept components of exactly m roots within that spread.
    for (int m = n; m >= 2; --m) {
        const double radius = scale * std::pow(4096.0 * kEps, 1.0 / m);
        if (radius > 1e-3 * scale) continue;
        for (const auto& g : components(z, taken, radius))
            if (static_cast<int>(g.size()) == m) accept(g);
    }
    for (const auto& g : components(z, taken, std::max(tol, 1e-6 * scale))) accept(g);
    return out;
}

}  // namespace

int RootSet::count() const {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
}

std::vector<Complex> RootSet::expanded() const {
    std::vector<Complex> out;
    for (const auto& r : roots)
        for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
    return out;
}

RootSet find_roots(const UniPoly<Complex>& p, double tol) {
    RootOptions opts;
    opts.tol = tol;
    return find_roots(p, opts);
}

RootSet find_roots(const UniPoly<Complex>& p, const RootOptions& opts) {
    std::vector<Complex> c = p.coeffs();
    double amax = 0.0;
    for (auto x : c) {
        if (!ScalarTraits<Complex>::is_finite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite coefficient");
        amax = std::max(amax, std::abs(x));
    }
    if (amax == 0.0) throw Error(ErrorCode::ZeroPolynomial, "cannot find roots of the zero polynomial");

    RootSet out;
    int n = p.formal_degree();
    while (n > 0 && std::abs(c[n]) <= opts.drop_tol * amax) {
        --n;
        ++out.degree_drop;
    }
    c.resize(n + 1);
    int zeros = 0;
    while (zeros < n && c[zeros] == Complex(0.0)) ++zeros;

    std::vector<Complex> a(c.begin() + zeros, c.end());
    const Complex lead = a.back();
    for (auto& x : a) x /= lead;
    std::vector<Complex> estimates;
    if (a.size() > 1) {
        bool ok = aberth(a, opts.max_iterations, estimates, out.iterations);
        if (!ok) {
            RootSet partial = out;
            for (auto z : estimates) partial.roots.push_back({z, 1});
            throw NonConvergenceError("root iteration did not converge within the cap", partial);
        }
        polish(a, estimates);
    }
    estimates.insert(estimates.end(), zeros, Complex(0.0));
    out.roots = cluster(estimates, opts.tol);
    for (auto& r : out.roots) {
        if (r.multiplicity < 2 || r.value == Complex(0.0)) continue;
        // an m-fold root is a simple root of the (m-1)-th derivative
        std::vector<Complex> d = a;
        for (int k = 1; k < r.multiplicity; ++k) d = derivative(UniPoly<Complex>(d)).coeffs();
        for (int step = 0; step < 5; ++step) {
            Horner h = horner(d, r.value);
            if (h.slope == Complex(0.0)) break;
            Complex next = r.value - h.value / h.slope;
            if (std::abs(horner(d, next).value) >= std::abs(h.value)) break;
            r.value = next;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const Root& x, const Root& y) {
        if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });

    UniPoly<Complex> stripped(c);
    for (const auto& r : out.roots)
        if (r.multiplicity == 1) out.residual = std::max(out.residual, std::abs(stripped(r.value)) / std::abs(lead));
    std::vector<Complex> rebuilt{lead};
    for (const auto& r : out.roots)
        for (int k = 0; k < r.multiplicity; ++k) {
            rebuilt.push_back(0.0);
            for (size_t j = rebuilt.size() - 1; j > 0; --j) rebuilt[j] = rebuilt[j - 1] - r.value * rebuilt[j];
            rebuilt[0] = -r.value * rebuilt[0];
        }
    double cmax = 0.0;
    for (auto x : c) cmax = std::max(cmax, std::abs(x));
    for (size_t k = 0; k < c.size(); ++k) {
        Complex b = k < rebuilt.size() ? rebuilt[k] : Complex(0.0);
        out.reconstruction_error = std::max(out.reconstruction_error, std::abs(b - c[k]) / cmax);
    }
    return out;
}

std::vector<FocusCandidate> match_focal_pairs(const RootSet& plus, const RootSet& minus, double tol) {
    const Complex i(0.0, 1.0);
    std::vector<FocusCandidate> out;
    for (const auto& rp : plus.roots)
        for (const auto& rm : minus.roots) {
            FocusCandidate f;
            f.x = 0.5 * (rp.value + rm.value);
            f.y = -0.5 * i * (rp.value - rm.value);
            f.is_real = std::abs(rm.value - std::conj(rp.value)) <= tol * (1.0 + std::abs(rp.value));
            f.multiplicity = rp.multiplicity * rm.multiplicity;
            out.push_back(f);
        }
    return out;
}

double matching_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    // potentials-based Hungarian method, 1-indexed
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);
    auto cost = [&](int r, int c) { return std::abs(a[r - 1] - b[c - 1]); };
    for (int r = 1; r <= n; ++r) {
        match[0] = r;
        int col = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[col] = true;
            int row = match[col], next = 0;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = cost(row, j) - u[row] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = col;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    next = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            col = next;
        } while (match[col] != 0);
        do {
            int prev = way[col];
            match[col] = match[prev];
            col = prev;
        } while (col != 0);
    }
    double worst = 0.0;
    for (int j = 1; j <= n; ++j) worst = std::max(worst, cost(match[j], j));
    return worst;
}

}  // namespace confocal
