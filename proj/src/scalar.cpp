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

#include "confocal/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "confocal/errors.hpp"

namespace confocal {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class pow10(long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return r;
}

Rational parse_decimal(std::string_view s, std::string_view original) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto pos = s.find_first_of("eE"); pos != std::string_view::npos) {
        std::string_view exp_part = s.substr(pos + 1);
        s = s.substr(0, pos);
        bool exp_negative = false;
        if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
            exp_negative = exp_part.front() == '-';
            exp_part.remove_prefix(1);
        }
        if (!all_digits(exp_part) || exp_part.size() > 6)
            throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(original) + "'");
        exponent = std::stol(std::string(exp_part));
        if (exp_negative) exponent = -exponent;
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
            (int_part.empty() && frac_part.empty()))
            throw Error(ErrorCode::ParseError, "bad decimal '" + std::string(original) + "'");
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) throw Error(ErrorCode::ParseError, "bad number '" + std::string(original) + "'");
        digits = std::string(s);
    }
    mpz_class mantissa(digits, 10);
    Rational value;
    if (exponent >= 0) {
        value = Rational(mantissa * pow10(exponent));
    } else {
        value = Rational(mantissa, pow10(-exponent));
        value.canonicalize();
    }
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty number");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = trim(s.substr(0, slash));
        std::string_view den = trim(s.substr(slash + 1));
        std::string_view num_digits = num;
        if (!num_digits.empty() && (num_digits.front() == '-' || num_digits.front() == '+')) num_digits.remove_prefix(1);
        if (!all_digits(num_digits) || !all_digits(den))
            throw Error(ErrorCode::ParseError, "bad fraction '" + std::string(text) + "'");
        mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
        mpz_class d(std::string(den), 10);
        if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
        Rational q(n, d);
        q.canonicalize();
        return q;
    }
    return parse_decimal(s, text);
}

Rational rationalize(double x, double tol) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "cannot rationalize a non-finite value");
    const double bound = tol * std::max(1.0, std::abs(x));
    mpz_class h_prev = 1, h = static_cast<long>(std::floor(x));
    mpz_class k_prev = 0, k = 1;
    double frac = x - std::floor(x);
    for (int iter = 0; iter < 64; ++iter) {
        Rational approx(h, k);
        if (std::abs(approx.get_d() - x) <= bound || frac == 0.0) return approx;
        double inv = 1.0 / frac;
        double a = std::floor(inv);
        frac = inv - a;
        mpz_class a_int;
        mpz_set_d(a_int.get_mpz_t(), a);
        mpz_class h_next = a_int * h + h_prev;
        mpz_class k_next = a_int * k + k_prev;
        h_prev = h;
        k_prev = k;
        h = h_next;
        k = k_next;
    }
    // The exact binary value is always representable.
    Rational exact(x);
    return exact;
}

double to_double(const Rational& x) {
    const double d = x.get_d();
    if (!std::isfinite(d)) return d;
    // get_d truncates, so the nearest double is d or its neighbour away from zero.
    const double away = std::nextafter(d, sgn(x) < 0 ? -HUGE_VAL : HUGE_VAL);
    if (!std::isfinite(away)) return d;
    const Rational gap_d = abs(x - Rational(d));
    const Rational gap_away = abs(Rational(away) - x);
    return gap_away < gap_d ? away : d;
}

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_decimal_string(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

}  // namespace confocal
