// Copyright 2026 The groverlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groverlab/stats/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace groverlab::stats {

namespace {

constexpr double kEps = 1e-15;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 500;

// Continued fraction for the incomplete beta function (modified Lentz).
double incbeta_cf(double a, double b, double x) {
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double result = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double dm = static_cast<double>(m);
        double numer = dm * (b - dm) * x / ((a + 2.0 * dm - 1.0) * (a + 2.0 * dm));
        d = 1.0 + numer * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + numer / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        result *= d * c;
        numer = -(a + dm) * (a + b + dm) * x / ((a + 2.0 * dm) * (a + 2.0 * dm + 1.0));
        d = 1.0 + numer * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + numer / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        result *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    return result;
}

}  // namespace

double incbeta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("incbeta needs a > 0 and b > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
        b * std::log1p(-x);
    const double front = std::exp(log_front);
    // Use the symmetry relation on the side where the fraction converges fast.
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * incbeta_cf(a, b, x) / a;
    }
    return 1.0 - front * incbeta_cf(b, a, 1.0 - x) / b;
}

double inv_incbeta(double p, double a, double b) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("inv_incbeta needs p in [0, 1]");
    if (p == 0.0) return 0.0;
    if (p == 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    double x = 0.5;
    for (int i = 0; i < 200; ++i) {
        x = 0.5 * (lo + hi);
        if (incbeta(a, b, x) < p) {
            lo = x;
        } else {
            hi = x;
        }
        if (hi - lo < 1e-16) break;
    }
    return 0.5 * (lo + hi);
}

double lower_gamma_regularized(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("incomplete gamma needs a > 0");
    if (x < 0.0) throw std::invalid_argument("incomplete gamma needs x >= 0");
    if (x == 0.0) return 0.0;

    if (x < a + 1.0) {
        // Series expansion.
        double term = 1.0 / a;
        double sum = term;
        double ap = a;
        for (int i = 0; i < kMaxIter; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * kEps) break;
        }
        return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }

    // Continued fraction for the upper tail (modified Lentz).
    double b0 = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b0;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b0 += 2.0;
        d = an * d + b0;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b0 + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) break;
    }
    const double upper = h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    return 1.0 - upper;
}

double t_cdf(double t, double df) {
    if (!(df >= 1.0)) throw std::invalid_argument("t distribution needs df >= 1");
    if (t == 0.0) return 0.5;
    const double x = df / (df + t * t);
    const double tail = 0.5 * incbeta(0.5 * df, 0.5, x);
    return t > 0.0 ? 1.0 - tail : tail;
}

double t_quantile(double p, double df) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("t_quantile needs 0 < p < 1");
    if (!(df >= 1.0)) throw std::invalid_argument("t distribution needs df >= 1");
    if (p == 0.5) return 0.0;
    const double tail = p > 0.5 ? 2.0 * (1.0 - p) : 2.0 * p;
    const double x = inv_incbeta(tail, 0.5 * df, 0.5);
    const double t = std::sqrt(df * (1.0 - x) / x);
    return p > 0.5 ? t : -t;
}

double chisq_cdf(double x, double df) {
    if (!(df >= 1.0)) throw std::invalid_argument("chi-square needs df >= 1");
    if (x < 0.0) throw std::invalid_argument("chi-square CDF needs x >= 0");
    return lower_gamma_regularized(0.5 * df, 0.5 * x);
}

double chisq_quantile(double p, double df) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("chisq_quantile needs 0 < p < 1");
    if (!(df >= 1.0)) throw std::invalid_argument("chi-square needs df >= 1");
    double lo = 0.0;
    double hi = df;
    while (chisq_cdf(hi, df) < p) {
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chisq_cdf(mid, df) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace groverlab::stats
