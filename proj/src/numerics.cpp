#include "pgc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pgc {

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
    std::vector<double> out(static_cast<size_t>(n));
    const double h = (b - a) / (n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = a + h * i;
    out.back() = b;
    return out;
}

double simpson(const std::vector<double>& f, double h) {
    const size_t n = f.size();
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson: need an odd sample count");
    double acc = f.front() + f.back();
    for (size_t i = 1; i + 1 < n; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * f[i];
    }
    return acc * h / 3.0;
}

std::vector<double> cumulative_simpson(const std::vector<double>& f, double h) {
    const size_t n = f.size();
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("cumulative_simpson: need an odd sample count >= 3");
    }
    std::vector<double> out(n, 0.0);
    for (size_t i = 0; i + 2 < n; i += 2) {
        // Integral over the first half of the panel via the interpolating
        // quadratic, then the full Simpson panel.
        out[i + 1] = out[i] + h / 12.0 * (5.0 * f[i] + 8.0 * f[i + 1] - f[i + 2]);
        out[i + 2] = out[i] + h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
    }
    return out;
}

std::vector<double> fd_weights(const std::vector<double>& nodes, double x0, int m) {
    // Fornberg's recursion for finite-difference weights on arbitrary nodes.
    const int n = static_cast<int>(nodes.size()) - 1;
    if (n < m) throw std::invalid_argument("fd_weights: not enough nodes for the order");
    auto at = [&](int j) { return nodes[static_cast<size_t>(j)]; };
    std::vector<std::vector<double>> c(
        static_cast<size_t>(n + 1), std::vector<double>(static_cast<size_t>(m + 1), 0.0));
    c[0][0] = 1.0;
    double c1 = 1.0;
    double c4 = at(0) - x0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = at(i) - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = at(i) - at(j);
            c2 *= c3;
            if (j == i - 1) {
                auto& ci = c[static_cast<size_t>(i)];
                const auto& cp = c[static_cast<size_t>(i - 1)];
                for (int k = mn; k >= 1; --k) {
                    ci[static_cast<size_t>(k)] =
                        c1 * (k * cp[static_cast<size_t>(k - 1)] - c5 * cp[static_cast<size_t>(k)]) /
                        c2;
                }
                ci[0] = -c1 * c5 * cp[0] / c2;
            }
            auto& cj = c[static_cast<size_t>(j)];
            for (int k = mn; k >= 1; --k) {
                cj[static_cast<size_t>(k)] =
                    (c4 * cj[static_cast<size_t>(k)] - k * cj[static_cast<size_t>(k - 1)]) / c3;
            }
            cj[0] = c4 * cj[0] / c3;
        }
        c1 = c2;
    }
    std::vector<double> out(static_cast<size_t>(n + 1));
    for (int j = 0; j <= n; ++j) out[static_cast<size_t>(j)] = c[static_cast<size_t>(j)][static_cast<size_t>(m)];
    return out;
}

std::vector<double> derivative_series(const std::vector<double>& s,
                                      const std::vector<double>& f, int m, int window,
                                      int edge_window) {
    const int n = static_cast<int>(s.size());
    if (n != static_cast<int>(f.size())) {
        throw std::invalid_argument("derivative_series: size mismatch");
    }
    if (window > n) window = n;
    if (window <= m) throw std::invalid_argument("derivative_series: window too small");
    edge_window = std::clamp(edge_window, window, n);
    std::vector<double> out(static_cast<size_t>(n), 0.0);
    const int half = window / 2;
    for (int i = 0; i < n; ++i) {
        int w = window;
        if (i - half < 0 || i + half >= n) w = edge_window;
        const int lo = std::clamp(i - w / 2, 0, n - w);
        std::vector<double> nodes(s.begin() + lo, s.begin() + lo + w);
        const std::vector<double> weights = fd_weights(nodes, s[static_cast<size_t>(i)], m);
        double acc = 0.0;
        for (int k = 0; k < w; ++k) {
            acc += weights[static_cast<size_t>(k)] * f[static_cast<size_t>(lo + k)];
        }
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

std::vector<std::array<double, 2>> rk4_integrate(
    const std::function<std::array<double, 2>(double, const std::array<double, 2>&)>& rhs,
    double s0, std::array<double, 2> state0, double h, int steps) {
    std::vector<std::array<double, 2>> out;
    out.reserve(static_cast<size_t>(steps) + 1);
    out.push_back(state0);
    std::array<double, 2> y = state0;
    double s = s0;
    for (int i = 0; i < steps; ++i) {
        const auto k1 = rhs(s, y);
        const std::array<double, 2> y2{y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]};
        const auto k2 = rhs(s + 0.5 * h, y2);
        const std::array<double, 2> y3{y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]};
        const auto k3 = rhs(s + 0.5 * h, y3);
        const std::array<double, 2> y4{y[0] + h * k3[0], y[1] + h * k3[1]};
        const auto k4 = rhs(s + h, y4);
        y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
        y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
        s = s0 + (i + 1) * h;
        out.push_back(y);
    }
    return out;
}

double mean(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

double relative_deviation(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    const double sd = std::sqrt(acc / static_cast<double>(v.size()));
    if (m == 0.0) return sd == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return sd / std::abs(m);
}

AffineFit affine_fit(const std::vector<double>& s, const std::vector<double>& f) {
    const double n = static_cast<double>(s.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < s.size(); ++i) {
        sx += s[i];
        sy += f[i];
        sxx += s[i] * s[i];
        sxy += s[i] * f[i];
    }
    const double denom = n * sxx - sx * sx;
    AffineFit fit;
    if (denom != 0.0) {
        fit.slope = (n * sxy - sx * sy) / denom;
        fit.intercept = (sy - fit.slope * sx) / n;
    }
    return fit;
}

} // namespace pgc
