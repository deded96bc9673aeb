#pragma once

#include <array>
#include <functional>
#include <vector>

namespace pgc {

/// n equally spaced values from a to b inclusive (n >= 2).
std::vector<double> linspace(double a, double b, int n);

/// Composite Simpson integral of samples at uniform spacing h.
/// Requires an odd sample count (even number of intervals).
double simpson(const std::vector<double>& f, double h);

/// Cumulative Simpson quadrature on a uniform grid: out[i] is the integral
/// from the first node to node i. Fourth-order accurate at every node
/// (odd nodes use the half-panel rule through the local quadratic).
/// Requires an odd sample count >= 3.
std::vector<double> cumulative_simpson(const std::vector<double>& f, double h);

/// Finite-difference weights for the m-th derivative at x0 from samples at
/// the given nodes (Fornberg recursion). nodes.size() > m is required.
std::vector<double> fd_weights(const std::vector<double>& nodes, double x0, int m);

/// Derivative of order m of a uniformly sampled series, evaluated at every
/// node with a sliding window of `window` points (clamped one-sided at the
/// boundaries). window = 5 gives fourth-order accuracy for m <= 2 and is
/// the default used throughout. `edge_window`, when larger, widens the
/// stencil for the points whose window is clamped; chained differencing
/// stages lose an order at the edges without it.
std::vector<double> derivative_series(const std::vector<double>& s,
                                      const std::vector<double>& f, int m, int window = 5,
                                      int edge_window = 0);

/// Classical fixed-step RK4 for a two-component first-order system.
/// Returns the states at s = s0, s0+h, ..., s0+steps*h (steps+1 entries).
std::vector<std::array<double, 2>> rk4_integrate(
    const std::function<std::array<double, 2>(double, const std::array<double, 2>&)>& rhs,
    double s0, std::array<double, 2> state0, double h, int steps);

/// Mean, and relative standard deviation std/|mean| of a series.
double mean(const std::vector<double>& v);
double relative_deviation(const std::vector<double>& v);

/// Least-squares affine fit f ~ slope * s + intercept.
struct AffineFit {
    double slope = 0.0;
    double intercept = 0.0;
};
AffineFit affine_fit(const std::vector<double>& s, const std::vector<double>& f);

} // namespace pgc
