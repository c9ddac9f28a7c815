#pragma once

#include <functional>
#include <vector>

// Small scalar numerical utilities: bracketing line searches, bisection and
// ordinary least squares. All routines are deterministic.

namespace gqd {

struct GoldenResult {
    double x;        // abscissa of the extremum
    double f;        // function value at x
    int iterations;
    bool converged;  // bracket shrank below xtol within the iteration cap
};

// Golden-section minimisation of a unimodal f on [lo, hi] to abscissa
// tolerance xtol.
GoldenResult golden_min(const std::function<double(double)>& f, double lo,
                        double hi, double xtol, int max_iter = 200);

// Golden-section maximisation (minimises -f).
GoldenResult golden_max(const std::function<double(double)>& f, double lo,
                        double hi, double xtol, int max_iter = 200);

struct BisectResult {
    double root;
    double lo;  // final bracket, f changes sign across it
    double hi;
    int iterations;
};

// Bisection on [lo, hi]; requires f(lo) and f(hi) of opposite sign (throws
// std::invalid_argument otherwise). Stops when the bracket is below xtol.
BisectResult bisect_root(const std::function<double(double)>& f, double lo,
                         double hi, double xtol, int max_iter = 200);

struct LinearFit {
    double slope;
    double intercept;
    double r_squared;
};

// Ordinary least squares y ~ slope * x + intercept. Requires at least two
// points and non-constant x.
LinearFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

// `points` values spaced uniformly from `from` to `to` inclusive (exact
// endpoints); descending when from > to. points == 1 returns {from}.
std::vector<double> uniform_grid(double from, double to, int points);

}  // namespace gqd
