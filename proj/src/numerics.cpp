#include "gqd/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace gqd {

namespace {

constexpr double inv_phi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

GoldenResult golden_impl(const std::function<double(double)>& f, double lo,
                         double hi, double xtol, int max_iter, double sign) {
    if (!(hi > lo)) {
        throw std::invalid_argument("golden section: empty interval");
    }
    if (!(xtol > 0.0)) {
        throw std::invalid_argument("golden section: xtol must be positive");
    }
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = sign * f(x1);
    double f2 = sign * f(x2);
    int it = 0;
    while (b - a > xtol && it < max_iter) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = sign * f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = sign * f(x2);
        }
        ++it;
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm), it, b - a <= xtol};
}

}  // namespace

GoldenResult golden_min(const std::function<double(double)>& f, double lo,
                        double hi, double xtol, int max_iter) {
    return golden_impl(f, lo, hi, xtol, max_iter, 1.0);
}

GoldenResult golden_max(const std::function<double(double)>& f, double lo,
                        double hi, double xtol, int max_iter) {
    return golden_impl(f, lo, hi, xtol, max_iter, -1.0);
}

BisectResult bisect_root(const std::function<double(double)>& f, double lo,
                         double hi, double xtol, int max_iter) {
    if (!(hi > lo)) {
        throw std::invalid_argument("bisect_root: empty interval");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, lo, lo, 0};
    if (fhi == 0.0) return {hi, hi, hi, 0};
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw std::invalid_argument(
            "bisect_root: no sign change across the interval");
    }
    int it = 0;
    while (hi - lo > xtol && it < max_iter) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return {mid, mid, mid, it + 1};
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
        ++it;
    }
    return {0.5 * (lo + hi), lo, hi, it};
}

LinearFit ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("ols_fit: need matching arrays of size >= 2");
    }
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("ols_fit: x values are all identical");
    }
    LinearFit fit{};
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy == 0.0) {
        fit.r_squared = 1.0;  // exactly constant y is fit exactly
    } else {
        const double ss_res = syy - fit.slope * sxy;
        fit.r_squared = 1.0 - ss_res / syy;
    }
    return fit;
}

std::vector<double> uniform_grid(double from, double to, int points) {
    if (points < 1) {
        throw std::invalid_argument("uniform_grid: need at least one point");
    }
    std::vector<double> g;
    g.reserve(static_cast<size_t>(points));
    if (points == 1) {
        g.push_back(from);
        return g;
    }
    for (int i = 0; i < points; ++i) {
        if (i == points - 1) {
            g.push_back(to);  // exact endpoint
        } else {
            g.push_back(from + (to - from) * static_cast<double>(i) / (points - 1));
        }
    }
    return g;
}

}  // namespace gqd
