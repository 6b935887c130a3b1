#include "decolab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace decolab::quad {

GaussLegendre::GaussLegendre(int n) {
    if (n < 1) throw std::invalid_argument("GaussLegendre: node count must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

const GaussLegendre& rule(int n) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, GaussLegendre(n)).first;
    return it->second;
}

namespace {

template <typename T>
T integrate_impl(const std::function<T(double)>& f, double a, double b, int n) {
    const auto& r = rule(n);
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    T sum{};
    for (int i = 0; i < n; ++i) sum += r.weights[i] * f(mid + hw * r.nodes[i]);
    return hw * sum;
}

template <typename T>
T adaptive_impl(const std::function<T(double)>& f, double a, double b,
                const QuadratureSpec& spec) {
    T prev = integrate_impl(f, a, b, spec.initial_nodes);
    for (int n = 2 * spec.initial_nodes; n <= spec.max_nodes; n *= 2) {
        T cur = integrate_impl(f, a, b, n);
        if (std::abs(cur - prev) < spec.tol) return cur;
        prev = cur;
    }
    throw QuadratureError("1D quadrature did not converge under node doubling");
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, int n) {
    return integrate_impl(f, a, b, n);
}

std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f,
                                       double a, double b, int n) {
    return integrate_impl(f, a, b, n);
}

double integrate2d(const std::function<double(double, double)>& f,
                   double ax, double bx, double ay, double by, int n) {
    const auto& r = rule(n);
    const double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    const double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = mx + hx * r.nodes[i];
        double row = 0.0;
        for (int j = 0; j < n; ++j) row += r.weights[j] * f(x, my + hy * r.nodes[j]);
        sum += r.weights[i] * row;
    }
    return hx * hy * sum;
}

double integrate_adaptive(const std::function<double(double)>& f,
                          double a, double b, const QuadratureSpec& spec) {
    return adaptive_impl(f, a, b, spec);
}

std::complex<double>
integrate_adaptive_complex(const std::function<std::complex<double>(double)>& f,
                           double a, double b, const QuadratureSpec& spec) {
    return adaptive_impl(f, a, b, spec);
}

double integrate2d_adaptive(const std::function<double(double, double)>& f,
                            double ax, double bx, double ay, double by,
                            const QuadratureSpec& spec) {
    double prev = integrate2d(f, ax, bx, ay, by, spec.initial_nodes);
    for (int n = 2 * spec.initial_nodes; n <= spec.max_nodes; n *= 2) {
        double cur = integrate2d(f, ax, bx, ay, by, n);
        if (std::abs(cur - prev) < spec.tol) return cur;
        prev = cur;
    }
    throw QuadratureError("2D quadrature did not converge under node doubling");
}

} // namespace decolab::quad
