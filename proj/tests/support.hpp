#pragma once

#include <cmath>
#include <functional>

#include "phasecat/linalg.hpp"

namespace phasecat::testing {

// Tensor trapezoid quadrature over [-half, half]^2, refined until stable.
inline double quad2d(const std::function<double(double, double)>& f, double half,
                     int start = 129, double tol = 1e-10) {
    double prev = 0.0;
    for (int count = start;; count = 2 * (count - 1) + 1) {
        const double h = 2.0 * half / (count - 1);
        double acc = 0.0;
        for (int i = 0; i < count; ++i) {
            const double wx = (i == 0 || i == count - 1) ? 0.5 : 1.0;
            for (int j = 0; j < count; ++j) {
                const double wy = (j == 0 || j == count - 1) ? 0.5 : 1.0;
                acc += wx * wy * f(-half + i * h, -half + j * h);
            }
        }
        acc *= h * h;
        if (std::abs(acc - prev) < tol || count > 2100) return acc;
        prev = acc;
    }
}

inline Complex quad2dc(const std::function<Complex(double, double)>& f, double half,
                       int start = 129, double tol = 1e-10) {
    const double re = quad2d([&](double x, double y) { return f(x, y).real(); }, half, start, tol);
    const double im = quad2d([&](double x, double y) { return f(x, y).imag(); }, half, start, tol);
    return {re, im};
}

inline Mat rotation2(double theta) {
    Mat r(2, 2);
    r << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
    return r;
}

}  // namespace phasecat::testing
