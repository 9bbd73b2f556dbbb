#pragma once

namespace hypwidth::detail {

// Derivative-free 1-D maximization on [a, b]; returns the bracket midpoint
// once the bracket is below tol.
template <class F>
double golden_max(F&& f, double a, double b, double tol) {
    constexpr double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

template <class F>
double golden_min(F&& f, double a, double b, double tol) {
    return golden_max([&](double x) { return -f(x); }, a, b, tol);
}

}  // namespace hypwidth::detail
