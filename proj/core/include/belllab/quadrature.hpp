#pragma once

#include <functional>
#include <stdexcept>

namespace bell {

struct QuadResult {
    double value{};
    double error{};  // accumulated error bound
    bool converged{};
    int intervals{};  // intervals accepted
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : std::runtime_error(what), achieved_error_(achieved_error) {}
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

// Adaptive Gauss-Kronrod (G7, K15) with bisection. An interval is accepted
// when its error estimate is below abs_tol scaled by its share of the total
// length, so the accumulated error stays below abs_tol.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol = 1e-10, int max_intervals = 5000);

}  // namespace bell
