#pragma once

#include <algorithm>
#include <cmath>
#include <span>

namespace dse {

/// Max-norm of the update between two iterates of equal length.
[[nodiscard]] inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// Update norms of a two-function iterate.
struct UpdateNorms {
    double first = 0.0;
    double second = 0.0;
};

struct IterationControl {
    double tolerance = 1e-8;
    int max_iterations = 500;
};

struct IterationStatus {
    int iterations = 0;
    bool converged = false;
};

/// Successive approximation driver shared by every solver in the library.
///
/// `step()` advances the iterate by one sweep and returns the update norms; the loop
/// stops once both are below the tolerance or after max_iterations sweeps.
/// `observe(n, norms)` is called after sweep n (1-based).
template <class Step, class Observe>
IterationStatus successive_approximation(const IterationControl& control, Step&& step,
                                         Observe&& observe) {
    IterationStatus status;
    while (status.iterations < control.max_iterations) {
        const UpdateNorms norms = step();
        ++status.iterations;
        observe(status.iterations, norms);
        if (norms.first < control.tolerance && norms.second < control.tolerance) {
            status.converged = true;
            break;
        }
    }
    return status;
}

}  // namespace dse
