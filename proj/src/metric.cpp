#include "ptspec/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ptspec {
namespace {

constexpr double kHalfPi = 1.57079632679489661923;

}  // namespace

MetricCandidate build_metric(double a, double gamma) {
    if (!std::isfinite(a) || std::abs(a) >= 1.0)
        throw ParameterError("build_metric: |a| must be < 1; at |a| = 1 the whole "
                             "metric family ceases to be invertible (got a = " +
                             std::to_string(a) + ")");
    if (!std::isfinite(gamma) || gamma < 0.0 || gamma >= kHalfPi)
        throw ParameterError("build_metric: gamma must lie in [0, pi/2), got " +
                             std::to_string(gamma));
    MetricCandidate mc;
    mc.alpha_m = std::acos(a);
    mc.gamma = gamma;
    // sin(alpha_m) = sqrt(1 - a^2), written to avoid the acos/sin round trip.
    mc.xi = std::sqrt((1.0 - a) * (1.0 + a)) * std::sin(gamma);
    mc.theta = SquareMatrix(2, {1.0 + mc.xi, -a,
                                -a, 1.0 - mc.xi});
    return mc;
}

double quasi_hermiticity_residual(const SquareMatrix& h, const SquareMatrix& theta) {
    if (h.order() != theta.order())
        throw DimensionError("quasi_hermiticity_residual: H has order " +
                             std::to_string(h.order()) + " but Theta has order " +
                             std::to_string(theta.order()));
    return (theta * h - h.transposed() * theta).max_abs();
}

PositivityCertificate positivity_certificate(const SquareMatrix& theta) {
    if (theta.order() != 2)
        throw DimensionError("positivity_certificate: requires an order-2 matrix, got " +
                             std::to_string(theta.order()));
    const double skew = std::abs(theta(0, 1) - theta(1, 0));
    if (skew > 1e-12 * std::max(1.0, theta.max_abs()))
        throw ParameterError("positivity_certificate: matrix is not symmetric "
                             "(off-diagonal mismatch " + std::to_string(skew) + ")");
    const double half_tr = (theta(0, 0) + theta(1, 1)) / 2.0;
    const double det = theta(0, 0) * theta(1, 1) - theta(0, 1) * theta(1, 0);
    const double min_eig = half_tr - std::sqrt(std::max(half_tr * half_tr - det, 0.0));
    return PositivityCertificate{min_eig > 0.0, min_eig};
}

std::vector<double> ep_degeneration_scan(double gamma, const std::vector<double>& a_sequence) {
    std::vector<double> dets;
    dets.reserve(a_sequence.size());
    for (double a : a_sequence) {
        const SquareMatrix& th = build_metric(a, gamma).theta;
        dets.push_back(th(0, 0) * th(1, 1) - th(0, 1) * th(1, 0));
    }
    return dets;
}

}  // namespace ptspec
