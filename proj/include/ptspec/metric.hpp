#pragma once

#include <vector>

#include "ptspec/matmodel.hpp"

namespace ptspec {

/// One member of the metric family
///   Theta = [[1 + xi, -cos(alpha_m)], [-cos(alpha_m), 1 - xi]],
/// xi = sin(alpha_m) sin(gamma), with the two-level coupling a = cos(alpha_m).
/// gamma sweeps the ambiguity of the metric; the overall scale is fixed to 1.
struct MetricCandidate {
    SquareMatrix theta;
    double alpha_m = 0.0;  ///< metric-sector angle in (0, pi)
    double gamma = 0.0;    ///< ambiguity parameter in [0, pi/2)
    double xi = 0.0;
};

struct PositivityCertificate {
    bool is_positive = false;
    double min_eigenvalue = 0.0;
};

/// Requires |a| < 1: at |a| = 1 every member of the family loses
/// invertibility, so no metric exists there.
MetricCandidate build_metric(double a, double gamma);

/// Max-absolute-entry norm of Theta*H - H^T*Theta; vanishes identically
/// (to rounding) for every (H(a), build_metric(a, gamma)) pair.
double quasi_hermiticity_residual(const SquareMatrix& h, const SquareMatrix& theta);

/// Smaller eigenvalue of a symmetric order-2 matrix via the closed form
/// trace/2 - sqrt((trace/2)^2 - det), plus the positivity verdict.
PositivityCertificate positivity_certificate(const SquareMatrix& theta);

/// det Theta(a, gamma) = (1 - a^2) cos^2(gamma) for each a in the sequence;
/// decreases to zero as a -> +-1, witnessing the loss of invertibility.
std::vector<double> ep_degeneration_scan(double gamma, const std::vector<double>& a_sequence);

}  // namespace ptspec
