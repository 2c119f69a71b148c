#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ptspec/matmodel.hpp"

namespace ptspec {

/// One point of the quasi-Hermiticity domain boundary. At such a point the
/// secular cubic has a doubly degenerate root z and a simple "observer" root
/// y; at c = 0 they obey 2z + y = 3, and for parametric points z = 1 + beta,
/// y = 1 - 2*beta. Exactly one of beta (parametric origin) or theta (ray
/// angle of a bisection run) is set.
struct BoundaryPoint {
    double a = 0.0;
    double b = 0.0;
    std::optional<double> beta;
    std::optional<double> theta;
    double double_root_z = 0.0;
    double single_root_y = 0.0;
};

enum class BoundaryMethod { Parametric, Bisection };

/// Boundary arc ordered by the generating parameter (beta or ray angle).
/// Parametric curves always carry c = 0; the closed form only holds there.
struct BoundaryCurve {
    std::vector<BoundaryPoint> points;
    BoundaryMethod method = BoundaryMethod::Parametric;
    double c = 0.0;
};

/// Point where all three eigenvalues collapse into the triple energy z.
struct DepPoint {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double z = 0.0;
};

/// Closed-form c = 0 boundary point
///   a = sign_a * sqrt((4 - 3 b^2 - b^3)/2),  b likewise with +b^3,
/// for beta in [-1, 1]; the endpoints are admitted as closed-limit
/// evaluations and give the exactly known points (1, 0) and (0, 1).
BoundaryPoint parametric_boundary(double beta, int sign_a, int sign_b);

/// Walk the ray (a, b) = r (cos theta, sin theta) outward from the origin in
/// steps of 0.05 up to r = 8, then bisect the discriminant sign change of
/// the secular cubic down to bracket width tol. The sign test is evaluated
/// in extended precision: near the spike vertices the discriminant vanishes
/// cubically and its double-precision sign is noise over a radial band four
/// orders of magnitude wider than the 1e-8 the boundary tests promise.
/// Requires tol >= 1e-14 and c outside {-2, -4}; theta may be any finite
/// angle (normalized internally).
BoundaryPoint bisect_boundary(double theta, double c, double tol);

/// One quadrant arc of the c = 0 curve: resolution points with beta swept
/// uniformly over [-1 + delta, 1 - delta].
BoundaryCurve parametric_arc(int sign_a, int sign_b, int resolution, double delta = 1e-3);

/// Full bisection curve: resolution rays with theta uniform over [0, 2*pi).
BoundaryCurve bisect_curve(int resolution, double c, double tol);

/// The four doubly exceptional points (+-a, +-b) at shift c, where the
/// secular cubic degenerates to -(E - z)^3 with z = 1 + c/3:
///   a^2 = (6 + c)^3 / (27 (4 + c)),  b^2 = (6 + 2c)^3 / (27 (4 + c)).
/// Real solutions require c >= -3 or c <= -6.
std::vector<DepPoint> dep_points(double c);

/// Half-width growth eta(b) = a_EP(b) - 1 of the real-spectrum window in a
/// at fixed coupling b, c = 0: bisection in a starting from the interior
/// diagonal point a = |b|. Small-b law: eta(b) = b^2/6 + O(b^4). Requires
/// 0 < |b| < sqrt(2); at |b| = sqrt(2) the fixed-b section degenerates to
/// the spike vertex and beyond it changes character.
double lemma_eta(double b, double tol);

/// Deviations of the parametric EP location near beta = -1 from its leading
/// expansion: with beta = -1 + eps^2, returns
///   (|a - 1 - 3 eps^2/4|, |b - 3 eps/sqrt(2)|).
/// The first shrinks as eps^4, the second as eps^3. Requires 0 < eps <= 0.1.
std::pair<double, double> epsilon_expansion_check(double eps);

}  // namespace ptspec
