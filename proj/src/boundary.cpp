#include "ptspec/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ptspec/cubic.hpp"

namespace ptspec {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kMarchStep = 0.05;
constexpr double kRayCap = 8.0;
constexpr double kMinTol = 1e-14;

#if defined(__SIZEOF_FLOAT128__)
using wide_real = __float128;
#else
using wide_real = long double;
#endif

/// Sign of the secular-cubic discriminant at (a, b, c), evaluated in
/// extended precision. The inputs are exact doubles, so the only rounding
/// left is the wide format's own, far below any bisection tolerance the
/// interface admits. Plain double evaluation has an absolute noise floor
/// around 1e-14 here, which near a spike (where the discriminant grows only
/// cubically off the boundary) smears the sign over a radial band of about
/// 1e-5.
int discriminant_sign_wide(double a, double b, double c) {
    const wide_real a2 = static_cast<wide_real>(a) * a;
    const wide_real b2 = static_cast<wide_real>(b) * b;
    const wide_real cw = c;
    const wide_real c3 = -1.0;
    const wide_real c2 = 3.0 + cw;
    const wide_real c1 = 1.0 - a2 - b2;
    const wide_real c0 = -3.0 + 3.0 * a2 - cw + cw * a2 - b2;
    const wide_real d = 18.0 * c3 * c2 * c1 * c0 - 4.0 * c2 * c2 * c2 * c0 +
                        c2 * c2 * c1 * c1 - 4.0 * c3 * c1 * c1 * c1 -
                        27.0 * c3 * c3 * c0 * c0;
    return (d > 0) - (d < 0);
}

void check_c(double c, const char* where) {
    if (!std::isfinite(c))
        throw ParameterError(std::string(where) + ": c must be finite");
    if (c == -2.0 || c == -4.0)
        throw ParameterError(std::string(where) + ": c = " + std::to_string(c) +
                             " is excluded (degenerate diagonal spectrum)");
}

void check_tol(double tol, const char* where) {
    if (!(tol >= kMinTol))
        throw ParameterError(std::string(where) + ": tol must be >= 1e-14, got " +
                             std::to_string(tol));
}

int check_sign(int sign, const char* where) {
    if (sign != 1 && sign != -1)
        throw ParameterError(std::string(where) + ": sign arguments must be +1 or -1");
    return sign;
}

/// March outward along a monotone inside->outside section and bisect the
/// crossing. pred(x) must be positive strictly inside the domain.
template <class Pred>
double bisect_crossing(double start, Pred pred, double tol, const char* where,
                       const std::string& ray_desc) {
    double lo = start;
    double hi = -1.0;
    for (double x = start + kMarchStep; x <= kRayCap + kMarchStep / 2; x += kMarchStep) {
        if (pred(x) <= 0) {
            hi = x;
            break;
        }
        lo = x;
    }
    if (hi < 0.0)
        throw NoBoundaryOnRayError(std::string(where) + ": no discriminant sign change " +
                                   ray_desc + " up to r = 8");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// Double root z and observer root y of the secular cubic at a point that
/// bisection has pinned to the boundary (so the root structure is a genuine
/// or near-degenerate pair plus a simple root).
void attach_degenerate_roots(BoundaryPoint& pt, double c) {
    const RootSet rs = solve_cubic(secular_cubic(ModelParams{3, pt.a, pt.b, c}));
    if (rs.pair) {
        pt.double_root_z = rs.pair->re;
        pt.single_root_y = rs.real_roots.front();
        return;
    }
    if (rs.real_roots.size() == 1) {  // triple root: spike vertex
        pt.double_root_z = rs.real_roots.front();
        pt.single_root_y = rs.real_roots.front();
        return;
    }
    if (rs.real_roots.size() == 2) {
        const bool first_is_double = rs.multiplicities.front() == 2;
        pt.double_root_z = first_is_double ? rs.real_roots.front() : rs.real_roots.back();
        pt.single_root_y = first_is_double ? rs.real_roots.back() : rs.real_roots.front();
        return;
    }
    // Three simple roots can only appear if the caller bisected with a loose
    // tolerance; report the closest pair's midpoint as z.
    const double g01 = rs.real_roots[1] - rs.real_roots[0];
    const double g12 = rs.real_roots[2] - rs.real_roots[1];
    if (g01 <= g12) {
        pt.double_root_z = (rs.real_roots[0] + rs.real_roots[1]) / 2.0;
        pt.single_root_y = rs.real_roots[2];
    } else {
        pt.double_root_z = (rs.real_roots[1] + rs.real_roots[2]) / 2.0;
        pt.single_root_y = rs.real_roots[0];
    }
}

}  // namespace

BoundaryPoint parametric_boundary(double beta, int sign_a, int sign_b) {
    if (!std::isfinite(beta) || std::abs(beta) > 1.0)
        throw ParameterError("parametric_boundary: |beta| must be <= 1 (endpoints are "
                             "closed-limit evaluations), got " + std::to_string(beta));
    check_sign(sign_a, "parametric_boundary");
    check_sign(sign_b, "parametric_boundary");
    const double b2 = beta * beta;
    const double b3 = b2 * beta;
    BoundaryPoint pt;
    pt.a = sign_a * std::sqrt(std::max((4.0 - 3.0 * b2 - b3) / 2.0, 0.0));
    pt.b = sign_b * std::sqrt(std::max((4.0 - 3.0 * b2 + b3) / 2.0, 0.0));
    pt.beta = beta;
    pt.double_root_z = 1.0 + beta;
    pt.single_root_y = 1.0 - 2.0 * beta;
    return pt;
}

BoundaryPoint bisect_boundary(double theta, double c, double tol) {
    if (!std::isfinite(theta))
        throw ParameterError("bisect_boundary: theta must be finite");
    check_c(c, "bisect_boundary");
    check_tol(tol, "bisect_boundary");
    double th = std::fmod(theta, kTwoPi);
    if (th < 0.0) th += kTwoPi;
    const double ct = std::cos(th);
    const double st = std::sin(th);

    const double rstar = bisect_crossing(
        0.0, [&](double r) { return discriminant_sign_wide(r * ct, r * st, c); }, tol,
        "bisect_boundary", "along theta = " + std::to_string(th) + ", c = " + std::to_string(c));

    BoundaryPoint pt;
    pt.a = rstar * ct;
    pt.b = rstar * st;
    pt.theta = th;
    attach_degenerate_roots(pt, c);
    return pt;
}

BoundaryCurve parametric_arc(int sign_a, int sign_b, int resolution, double delta) {
    check_sign(sign_a, "parametric_arc");
    check_sign(sign_b, "parametric_arc");
    if (resolution < 2)
        throw ParameterError("parametric_arc: resolution must be >= 2, got " +
                             std::to_string(resolution));
    if (!(delta > 0.0) || delta >= 1.0)
        throw ParameterError("parametric_arc: delta must lie in (0, 1)");
    BoundaryCurve curve;
    curve.method = BoundaryMethod::Parametric;
    curve.c = 0.0;
    curve.points.reserve(static_cast<std::size_t>(resolution));
    const double lo = -1.0 + delta;
    const double span = 2.0 - 2.0 * delta;
    for (int k = 0; k < resolution; ++k) {
        const double beta = lo + span * k / (resolution - 1);
        curve.points.push_back(parametric_boundary(beta, sign_a, sign_b));
    }
    return curve;
}

BoundaryCurve bisect_curve(int resolution, double c, double tol) {
    if (resolution < 2)
        throw ParameterError("bisect_curve: resolution must be >= 2, got " +
                             std::to_string(resolution));
    check_c(c, "bisect_curve");
    check_tol(tol, "bisect_curve");
    BoundaryCurve curve;
    curve.method = BoundaryMethod::Bisection;
    curve.c = c;
    curve.points.reserve(static_cast<std::size_t>(resolution));
    for (int k = 0; k < resolution; ++k)
        curve.points.push_back(bisect_boundary(kTwoPi * k / resolution, c, tol));
    return curve;
}

std::vector<DepPoint> dep_points(double c) {
    check_c(c, "dep_points");
    const double denom = 27.0 * (4.0 + c);
    const double sa = 6.0 + c;
    const double sb = 6.0 + 2.0 * c;
    const double a2 = sa * sa * sa / denom;
    const double b2 = sb * sb * sb / denom;
    if (a2 < 0.0 || b2 < 0.0)
        throw ParameterError("dep_points: no real doubly exceptional point at c = " +
                             std::to_string(c) + "; real solutions need c >= -3 or c <= -6");
    const double a = std::sqrt(a2);
    const double b = std::sqrt(b2);
    const double z = 1.0 + c / 3.0;
    return {DepPoint{a, b, c, z}, DepPoint{-a, b, c, z},
            DepPoint{-a, -b, c, z}, DepPoint{a, -b, c, z}};
}

double lemma_eta(double b, double tol) {
    constexpr double kSqrt2 = 1.41421356237309504880;
    if (!std::isfinite(b) || b == 0.0 || std::abs(b) >= kSqrt2)
        throw ParameterError("lemma_eta: requires 0 < |b| < sqrt(2); beyond the spike "
                             "vertex the fixed-b section changes character (got b = " +
                             std::to_string(b) + ")");
    check_tol(tol, "lemma_eta");
    const double ab = std::abs(b);
    // The diagonal point (|b|, |b|) is interior for every admissible b, and
    // along increasing a at fixed b the section leaves the domain exactly
    // once, so the first sign change is the EP.
    const double a_ep = bisect_crossing(
        ab, [&](double a) { return discriminant_sign_wide(a, ab, 0.0); }, tol,
        "lemma_eta", "along fixed b = " + std::to_string(ab));
    return a_ep - 1.0;
}

std::pair<double, double> epsilon_expansion_check(double eps) {
    if (!(eps > 0.0) || eps > 0.1)
        throw ParameterError("epsilon_expansion_check: eps must lie in (0, 0.1], got " +
                             std::to_string(eps));
    const BoundaryPoint pt = parametric_boundary(-1.0 + eps * eps, 1, 1);
    const double a_err = std::abs(pt.a - 1.0 - 0.75 * eps * eps);
    const double b_err = std::abs(pt.b - 3.0 * eps / std::sqrt(2.0));
    return {a_err, b_err};
}

}  // namespace ptspec
