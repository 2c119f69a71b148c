#include "ptspec/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace ptspec {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDiscBand = 1e-10;

void require_cubic(const CubicPoly& p) {
    if (p.c3 == 0.0 || !std::isfinite(p.c3) || !std::isfinite(p.c2) ||
        !std::isfinite(p.c1) || !std::isfinite(p.c0))
        throw ParameterError("CubicPoly: coefficients must be finite with c3 != 0");
}

/// Coefficient magnitude proxy for the monic cubic t^3 + q2 t^2 + q1 t + q0.
/// Comparable to the largest root magnitude, floored at 1.
double monic_scale(double q2, double q1, double q0) {
    return std::max({1.0, std::abs(q2), std::sqrt(std::abs(q1)), std::cbrt(std::abs(q0))});
}

/// Up to two guarded Newton steps on the original coefficients. Steps that
/// explode or jump away from the starting basin are rejected.
double polish_root(const CubicPoly& p, double x) {
    for (int k = 0; k < 2; ++k) {
        const double f = p.eval(x);
        const double d = p.deriv(x);
        if (d == 0.0) break;
        const double step = f / d;
        if (!std::isfinite(step) || std::abs(step) > 0.1 * std::max(1.0, std::abs(x))) break;
        x -= step;
    }
    return x;
}

void push_sorted_double_single(RootSet& rs, double dbl, double sgl) {
    if (dbl <= sgl) {
        rs.real_roots = {dbl, sgl};
        rs.multiplicities = {2, 1};
    } else {
        rs.real_roots = {sgl, dbl};
        rs.multiplicities = {1, 2};
    }
}

}  // namespace

std::vector<std::complex<double>> RootSet::expanded() const {
    std::vector<std::complex<double>> out;
    for (std::size_t i = 0; i < real_roots.size(); ++i)
        for (int m = 0; m < multiplicities[i]; ++m) out.emplace_back(real_roots[i], 0.0);
    if (pair) {
        out.emplace_back(pair->re, -pair->im);
        out.emplace_back(pair->re, pair->im);
    }
    return out;
}

CubicPoly secular_cubic(const ModelParams& params) {
    validate(params);
    if (params.dimension != 3)
        throw DimensionError(
            "secular_cubic: requires the three-level model; the two-level "
            "spectrum comes from solve_quadratic");
    const double a2 = params.a * params.a;
    const double b2 = params.b * params.b;
    const double c = params.c;
    return CubicPoly{-1.0,
                     3.0 + c,
                     1.0 - a2 - b2,
                     -3.0 + 3.0 * a2 - c + c * a2 - b2};
}

RootSet solve_quadratic(double a) {
    if (!std::isfinite(a)) throw ParameterError("solve_quadratic: a must be finite");
    RootSet rs;
    rs.degree = 2;
    const double q = 1.0 - a * a;  // E^2 = q
    rs.discriminant = 4.0 * q;
    if (std::abs(a) < 1.0 && q > 0.0) {
        const double r = std::sqrt(q);
        rs.real_roots = {-r, r};
        rs.multiplicities = {1, 1};
    } else if (q == 0.0 || std::abs(a) == 1.0) {
        rs.real_roots = {0.0};
        rs.multiplicities = {2};
        rs.discriminant = 0.0;
    } else {
        rs.pair = ConjugatePair{0.0, std::sqrt(a * a - 1.0)};
    }
    return rs;
}

double cubic_discriminant(const CubicPoly& p) {
    require_cubic(p);
    return 18.0 * p.c3 * p.c2 * p.c1 * p.c0 - 4.0 * p.c2 * p.c2 * p.c2 * p.c0 +
           p.c2 * p.c2 * p.c1 * p.c1 - 4.0 * p.c3 * p.c1 * p.c1 * p.c1 -
           27.0 * p.c3 * p.c3 * p.c0 * p.c0;
}

double discriminant_zero_threshold(const CubicPoly& p) {
    require_cubic(p);
    const double s = monic_scale(p.c2 / p.c3, p.c1 / p.c3, p.c0 / p.c3);
    const double s2 = s * s;
    const double lead4 = (p.c3 * p.c3) * (p.c3 * p.c3);
    return kDiscBand * s2 * s2 * lead4;
}

RootSet solve_cubic(const CubicPoly& p) {
    require_cubic(p);
    RootSet rs;
    rs.degree = 3;
    rs.discriminant = cubic_discriminant(p);
    const double band = discriminant_zero_threshold(p);

    // Monic and depressed forms: E = t - q2/3 turns the polynomial into
    // t^3 + P t + Q.
    const double q2 = p.c2 / p.c3;
    const double q1 = p.c1 / p.c3;
    const double q0 = p.c0 / p.c3;
    const double shift = -q2 / 3.0;
    const double P = q1 - q2 * q2 / 3.0;
    const double Q = (2.0 * q2 * q2 / 9.0 - q1) * q2 / 3.0 + q0;
    const double st = monic_scale(0.0, P, Q);

    if (std::abs(rs.discriminant) <= band) {
        if (std::abs(P) <= kDiscBand * st * st && std::abs(Q) <= kDiscBand * st * st * st) {
            // Depressed coefficients vanish at working precision: triple root.
            rs.real_roots = {shift};
            rs.multiplicities = {3};
            return rs;
        }
        // Double root d and simple root s of the depressed cubic satisfy
        // d = -3Q/(2P), s = -2d (from (t-d)^2 (t-s) with 2d + s = 0). The
        // double root is a simple root of p', so refine it there; the general
        // trigonometric branch would lose half the digits here.
        double dbl = -1.5 * Q / P + shift;
        for (int k = 0; k < 2; ++k) {
            const double d1 = p.deriv(dbl);
            const double d2 = 6.0 * p.c3 * dbl + 2.0 * p.c2;
            if (d2 == 0.0) break;
            const double step = d1 / d2;
            if (!std::isfinite(step)) break;
            dbl -= step;
        }
        const double sgl = polish_root(p, -q2 - 2.0 * dbl);
        if (dbl == sgl) {
            rs.real_roots = {dbl};
            rs.multiplicities = {3};
        } else {
            push_sorted_double_single(rs, dbl, sgl);
        }
        return rs;
    }

    if (rs.discriminant > 0.0) {
        // Three distinct real roots; trigonometric three-cosines form keeps
        // everything in real arithmetic (P < 0 is guaranteed on this branch).
        const double m = std::sqrt(-P / 3.0);
        double arg = 1.5 * Q / (P * m);
        arg = std::clamp(arg, -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        std::array<double, 3> ts{2.0 * m * std::cos(phi),
                                 2.0 * m * std::cos(phi - 2.0 * kPi / 3.0),
                                 2.0 * m * std::cos(phi - 4.0 * kPi / 3.0)};
        rs.real_roots.reserve(3);
        for (double t : ts) rs.real_roots.push_back(polish_root(p, t + shift));
        std::sort(rs.real_roots.begin(), rs.real_roots.end());
        rs.multiplicities = {1, 1, 1};
        return rs;
    }

    // One real root plus a conjugate pair. Cardano with the same-sign
    // combination first, so the two cube-root terms never cancel.
    const double rad = std::sqrt(Q * Q / 4.0 + P * P * P / 27.0);
    const double w = (Q <= 0.0) ? (-Q / 2.0 + rad) : (-Q / 2.0 - rad);
    const double v = std::cbrt(w);
    const double t0 = (v == 0.0) ? 0.0 : v - P / (3.0 * v);
    const double r0 = polish_root(p, t0 + shift);
    rs.real_roots = {r0};
    rs.multiplicities = {1};
    // Deflate: the monic quadratic factor is E^2 + u E + w0.
    const double u = q2 + r0;
    const double w0 = q1 + r0 * u;
    const double re = -u / 2.0;
    const double im2 = w0 - re * re;
    rs.pair = ConjugatePair{re, std::sqrt(std::max(im2, 0.0))};
    return rs;
}

}  // namespace ptspec
