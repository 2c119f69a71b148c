#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ptspec/matmodel.hpp"

namespace ptspec {

/// p(E) = c3 E^3 + c2 E^2 + c1 E + c0 with real coefficients.
struct CubicPoly {
    double c3 = 0.0;
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double eval(double e) const { return ((c3 * e + c2) * e + c1) * e + c0; }
    std::complex<double> eval(std::complex<double> e) const {
        return ((c3 * e + c2) * e + c1) * e + c0;
    }
    double deriv(double e) const { return (3.0 * c3 * e + 2.0 * c2) * e + c1; }
};

/// Non-real eigenvalue pair re +- i*im, stored with im > 0.
struct ConjugatePair {
    double re = 0.0;
    double im = 0.0;
};

/// Roots of a real quadratic or cubic. real_roots holds distinct values in
/// ascending order with aligned multiplicities; a conjugate pair is present
/// exactly when the discriminant fell below the classification band.
struct RootSet {
    int degree = 0;
    std::vector<double> real_roots;
    std::vector<int> multiplicities;
    std::optional<ConjugatePair> pair;
    double discriminant = 0.0;

    /// All roots with multiplicity, real first (ascending), then the pair
    /// as re - i*im, re + i*im.
    std::vector<std::complex<double>> expanded() const;
};

/// det(H(3) - E) expanded in powers of E; requires a three-level model.
CubicPoly secular_cubic(const ModelParams& params);

/// Roots of E^2 - (1 - a^2), the two-level secular polynomial.
RootSet solve_quadratic(double a);

/// Degree-3 discriminant 18*c3*c2*c1*c0 - 4*c2^3*c0 + c2^2*c1^2
/// - 4*c3*c1^3 - 27*c3^2*c0^2. Positive iff three distinct real roots.
double cubic_discriminant(const CubicPoly& p);

/// Width of the |discriminant| band treated as zero when classifying roots.
/// Scale-aware: 1e-10 * S^4 with S built from the monic-normalized
/// coefficients, so the test is invariant under E -> s*E rescaling.
double discriminant_zero_threshold(const CubicPoly& p);

/// Closed-form real root finder. Branches on the discriminant against the
/// zero band: three distinct real roots (trigonometric form), one real root
/// plus a conjugate pair, or repeated roots (double + simple, or triple).
/// Real roots are polished by Newton steps on the original coefficients.
RootSet solve_cubic(const CubicPoly& p);

}  // namespace ptspec
