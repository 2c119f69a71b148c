#include "ptspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace ptspec {
namespace {

constexpr double kPivotFactor = 1e-9;
constexpr double kRepeatedMatch = 1e-6;

int rank_row_reduce(SquareMatrix m) {
    const int n = m.order();
    const double maxabs = m.max_abs();
    if (maxabs == 0.0) return 0;
    const double thr = kPivotFactor * maxabs;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int piv = row;
        for (int i = row + 1; i < n; ++i)
            if (std::abs(m(i, col)) > std::abs(m(piv, col))) piv = i;
        if (std::abs(m(piv, col)) <= thr) continue;
        if (piv != row)
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(row, j));
        for (int i = row + 1; i < n; ++i) {
            const double f = m(i, col) / m(row, col);
            for (int j = 0; j < n; ++j) m(i, j) -= f * m(row, j);
        }
        ++rank;
        ++row;
    }
    return rank;
}

/// Characteristic roots of H by trace/minor expansion, independent of the
/// model-specific secular form.
RootSet characteristic_roots(const SquareMatrix& h) {
    if (h.order() == 2) {
        // det(H - E) = E^2 - tr E + det; reuse the cubic machinery by lifting
        // through a shifted variable is overkill, solve directly.
        const double tr = h(0, 0) + h(1, 1);
        const double det = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
        RootSet rs;
        rs.degree = 2;
        rs.discriminant = tr * tr - 4.0 * det;
        const double s = std::max({1.0, std::abs(tr), std::sqrt(std::abs(det))});
        if (std::abs(rs.discriminant) <= 1e-10 * s * s) {
            rs.real_roots = {tr / 2.0};
            rs.multiplicities = {2};
        } else if (rs.discriminant > 0.0) {
            const double root = std::sqrt(rs.discriminant);
            const double r1 = (tr - root) / 2.0;
            const double r2 = (tr + root) / 2.0;
            rs.real_roots = {r1, r2};
            rs.multiplicities = {1, 1};
        } else {
            rs.pair = ConjugatePair{tr / 2.0, std::sqrt(-rs.discriminant) / 2.0};
        }
        return rs;
    }
    const double tr = h(0, 0) + h(1, 1) + h(2, 2);
    const double m01 = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0);
    const double m02 = h(0, 0) * h(2, 2) - h(0, 2) * h(2, 0);
    const double m12 = h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1);
    const double det = h(0, 0) * (h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1)) -
                       h(0, 1) * (h(1, 0) * h(2, 2) - h(1, 2) * h(2, 0)) +
                       h(0, 2) * (h(1, 0) * h(2, 1) - h(1, 1) * h(2, 0));
    // det(H - E) = -E^3 + tr E^2 - (sum of principal 2x2 minors) E + det.
    return solve_cubic(CubicPoly{-1.0, tr, -(m01 + m02 + m12), det});
}

}  // namespace

std::string to_string(SpectralClass cls) {
    switch (cls) {
        case SpectralClass::RealSimple: return "RealSimple";
        case SpectralClass::ExceptionalDouble: return "ExceptionalDouble";
        case SpectralClass::ExceptionalTriple: return "ExceptionalTriple";
        case SpectralClass::ComplexPair: return "ComplexPair";
    }
    throw ParameterError("to_string: unknown SpectralClass value");
}

SpectrumClassification classify(const ModelParams& params) {
    validate(params);
    SpectrumClassification out;
    if (params.dimension == 2) {
        out.roots = solve_quadratic(params.a);
        out.zero_band = 0.0;  // the quadratic path classifies |a| = 1 exactly
    } else {
        const CubicPoly poly = secular_cubic(params);
        out.roots = solve_cubic(poly);
        out.zero_band = discriminant_zero_threshold(poly);
    }

    int max_mult = 0;
    for (int m : out.roots.multiplicities) max_mult = std::max(max_mult, m);
    if (out.roots.pair)
        out.spectral_class = SpectralClass::ComplexPair;
    else if (max_mult == 3)
        out.spectral_class = SpectralClass::ExceptionalTriple;
    else if (max_mult == 2)
        out.spectral_class = SpectralClass::ExceptionalDouble;
    else
        out.spectral_class = SpectralClass::RealSimple;

    if (max_mult >= 2 && !out.roots.pair) {
        for (std::size_t i = 0; i < out.roots.real_roots.size(); ++i)
            if (out.roots.multiplicities[i] == max_mult) {
                out.jordan_defect = jordan_defect(build_hamiltonian(params),
                                                  out.roots.real_roots[i], max_mult);
                break;
            }
    }
    return out;
}

int jordan_defect(const SquareMatrix& h, double eigenvalue, int algebraic_multiplicity) {
    const int n = h.order();
    if (algebraic_multiplicity < 2 || algebraic_multiplicity > n)
        throw ParameterError("jordan_defect: algebraic multiplicity must be between 2 and "
                             "the matrix order; a simple eigenvalue has no defect");
    if (!std::isfinite(eigenvalue))
        throw ParameterError("jordan_defect: eigenvalue must be finite");

    const RootSet roots = characteristic_roots(h);
    bool repeated_nearby = false;
    const double radius = kRepeatedMatch * std::max(1.0, std::abs(eigenvalue));
    for (std::size_t i = 0; i < roots.real_roots.size(); ++i)
        if (roots.multiplicities[i] >= 2 &&
            std::abs(roots.real_roots[i] - eigenvalue) <= radius)
            repeated_nearby = true;
    if (!repeated_nearby)
        throw ParameterError("jordan_defect: " + std::to_string(eigenvalue) +
                             " is not a repeated characteristic root of the matrix");

    SquareMatrix shifted = h;
    for (int i = 0; i < n; ++i) shifted(i, i) -= eigenvalue;
    const int rank = rank_row_reduce(shifted);
    return algebraic_multiplicity - (n - rank);
}

}  // namespace ptspec
