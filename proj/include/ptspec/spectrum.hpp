#pragma once

#include <string>

#include "ptspec/cubic.hpp"
#include "ptspec/matmodel.hpp"

namespace ptspec {

enum class SpectralClass {
    RealSimple,         ///< all eigenvalues real and distinct (interior of D)
    ExceptionalDouble,  ///< one doubly degenerate real eigenvalue (generic EP)
    ExceptionalTriple,  ///< triply degenerate eigenvalue (DEP)
    ComplexPair,        ///< a conjugate pair has left the real axis
};

std::string to_string(SpectralClass cls);

/// Where a parameter point sits relative to the quasi-Hermiticity domain.
/// zero_band records the |discriminant| width treated as exceptional, so a
/// caller can see how close the call was instead of trusting a hard edge.
struct SpectrumClassification {
    SpectralClass spectral_class = SpectralClass::RealSimple;
    RootSet roots;
    int jordan_defect = 0;
    double zero_band = 0.0;
};

/// Classify the spectrum of the model at the given couplings. Dimension 2
/// goes through solve_quadratic, dimension 3 through the secular cubic.
SpectrumClassification classify(const ModelParams& params);

/// algebraic_multiplicity - geometric multiplicity for the given repeated
/// eigenvalue of H. Rank of H - eigenvalue*I comes from row reduction with
/// partial pivoting and pivot threshold 1e-9 * (max absolute entry). The
/// eigenvalue must lie within 1e-6 * max(1, |eigenvalue|) of a repeated root
/// of the characteristic polynomial.
int jordan_defect(const SquareMatrix& h, double eigenvalue, int algebraic_multiplicity);

}  // namespace ptspec
