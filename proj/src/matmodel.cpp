#include "ptspec/matmodel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ptspec {

double SquareMatrix::max_abs() const {
    double m = 0.0;
    for (int k = 0; k < order_ * order_; ++k)
        m = std::max(m, std::abs(e_[static_cast<std::size_t>(k)]));
    return m;
}

SquareMatrix SquareMatrix::transposed() const {
    SquareMatrix t(order_);
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs) {
    if (lhs.order_ != rhs.order_)
        throw DimensionError("matrix product: orders " + std::to_string(lhs.order_) +
                             " and " + std::to_string(rhs.order_) + " differ");
    SquareMatrix out(lhs.order_);
    for (int i = 0; i < lhs.order_; ++i)
        for (int j = 0; j < lhs.order_; ++j) {
            double s = 0.0;
            for (int k = 0; k < lhs.order_; ++k) s += lhs(i, k) * rhs(k, j);
            out(i, j) = s;
        }
    return out;
}

SquareMatrix operator-(const SquareMatrix& lhs, const SquareMatrix& rhs) {
    if (lhs.order_ != rhs.order_)
        throw DimensionError("matrix difference: orders " + std::to_string(lhs.order_) +
                             " and " + std::to_string(rhs.order_) + " differ");
    SquareMatrix out(lhs.order_);
    for (int i = 0; i < lhs.order_; ++i)
        for (int j = 0; j < lhs.order_; ++j) out(i, j) = lhs(i, j) - rhs(i, j);
    return out;
}

ModelParams ModelParams::two_level(double a) {
    ModelParams p{2, a, 0.0, 0.0};
    validate(p);
    return p;
}

ModelParams ModelParams::three_level(double a, double b, double c) {
    ModelParams p{3, a, b, c};
    validate(p);
    return p;
}

void validate(const ModelParams& params) {
    if (params.dimension != 2 && params.dimension != 3)
        throw ParameterError("ModelParams: dimension must be 2 or 3, got " +
                             std::to_string(params.dimension));
    if (!std::isfinite(params.a) || !std::isfinite(params.b) || !std::isfinite(params.c))
        throw ParameterError("ModelParams: couplings must be finite");
    if (params.dimension == 2 && (params.b != 0.0 || params.c != 0.0))
        throw ParameterError(
            "ModelParams: b and c must be zero for the two-level model (got b = " +
            std::to_string(params.b) + ", c = " + std::to_string(params.c) + ")");
    if (params.dimension == 3 && (params.c == -2.0 || params.c == -4.0))
        throw ParameterError("ModelParams: c = " + std::to_string(params.c) +
                             " makes the third diagonal entry 3 + c collide with a "
                             "two-level eigenvalue; c = -2 and c = -4 are excluded");
}

SquareMatrix build_hamiltonian(const ModelParams& params) {
    validate(params);
    if (params.dimension == 2)
        return SquareMatrix(2, {-1.0, params.a,
                                -params.a, 1.0});
    return SquareMatrix(3, {-1.0, params.a, 0.0,
                            -params.a, 1.0, params.b,
                            0.0, -params.b, 3.0 + params.c});
}

ParityMatrix build_parity(int dimension) {
    if (dimension == 2) return ParityMatrix{SquareMatrix(2, {1.0, 0.0, 0.0, -1.0})};
    if (dimension == 3)
        return ParityMatrix{SquareMatrix(3, {1.0, 0.0, 0.0,
                                             0.0, -1.0, 0.0,
                                             0.0, 0.0, 1.0})};
    throw ParameterError("build_parity: dimension must be 2 or 3, got " +
                         std::to_string(dimension));
}

double pseudo_hermiticity_residual(const SquareMatrix& h, const ParityMatrix& p) {
    if (h.order() != p.matrix.order())
        throw DimensionError("pseudo_hermiticity_residual: H has order " +
                             std::to_string(h.order()) + " but P has order " +
                             std::to_string(p.matrix.order()));
    return (h.transposed() * p.matrix - p.matrix * h).max_abs();
}

}  // namespace ptspec
