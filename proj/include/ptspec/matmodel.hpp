#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <string>

#include "ptspec/errors.hpp"

namespace ptspec {

/// Dense real square matrix of order 2 or 3, row-major, value semantics.
/// Deliberately minimal: the model never needs anything larger, and keeping
/// the storage inline avoids heap traffic in the sweep loops.
class SquareMatrix {
public:
    SquareMatrix() = default;

    explicit SquareMatrix(int order) : order_(check_order(order)) {}

    SquareMatrix(int order, std::initializer_list<double> rowmajor)
        : order_(check_order(order)) {
        if (static_cast<int>(rowmajor.size()) != order_ * order_)
            throw DimensionError("SquareMatrix: initializer has " +
                                 std::to_string(rowmajor.size()) + " entries, expected " +
                                 std::to_string(order_ * order_));
        int k = 0;
        for (double v : rowmajor) e_[static_cast<std::size_t>(k++)] = v;
    }

    int order() const { return order_; }

    double& operator()(int i, int j) { return e_[index(i, j)]; }
    double operator()(int i, int j) const { return e_[index(i, j)]; }

    double max_abs() const;
    SquareMatrix transposed() const;

    friend SquareMatrix operator*(const SquareMatrix& lhs, const SquareMatrix& rhs);
    friend SquareMatrix operator-(const SquareMatrix& lhs, const SquareMatrix& rhs);

    bool operator==(const SquareMatrix&) const = default;

private:
    static int check_order(int order) {
        if (order != 2 && order != 3)
            throw DimensionError("SquareMatrix: order must be 2 or 3, got " +
                                 std::to_string(order));
        return order;
    }

    std::size_t index(int i, int j) const {
        if (i < 0 || j < 0 || i >= order_ || j >= order_)
            throw DimensionError("SquareMatrix: index (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") out of range for order " +
                                 std::to_string(order_));
        return static_cast<std::size_t>(i * order_ + j);
    }

    int order_ = 0;
    std::array<double, 9> e_{};
};

/// Signature matrix P = diag(+-1) acting as the parity operator.
struct ParityMatrix {
    SquareMatrix matrix;
};

/// Couplings of the two- or three-level model. For dimension 2 the fields
/// b and c must stay zero; validate() spells out which rule was broken.
struct ModelParams {
    int dimension = 2;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static ModelParams two_level(double a);
    static ModelParams three_level(double a, double b, double c);
};

/// Throws ParameterError naming the violated invariant; no-op when valid.
void validate(const ModelParams& params);

/// H(2) = [[-1, a], [-a, 1]] or H(3) = [[-1, a, 0], [-a, 1, b], [0, -b, 3+c]].
SquareMatrix build_hamiltonian(const ModelParams& params);

/// P = diag(1, -1) or diag(1, -1, 1), matching the model dimension.
ParityMatrix build_parity(int dimension);

/// Max-abs entry of H^T P - P H; zero (to rounding) for every valid model.
double pseudo_hermiticity_residual(const SquareMatrix& h, const ParityMatrix& p);

}  // namespace ptspec
