// Copyright 2026 The QMM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for small tensor-product Hilbert spaces.
 *
 * Composite indices are big-endian: for a ⊗ b the entry index is
 * i_a * dim(b) + i_b. Registers are always laid out as
 * data ⊗ ancilla ⊗ program.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmm {

using cplx = std::complex<double>;

/// Tolerance for structural checks (unitarity, Hermiticity, positivity).
inline constexpr double kStructuralTol = 1e-10;
/// 1/√2
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
/// Tolerance for state normalization.
inline constexpr double kNormTol = 1e-12;

class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; throws if the size does not match or any entry is
    /// not finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
        return {rows, cols};
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] std::span<const cplx> entries() const noexcept {
        return entries_;
    }

    cplx &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] ComplexMatrix dagger() const;
    [[nodiscard]] cplx trace() const;
    /// Largest |entry| of (this - other).
    [[nodiscard]] double max_abs_diff(const ComplexMatrix &other) const;
    [[nodiscard]] double max_abs() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(cplx s);

    friend bool operator==(const ComplexMatrix &,
                           const ComplexMatrix &) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
ComplexMatrix operator*(cplx s, ComplexMatrix m);

class Ket {
  public:
    Ket() = default;
    explicit Ket(std::vector<cplx> amplitudes);
    Ket(std::initializer_list<cplx> amplitudes)
        : Ket(std::vector<cplx>(amplitudes)) {}

    /// Computational basis state |index⟩ in a dim-dimensional space.
    static Ket basis(std::size_t dim, std::size_t index);

    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept {
        return amps_;
    }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    [[nodiscard]] double norm() const;
    /// Returns a unit-norm copy; throws ValidationError for the zero vector.
    [[nodiscard]] Ket normalized() const;
    /// |this⟩⟨this|
    [[nodiscard]] ComplexMatrix projector() const;

    friend bool operator==(const Ket &, const Ket &) = default;

  private:
    std::vector<cplx> amps_;
};

/// ⟨a|b⟩
cplx inner(const Ket &a, const Ket &b);
/// |a⟩⟨b|
ComplexMatrix outer(const Ket &a, const Ket &b);
Ket operator*(const ComplexMatrix &m, const Ket &k);
/// ⟨a|M|b⟩
cplx matrix_element(const Ket &a, const ComplexMatrix &m, const Ket &b);

/// Kronecker products, left factor most significant.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);
Ket tensor(const Ket &a, const Ket &b);

/// Factor dimensions of a composite space in tensor order.
class HilbertLayout {
  public:
    HilbertLayout() = default;
    explicit HilbertLayout(std::vector<std::size_t> dims);
    HilbertLayout(std::initializer_list<std::size_t> dims)
        : HilbertLayout(std::vector<std::size_t>(dims)) {}

    [[nodiscard]] std::size_t factors() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t dim(std::size_t factor) const {
        return dims_.at(factor);
    }
    [[nodiscard]] std::span<const std::size_t> dims() const noexcept {
        return dims_;
    }
    [[nodiscard]] std::size_t total() const noexcept { return total_; }

  private:
    std::vector<std::size_t> dims_;
    std::size_t total_ = 1;
};

/// Traces out every factor not listed in `keep`. The kept factors retain
/// their relative tensor order regardless of the order given in `keep`.
ComplexMatrix partial_trace(const ComplexMatrix &op, const HilbertLayout &layout,
                            std::span<const std::size_t> keep);
inline ComplexMatrix partial_trace(const ComplexMatrix &op,
                                   const HilbertLayout &layout,
                                   std::initializer_list<std::size_t> keep) {
    return partial_trace(op, layout, std::span(keep.begin(), keep.size()));
}

/// max |M - M†|
double hermiticity_deviation(const ComplexMatrix &op);

/// Eigenvalues of a Hermitian matrix in ascending order, computed with
/// cyclic complex Jacobi rotations until the off-diagonal Frobenius norm
/// drops below `tol`. Throws ValidationError if `op` is not Hermitian
/// within `tol`.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &op,
                                          double tol = kStructuralTol);

struct UnitarityCheck {
    bool pass = false;
    double deviation = 0.0; ///< max |(U†U - I)_rc|
};

UnitarityCheck check_unitary(const ComplexMatrix &op,
                             double tol = kStructuralTol);

/// max |⟨b_i|b_j⟩ - δ_ij| over the set.
double orthonormality_deviation(std::span<const Ket> basis);
/// Orthonormal within `tol`, every vector of dimension `dim`, and exactly
/// `dim` vectors.
bool is_orthonormal_basis(std::span<const Ket> basis, std::size_t dim,
                          double tol = kStructuralTol);

/// Throws ValidationError unless `rho` is Hermitian, unit trace and positive
/// semidefinite within `tol`.
void require_density(const ComplexMatrix &rho, double tol = kStructuralTol,
                     const std::string &what = "density matrix");

namespace gates {
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();
} // namespace gates

} // namespace qmm
