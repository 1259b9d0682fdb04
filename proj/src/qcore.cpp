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

#include "qmm/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qmm {

namespace {

void require_finite(std::span<const cplx> values, const char *what) {
    for (const cplx &v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw ValidationError(std::string(what) +
                                  ": non-finite entry");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b,
                        const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " +
                             std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("ComplexMatrix: entry count does not match shape");
    }
    require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace: matrix is not square");
    }
    cplx t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const cplx &v : entries_) {
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "operator+");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_shape(*this, rhs, "operator-");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx s) {
    for (cplx &v : entries_) {
        v *= s;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) {
    lhs -= rhs;
    return lhs;
}

ComplexMatrix operator*(cplx s, ComplexMatrix m) {
    m *= s;
    return m;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw DimensionError("operator*: inner dimensions differ");
    }
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const cplx a = lhs(r, k);
            if (a == cplx{}) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols(); ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

Ket::Ket(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    require_finite(amps_, "Ket");
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("Ket::basis: index out of range");
    }
    std::vector<cplx> amps(dim);
    amps[index] = 1.0;
    return Ket(std::move(amps));
}

double Ket::norm() const {
    double s = 0.0;
    for (const cplx &a : amps_) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

Ket Ket::normalized() const {
    const double n = norm();
    if (n == 0.0) {
        throw ValidationError("Ket::normalized: zero vector");
    }
    std::vector<cplx> amps = amps_;
    for (cplx &a : amps) {
        a /= n;
    }
    return Ket(std::move(amps));
}

ComplexMatrix Ket::projector() const { return outer(*this, *this); }

cplx inner(const Ket &a, const Ket &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner: dimension mismatch");
    }
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

ComplexMatrix outer(const Ket &a, const Ket &b) {
    ComplexMatrix m(a.dim(), b.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < b.dim(); ++c) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

Ket operator*(const ComplexMatrix &m, const Ket &k) {
    if (m.cols() != k.dim()) {
        throw DimensionError("operator*: matrix/ket dimension mismatch");
    }
    std::vector<cplx> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r] += m(r, c) * k[c];
        }
    }
    return Ket(std::move(out));
}

cplx matrix_element(const Ket &a, const ComplexMatrix &m, const Ket &b) {
    return inner(a, m * b);
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra) {
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const cplx x = a(ra, ca);
            for (std::size_t rb = 0; rb < b.rows(); ++rb) {
                for (std::size_t cb = 0; cb < b.cols(); ++cb) {
                    out(ra * b.rows() + rb, ca * b.cols() + cb) = x * b(rb, cb);
                }
            }
        }
    }
    return out;
}

Ket tensor(const Ket &a, const Ket &b) {
    std::vector<cplx> out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return Ket(std::move(out));
}

HilbertLayout::HilbertLayout(std::vector<std::size_t> dims)
    : dims_(std::move(dims)) {
    for (std::size_t d : dims_) {
        if (d == 0) {
            throw DimensionError("HilbertLayout: zero-dimensional factor");
        }
        total_ *= d;
    }
}

ComplexMatrix partial_trace(const ComplexMatrix &op, const HilbertLayout &layout,
                            std::span<const std::size_t> keep) {
    if (!op.is_square() || op.rows() != layout.total()) {
        throw DimensionError("partial_trace: operator dimension " +
                             std::to_string(op.rows()) +
                             " does not match layout total " +
                             std::to_string(layout.total()));
    }
    const std::size_t nf = layout.factors();
    std::vector<bool> kept(nf, false);
    for (std::size_t f : keep) {
        if (f >= nf) {
            throw DimensionError("partial_trace: factor index out of range");
        }
        kept[f] = true;
    }

    // Strides of every factor in the full index and of kept factors in the
    // reduced index.
    std::vector<std::size_t> stride(nf), kept_stride(nf, 0);
    std::size_t s = 1, ks = 1;
    for (std::size_t f = nf; f-- > 0;) {
        stride[f] = s;
        s *= layout.dim(f);
        if (kept[f]) {
            kept_stride[f] = ks;
            ks *= layout.dim(f);
        }
    }
    const std::size_t reduced_dim = ks;

    // Split each full index into (reduced index, traced-out index).
    const std::size_t n = layout.total();
    std::vector<std::size_t> red(n), rest(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        std::size_t r = 0, t = 0, tstride = 1;
        for (std::size_t f = nf; f-- > 0;) {
            const std::size_t digit = (idx / stride[f]) % layout.dim(f);
            if (kept[f]) {
                r += digit * kept_stride[f];
            } else {
                t += digit * tstride;
                tstride *= layout.dim(f);
            }
        }
        red[idx] = r;
        rest[idx] = t;
    }

    ComplexMatrix out(reduced_dim, reduced_dim);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (rest[r] == rest[c]) {
                out(red[r], red[c]) += op(r, c);
            }
        }
    }
    return out;
}

double hermiticity_deviation(const ComplexMatrix &op) {
    if (!op.is_square()) {
        throw DimensionError("hermiticity_deviation: matrix is not square");
    }
    double worst = 0.0;
    for (std::size_t r = 0; r < op.rows(); ++r) {
        for (std::size_t c = r; c < op.cols(); ++c) {
            worst = std::max(worst, std::abs(op(r, c) - std::conj(op(c, r))));
        }
    }
    return worst;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &op, double tol) {
    if (!op.is_square()) {
        throw DimensionError("hermitian_eigenvalues: matrix is not square");
    }
    if (const double dev = hermiticity_deviation(op); dev > tol) {
        throw ValidationError("hermitian_eigenvalues: matrix is not Hermitian "
                              "(deviation " +
                              std::to_string(dev) + ")");
    }
    const std::size_t n = op.rows();
    // Work on the exactly Hermitian part.
    ComplexMatrix a = 0.5 * (op + op.dagger());

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_norm() >= tol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) {
                    continue;
                }
                // Diagonal phase on q makes a(p,q) real and positive.
                const cplx phase = a(p, q) / mag;
                for (std::size_t k = 0; k < n; ++k) {
                    a(k, q) *= std::conj(phase);
                }
                for (std::size_t k = 0; k < n; ++k) {
                    a(q, k) *= phase;
                }
                a(p, q) = mag;
                a(q, p) = mag;

                // Real Jacobi rotation annihilating a(p,q).
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) {
        eig[i] = a(i, i).real();
    }
    std::sort(eig.begin(), eig.end());
    return eig;
}

UnitarityCheck check_unitary(const ComplexMatrix &op, double tol) {
    if (!op.is_square()) {
        throw DimensionError("check_unitary: matrix is not square");
    }
    const ComplexMatrix gram = op.dagger() * op;
    const double dev = gram.max_abs_diff(ComplexMatrix::identity(op.rows()));
    return {dev <= tol, dev};
}

double orthonormality_deviation(std::span<const Ket> basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const cplx expected = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst,
                             std::abs(inner(basis[i], basis[j]) - expected));
        }
    }
    return worst;
}

bool is_orthonormal_basis(std::span<const Ket> basis, std::size_t dim,
                          double tol) {
    if (basis.size() != dim) {
        return false;
    }
    for (const Ket &k : basis) {
        if (k.dim() != dim) {
            return false;
        }
    }
    return orthonormality_deviation(basis) <= tol;
}

void require_density(const ComplexMatrix &rho, double tol,
                     const std::string &what) {
    if (!rho.is_square()) {
        throw DimensionError(what + ": not square");
    }
    if (hermiticity_deviation(rho) > tol) {
        throw ValidationError(what + ": not Hermitian");
    }
    if (std::abs(rho.trace() - 1.0) > tol) {
        throw ValidationError(what + ": trace differs from 1");
    }
    if (hermitian_eigenvalues(rho, tol).front() < -tol) {
        throw ValidationError(what + ": not positive semidefinite");
    }
}

namespace gates {

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() {
    return {{0.0, cplx{0.0, -1.0}}, {cplx{0.0, 1.0}, 0.0}};
}

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix hadamard() {
    return kInvSqrt2 * (pauli_x() + pauli_z());
}

} // namespace gates

} // namespace qmm
