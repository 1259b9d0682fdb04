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

#include "qmm/multimeter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qmm {

namespace {

HilbertLayout processor_layout(std::size_t data_dim, std::size_t ancilla_dim,
                               std::size_t programs) {
    if (programs == 0) {
        throw ValidationError("Processor: no unitaries");
    }
    return {data_dim, ancilla_dim, programs};
}

void require_basis(const std::vector<Ket> &basis, std::size_t dim,
                   const char *what) {
    if (!is_orthonormal_basis(basis, dim)) {
        throw ValidationError(std::string(what) +
                              ": not an orthonormal basis of dimension " +
                              std::to_string(dim));
    }
}

} // namespace

Processor::Processor(std::vector<ComplexMatrix> unitaries,
                     std::vector<Ket> program_basis, std::size_t data_dim,
                     std::size_t ancilla_dim)
    : unitaries_(std::move(unitaries)), program_basis_(std::move(program_basis)),
      layout_(processor_layout(data_dim, ancilla_dim, program_basis_.size())) {
    if (unitaries_.empty()) {
        throw ValidationError("Processor: no unitaries");
    }
    if (unitaries_.size() != program_basis_.size()) {
        throw DimensionError("Processor: one program state per unitary required");
    }
    require_basis(program_basis_, program_basis_.size(), "Processor program basis");
    const std::size_t dim = data_dim * ancilla_dim;
    for (std::size_t k = 0; k < unitaries_.size(); ++k) {
        const ComplexMatrix &u = unitaries_[k];
        if (u.rows() != dim || u.cols() != dim) {
            throw DimensionError("Processor: unitary " + std::to_string(k) +
                                 " does not act on data ⊗ ancilla");
        }
        if (const auto check = check_unitary(u); !check.pass) {
            throw ValidationError("Processor: operator " + std::to_string(k) +
                                  " is not unitary (deviation " +
                                  std::to_string(check.deviation) + ")");
        }
    }
}

MeasurementModel::MeasurementModel(std::vector<Ket> data_basis,
                                   std::vector<Ket> ancilla_basis,
                                   std::vector<Ket> program_basis)
    : data_(std::move(data_basis)), ancilla_(std::move(ancilla_basis)),
      program_(std::move(program_basis)) {
    require_basis(data_, data_.size(), "data measurement basis");
    require_basis(ancilla_, ancilla_.size(), "ancilla measurement basis");
    require_basis(program_, program_.size(), "program measurement basis");
}

MeasurementModel MeasurementModel::computational(std::size_t data_dim,
                                                 std::size_t ancilla_dim,
                                                 std::size_t program_dim) {
    return {computational_basis(data_dim), computational_basis(ancilla_dim),
            computational_basis(program_dim)};
}

std::vector<Ket> computational_basis(std::size_t dim) {
    std::vector<Ket> basis;
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        basis.push_back(Ket::basis(dim, i));
    }
    return basis;
}

ComplexMatrix build_processor_unitary(const Processor &p) {
    const std::size_t total = p.layout().total();
    ComplexMatrix out(total, total);
    for (std::size_t k = 0; k < p.unitaries().size(); ++k) {
        out += tensor(p.unitaries()[k], p.program_basis()[k].projector());
    }
    return out;
}

std::vector<LabeledProjector> build_measurement(const MeasurementModel &m) {
    std::vector<LabeledProjector> out;
    out.reserve(m.data_basis().size() * m.ancilla_basis().size() *
                m.program_basis().size());
    for (std::size_t i = 0; i < m.data_basis().size(); ++i) {
        for (std::size_t j = 0; j < m.ancilla_basis().size(); ++j) {
            for (std::size_t k = 0; k < m.program_basis().size(); ++k) {
                const Ket v = tensor(tensor(m.data_basis()[i], m.ancilla_basis()[j]),
                                     m.program_basis()[k]);
                out.push_back({{i, j, k}, v.projector()});
            }
        }
    }
    return out;
}

double OutcomeTable::at(const OutcomeLabel &label) const {
    const auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) {
        throw std::out_of_range("OutcomeTable::at: unknown outcome label");
    }
    return probabilities[static_cast<std::size_t>(it - labels.begin())];
}

OutcomeTable simulate(const Processor &p, const MeasurementModel &m,
                      const ComplexMatrix &rho_data,
                      const ComplexMatrix &rho_ancilla,
                      const ComplexMatrix &rho_program) {
    const HilbertLayout &layout = p.layout();
    if (rho_data.rows() != layout.dim(0) || rho_ancilla.rows() != layout.dim(1) ||
        rho_program.rows() != layout.dim(2)) {
        throw DimensionError("simulate: register states do not match layout");
    }
    if (m.data_basis().size() != layout.dim(0) ||
        m.ancilla_basis().size() != layout.dim(1) ||
        m.program_basis().size() != layout.dim(2)) {
        throw DimensionError("simulate: measurement does not match layout");
    }
    require_density(rho_data, kStructuralTol, "data state");
    require_density(rho_ancilla, kStructuralTol, "ancilla state");
    require_density(rho_program, kStructuralTol, "program state");

    const ComplexMatrix proc = build_processor_unitary(p);
    const ComplexMatrix rho =
        proc * tensor(tensor(rho_data, rho_ancilla), rho_program) * proc.dagger();

    OutcomeTable table;
    for (const LabeledProjector &e : build_measurement(m)) {
        // Tr(E ρ) for rank-1 E = |v⟩⟨v| is ⟨v|ρ|v⟩; use the trace directly so
        // the oracle makes no assumption about E.
        double prob = 0.0;
        for (std::size_t r = 0; r < rho.rows(); ++r) {
            for (std::size_t c = 0; c < rho.cols(); ++c) {
                prob += (e.op(r, c) * rho(c, r)).real();
            }
        }
        table.labels.push_back(e.label);
        table.probabilities.push_back(std::max(prob, 0.0));
    }
    const double total = std::accumulate(table.probabilities.begin(),
                                         table.probabilities.end(), 0.0);
    if (std::abs(total - 1.0) > kStructuralTol) {
        throw std::logic_error("simulate: outcome probabilities sum to " +
                               std::to_string(total));
    }
    return table;
}

Processor spin_axis_bank() {
    using namespace gates;
    const double s = kInvSqrt2;
    std::vector<ComplexMatrix> us{ComplexMatrix::identity(2),
                                  s * (pauli_x() + pauli_z()),
                                  s * (pauli_y() + pauli_z())};
    return Processor(std::move(us), computational_basis(3), 2, 1);
}

} // namespace qmm
