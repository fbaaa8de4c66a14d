// Copyright 2026 The PSS Authors
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

#ifndef PSS_MATRIX_H
#define PSS_MATRIX_H

#include <complex>
#include <cstddef>
#include <vector>

namespace pss {

using Amplitude = std::complex<double>;

inline constexpr double kOracleTolerance = 1e-9;

/// Dense row-major complex matrix. Basis states are big-endian: qubit 0 is
/// the most significant bit of the row/column index.
struct CMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<Amplitude> data;

    CMatrix() = default;
    CMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c) {
    }
    static CMatrix identity(size_t n);

    Amplitude &operator()(size_t r, size_t c) {
        return data[r * cols + c];
    }
    const Amplitude &operator()(size_t r, size_t c) const {
        return data[r * cols + c];
    }

    CMatrix operator*(const CMatrix &other) const;
    CMatrix adjoint() const;
    CMatrix scaled(Amplitude s) const;
};

CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Largest entrywise |a - b|; infinity on shape mismatch.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

bool approx_equal(const CMatrix &a, const CMatrix &b, double tol = kOracleTolerance);

/// True when a = e^{i phi} b for some phi. On success *phase receives
/// e^{i phi}.
bool equal_up_to_phase(const CMatrix &a, const CMatrix &b, double tol = kOracleTolerance, Amplitude *phase = nullptr);

bool is_unitary(const CMatrix &a, double tol = kOracleTolerance);

}  // namespace pss

#endif
