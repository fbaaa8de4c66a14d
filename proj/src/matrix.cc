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

#include "pss/matrix.h"

#include <cmath>
#include <limits>

#include "pss/error.h"

namespace pss {

CMatrix CMatrix::identity(size_t n) {
    CMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::operator*(const CMatrix &other) const {
    if (cols != other.rows) {
        throw Error(ErrorKind::DimensionMismatch, "matrix product shapes do not agree");
    }
    CMatrix r(rows, other.cols);
    for (size_t i = 0; i < rows; i++) {
        for (size_t k = 0; k < cols; k++) {
            Amplitude a = (*this)(i, k);
            if (a == Amplitude(0)) {
                continue;
            }
            for (size_t j = 0; j < other.cols; j++) {
                r(i, j) += a * other(k, j);
            }
        }
    }
    return r;
}

CMatrix CMatrix::adjoint() const {
    CMatrix r(cols, rows);
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < cols; j++) {
            r(j, i) = std::conj((*this)(i, j));
        }
    }
    return r;
}

CMatrix CMatrix::scaled(Amplitude s) const {
    CMatrix r = *this;
    for (auto &v : r.data) {
        v *= s;
    }
    return r;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix r(a.rows * b.rows, a.cols * b.cols);
    for (size_t i = 0; i < a.rows; i++) {
        for (size_t j = 0; j < a.cols; j++) {
            for (size_t k = 0; k < b.rows; k++) {
                for (size_t l = 0; l < b.cols; l++) {
                    r(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows != b.rows || a.cols != b.cols) {
        return std::numeric_limits<double>::infinity();
    }
    double d = 0;
    for (size_t i = 0; i < a.data.size(); i++) {
        d = std::max(d, std::abs(a.data[i] - b.data[i]));
    }
    return d;
}

bool approx_equal(const CMatrix &a, const CMatrix &b, double tol) {
    return max_abs_diff(a, b) < tol;
}

bool equal_up_to_phase(const CMatrix &a, const CMatrix &b, double tol, Amplitude *phase) {
    if (a.rows != b.rows || a.cols != b.cols) {
        return false;
    }
    // Anchor the phase on the largest entry of b.
    size_t best = 0;
    for (size_t i = 0; i < b.data.size(); i++) {
        if (std::abs(b.data[i]) > std::abs(b.data[best])) {
            best = i;
        }
    }
    Amplitude ph = 1.0;
    if (!b.data.empty() && std::abs(b.data[best]) > tol) {
        ph = a.data[best] / b.data[best];
        if (std::abs(std::abs(ph) - 1.0) > 1e-6) {
            return false;
        }
        ph /= std::abs(ph);
    }
    if (max_abs_diff(a, b.scaled(ph)) >= tol) {
        return false;
    }
    if (phase != nullptr) {
        *phase = ph;
    }
    return true;
}

bool is_unitary(const CMatrix &a, double tol) {
    if (a.rows != a.cols) {
        return false;
    }
    return approx_equal(a.adjoint() * a, CMatrix::identity(a.rows), tol);
}

}  // namespace pss
