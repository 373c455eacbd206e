// Copyright 2026 The imprecise-q Authors
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

#include "impq/gates.h"

#include <cmath>
#include <numbers>
#include <string>

#include "impq/error.h"

namespace impq {

namespace {

void require_finite(double eps, const char *name) {
    if (!std::isfinite(eps)) {
        throw UsageError(std::string(name) + " must be finite");
    }
}

/// [cos a  sin a; sin a  -cos a], a reflection.
Matrix2 reflection(double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    return {c, s, s, -c};
}

const Matrix2 kPauliX{0, 1, 1, 0};

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::I:
            return "I";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CRY:
            return "CRY";
    }
    return "?";
}

UnitaryGate make_faulty_1q(GateKind kind, double eps) {
    require_finite(eps, "rotation error");
    using std::numbers::pi;
    switch (kind) {
        case GateKind::H:
            return UnitaryGate(Complex{0, 1} * reflection(pi / 4 + eps));
        case GateKind::X:
            return UnitaryGate(reflection(pi / 2 + eps));
        case GateKind::Z:
            return UnitaryGate(reflection(eps));
        case GateKind::I: {
            double c = std::cos(eps);
            double s = std::sin(eps);
            return UnitaryGate(Matrix2{c, -s, s, c});
        }
        case GateKind::CNOT:
        case GateKind::CRY:
            break;
    }
    throw UsageError("make_faulty_1q given a two-qubit gate kind");
}

Matrix4 faulty_cnot_matrix(double eps0, double eps1) {
    require_finite(eps0, "eps0");
    require_finite(eps1, "eps1");
    using std::numbers::pi;
    double c0 = std::cos(eps0);
    double s0 = std::sin(eps0);
    double c1 = std::cos(pi / 2 + eps1);
    double s1 = std::sin(pi / 2 + eps1);
    return {
        c0, -s0, 0,  0,    //
        s0, c0,  0,  0,    //
        0,  0,   c1, s1,   //
        0,  0,   s1, -c1,  //
    };
}

UnitaryGate make_faulty_cnot(double eps0, double eps1) {
    return UnitaryGate(faulty_cnot_matrix(eps0, eps1));
}

Matrix4 controlled_ry_matrix(double theta) {
    require_finite(theta, "theta");
    double c = std::cos(theta / 2);
    double s = std::sin(theta / 2);
    return {
        1, 0, 0, 0,   //
        0, 1, 0, 0,   //
        0, 0, c, -s,  //
        0, 0, s, c,   //
    };
}

UnitaryGate make_controlled_ry(double theta) {
    return UnitaryGate(controlled_ry_matrix(theta));
}

CnotFactors cnot_decomposition(double eps0, double eps1) {
    require_finite(eps0, "eps0");
    require_finite(eps1, "eps1");
    double c0 = std::cos(eps0);
    double s0 = std::sin(eps0);
    double c1 = std::cos(eps1);
    double s1 = std::sin(eps1);
    Matrix4 left{
        c0, -s0, 0, 0,  //
        s0, c0,  0, 0,  //
        0,  0,   0, 1,  //
        0,  0,   1, 0,  //
    };
    Matrix4 right{
        1, 0, 0,   0,   //
        0, 1, 0,   0,   //
        0, 0, c1,  s1,  //
        0, 0, -s1, c1,  //
    };
    return {left, right};
}

double decomposition_defect(const CnotFactors &factors, double eps0, double eps1) {
    return max_abs_diff(factors.left * factors.right, faulty_cnot_matrix(eps0, eps1));
}

double ry_conjugation_defect(const Matrix4 &right, double eps1) {
    const Matrix4 ix = kron(Matrix2::identity(), kPauliX);
    const Matrix4 v = ix * right * ix;
    return max_abs_diff(v, controlled_ry_matrix(2 * eps1));
}

double verify_ry_equivalence(double eps1) {
    return ry_conjugation_defect(cnot_decomposition(0.0, eps1).right, eps1);
}

}  // namespace impq
