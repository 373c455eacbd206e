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

#ifndef IMPQ_GATES_H
#define IMPQ_GATES_H

#include <string_view>

#include "impq/matrix.h"
#include "impq/state_vector.h"

namespace impq {

enum class GateKind { H, X, Z, I, CNOT, CRY };

std::string_view gate_kind_name(GateKind kind);

/// Over/under-rotated single-qubit gate. `eps` is the rotation error in
/// radians; eps = 0 gives the ideal gate. H keeps its global factor i:
///
///     H(e) = i [cos(pi/4+e)  sin(pi/4+e); sin(pi/4+e) -cos(pi/4+e)]
///     X(e) =   [cos(pi/2+e)  sin(pi/2+e); sin(pi/2+e) -cos(pi/2+e)]
///     Z(e) =   [cos(e)       sin(e);      sin(e)      -cos(e)]
///     I(e) =   [cos(e)      -sin(e);      sin(e)       cos(e)]
///
/// Throws UsageError for a 2-qubit kind or non-finite eps.
UnitaryGate make_faulty_1q(GateKind kind, double eps);

/// CNOT whose control-0 block is rotated by eps0 and whose control-1 block is
/// X(eps1). Targets are (control, target).
Matrix4 faulty_cnot_matrix(double eps0, double eps1);
UnitaryGate make_faulty_cnot(double eps0, double eps1);

/// diag(I, R_y(theta)) with R_y(theta) = [cos(theta/2) -sin(theta/2); sin(theta/2) cos(theta/2)].
Matrix4 controlled_ry_matrix(double theta);
UnitaryGate make_controlled_ry(double theta);

/// Factorization CNOT(eps0, eps1) = left * right.
///
/// left  = diag(rotation(eps0), [0 1; 1 0])   ideal CNOT with the control-0 block rotated
/// right = diag(I, [cos e1  sin e1; -sin e1  cos e1])
struct CnotFactors {
    Matrix4 left;
    Matrix4 right;
};
CnotFactors cnot_decomposition(double eps0, double eps1);

/// ||left * right - CNOT(eps0, eps1)||_max
double decomposition_defect(const CnotFactors &factors, double eps0, double eps1);

/// Conjugates `right` by X on the target, V = (I (x) X) right (I (x) X), and
/// returns ||V - controlled_ry(2 eps1)||_max. Matching the R_y block against
/// the conjugated right factor fixes theta/2 = eps1.
double ry_conjugation_defect(const Matrix4 &right, double eps1);

/// ry_conjugation_defect applied to the right factor of cnot_decomposition(0, eps1).
double verify_ry_equivalence(double eps1);

}  // namespace impq

#endif
