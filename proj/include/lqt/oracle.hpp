// Copyright 2026 The lqt Authors
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

#ifndef LQT_ORACLE_HPP
#define LQT_ORACLE_HPP

#include "lqt/density.hpp"
#include "lqt/metrics.hpp"
#include "lqt/pauli_frame.hpp"
#include "lqt/protocol.hpp"

namespace lqt {

// Brute-force reference computations on dense density matrices.

/// Bare and code-space-sandwiched resource terms of a 10-qubit density matrix.
ResourceSample density_resource_moments(const DensityOperator &rho, const ShorCode &code = ShorCode::standard());

/// <Phi+| rho |Phi+> after syndrome measurement and table recovery.
double density_resource_active_fidelity(const DensityOperator &rho, const ShorCode &code = ShorCode::standard());

/// Unnormalized 9-qubit state left on the code block when the BSM on
/// (input, physical qubit) reports `outcome`. Its trace is the outcome probability.
DensityOperator density_bsm_branch(const DensityOperator &resource, const DensityOperator &input, BellState outcome);

/// Normalized teleportation output: the Phi+ branch alone, or all four
/// branches with their feedforward corrections.
DensityOperator density_teleport_output(const DensityOperator &resource, const DensityOperator &input,
                                        TeleportMode mode, const ShorCode &code = ShorCode::standard());

TeleportMoments density_teleport_moments(const DensityOperator &output, const NamedInput &input,
                                         const ShorCode &code = ShorCode::standard());

}  // namespace lqt

#endif
