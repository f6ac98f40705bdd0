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

#ifndef LQT_PAULI_FRAME_HPP
#define LQT_PAULI_FRAME_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lqt/metrics.hpp"
#include "lqt/noise.hpp"
#include "lqt/protocol.hpp"
#include "lqt/shor_code.hpp"

namespace lqt {

/// Ten independent Pauli operators. A Pauli error E is summarized by its
/// 10-bit anticommutation signature with them, which fixes the sign E picks
/// up against any product of generators.
class FrameGroup {
   public:
    static constexpr int kBits = 10;
    static constexpr std::uint32_t kSize = 1u << kBits;

    explicit FrameGroup(std::vector<PauliString> generators);

    const std::vector<PauliString> &generators() const { return generators_; }
    /// Ordered product of the generators selected by `mask`.
    const PauliString &product(std::uint32_t mask) const { return products_[mask]; }
    std::uint32_t signature(const PauliString &error) const;

    struct Decomposition {
        std::uint32_t mask;
        /// op = i^phase * product(mask).
        int phase;
    };
    /// Expresses `op` through the group, or nullopt when it is not in it.
    std::optional<Decomposition> decompose(const PauliString &op) const;

   private:
    std::vector<PauliString> generators_;
    std::vector<PauliString> products_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

struct TeleportMoments {
    double f_raw;
    double p_cs;
    double f_active;
};

/// Exact observables of the noisy protocol for Pauli noise, without state
/// vectors.
///
/// Every noise realization maps the ideal resource to E|Phi+> for a Pauli E,
/// so the mixed resource is fully described by the probability of each
/// signature of E against the stabilizer group of |Phi+>. Generators 0..7 are
/// the code checks, 8 is X9 X_L and 9 is Z9 Z_L. The teleported output uses
/// the same layout with X_L and Z_L in bits 8 and 9.
class PauliFrameModel {
   public:
    explicit PauliFrameModel(const ShorCode &code = ShorCode::standard());

    const FrameGroup &resource_group() const { return resource_group_; }
    const FrameGroup &output_group() const { return output_group_; }

    /// Probability of each of the 1024 resource signatures.
    std::vector<double> resource_distribution(const NoiseSpec &spec) const;
    /// Folds the input-qubit channel into a resource distribution, giving the
    /// signature distribution of the teleported output. The result does not
    /// depend on the BSM branch once feedforward is applied.
    std::vector<double> output_distribution(std::span<const double> resource, const PauliChannel &input) const;

    /// W[mask] = sum_s D[s] (-1)^{|s & mask|}.
    static std::vector<double> walsh(std::vector<double> distribution);

    /// Exact <op> on the noisy resource, given the Walsh transform of its
    /// distribution. Operators outside the group have expectation 0.
    double resource_expectation(std::span<const double> walsh, const PauliString &op) const;
    /// Exact <op> on the noisy output for ideal output `ideal` (the encoded input).
    double output_expectation(std::span<const double> walsh, const PauliString &op, const StateVector &ideal) const;

    /// Bare and sandwiched fidelity terms and correlators of the noisy resource.
    ResourceSample resource_moments(std::span<const double> distribution) const;
    /// <Phi+| rho |Phi+> after syndrome measurement and table recovery.
    double resource_active_fidelity(std::span<const double> distribution) const;

    TeleportMoments teleport_moments(std::span<const double> output, const NamedInput &input) const;

    std::uint32_t letter_signature(int qubit, Pauli letter) const;
    std::uint32_t logical_signature(LogicalAxis axis) const;

   private:
    ShorCode code_;
    FrameGroup resource_group_;
    FrameGroup output_group_;
    std::array<std::array<std::uint32_t, 3>, kResourceQubits> letter_sig_{};
    std::array<std::uint32_t, 3> logical_sig_{};
    /// Bits 8 and 9 of the table recovery for each syndrome.
    std::array<std::uint32_t, 256> recovery_bits_{};
};

}  // namespace lqt

#endif
