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

#ifndef LQT_SHOR_CODE_HPP
#define LQT_SHOR_CODE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lqt/pauli.hpp"
#include "lqt/state.hpp"

namespace lqt {

enum class LogicalAxis { X, Y, Z };

/// Three blocks of three code-qubit indices. Block b is carried by photon b+1;
/// within a block the order is (polarization, path, OAM).
using BlockMap = std::array<std::array<int, 3>, 3>;

inline constexpr BlockMap kDefaultBlocks = {{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}};

/// +-1 outcomes of the 8 stabilizer generators, in generator order.
struct Syndrome {
    std::array<int, 8> bits{1, 1, 1, 1, 1, 1, 1, 1};

    bool trivial() const;
    /// Bit j set iff generator j reads -1.
    std::uint8_t mask() const;
    static Syndrome from_mask(std::uint8_t mask);
    std::string str() const;
    bool operator==(const Syndrome &) const = default;
};

struct Recovery {
    PauliString op;
    /// True when the syndrome is explained by an error of weight <= 1.
    bool in_table;
    int weight;
};

/// The (9,1,3) Shor code.
///
/// Generators, in order: Z-pairs (b0,b1), (b1,b2) inside each block, then the
/// X-type checks over blocks 0+1 and blocks 1+2. Logical representatives are
/// X_L = Z on the first qubit of every block, Z_L = X on all of block 0, and
/// Y_L = i X_L Z_L.
class ShorCode {
   public:
    static constexpr int kNumQubits = 9;
    static constexpr int kNumGenerators = 8;

    explicit ShorCode(const BlockMap &blocks = kDefaultBlocks);

    /// Arbitrary generator list with the standard logicals. Used to build
    /// deliberately broken codes in tests; no validity checks beyond sizes.
    static ShorCode with_generators(std::vector<PauliString> generators);

    static const ShorCode &standard();

    const BlockMap &blocks() const { return blocks_; }
    const std::vector<PauliString> &generators() const { return generators_; }
    const PauliString &logical_x() const { return logical_x_; }
    const PauliString &logical_y() const { return logical_y_; }
    const PauliString &logical_z() const { return logical_z_; }
    const PauliString &logical(LogicalAxis axis) const;

    /// Syndrome an error pattern would produce on a code word.
    Syndrome syndrome_of(const PauliString &error) const;

    /// Minimum-weight recovery for a syndrome. Ties go to the lexicographically
    /// smallest qubit set, then to the letter order X < Y < Z.
    Recovery decode(const Syndrome &syndrome) const;

   private:
    ShorCode(const BlockMap &blocks, std::vector<PauliString> generators);
    void build_decoder();

    BlockMap blocks_;
    std::vector<PauliString> generators_;
    PauliString logical_x_;
    PauliString logical_y_;
    PauliString logical_z_;
    std::shared_ptr<const std::vector<Recovery>> table_;  // indexed by syndrome mask
};

/// (|000> +- |111>)^(x)3 / (2 sqrt 2) with the sign set by `bit`.
StateVector logical_basis(int bit, const ShorCode &code = ShorCode::standard());
/// alpha|0_L> + beta|1_L>; requires |alpha|^2 + |beta|^2 = 1 within tol::kNorm.
StateVector encode_logical(Complex alpha, Complex beta, const ShorCode &code = ShorCode::standard());

/// prod_g (I + g)/2 expanded into its 256 Pauli terms (coefficients 1/256).
PauliSum code_space_projector(const ShorCode &code = ShorCode::standard());
/// Same projector applied as 8 sequential (I+g)/2 steps on the 9 qubits at
/// `offset` of a larger register.
ProjectionResult project_code_space(const StateVector &state, const ShorCode &code = ShorCode::standard(), int offset = 0);

struct SyndromeResult {
    Syndrome syndrome;
    StateVector post_state;
};

/// Measures the 8 generators in order on the code block at `offset`.
SyndromeResult extract_syndrome(const StateVector &state, Rng &rng, const ShorCode &code = ShorCode::standard(), int offset = 0);

Recovery decode_correction(const Syndrome &syndrome, const ShorCode &code = ShorCode::standard());

/// <P_L> (bare) or <Pi P_L Pi> (restricted) on the code block at `offset`.
double logical_expectation(const StateVector &state, LogicalAxis which, bool code_space_restricted,
                           const ShorCode &code = ShorCode::standard(), int offset = 0);

struct CheckReport {
    bool passed = true;
    std::vector<std::string> failures;
};

/// For every weight-1 Pauli error on a random logical state: the syndrome must
/// be nontrivial, projection must reject it, and decoding must restore the state.
CheckReport check_distance_three(const ShorCode &code, Rng &rng);

}  // namespace lqt

#endif
