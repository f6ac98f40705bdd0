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

#ifndef LQT_PAULI_HPP
#define LQT_PAULI_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lqt {

using Complex = std::complex<double>;

/// Hard cap on register size for every dense object in the library.
inline constexpr int kMaxQubits = 20;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);

/// Signed tensor product of single-qubit Paulis, stored in symplectic form.
///
/// The operator is `i^phase * L_0 (x) L_1 (x) ... (x) L_{n-1}` where each letter
/// acts on the qubit with the same index. Qubit 0 is the least significant bit
/// of a basis-state index throughout the library. In text form the leftmost
/// letter belongs to qubit 0, e.g. "+XIZ" is X on qubit 0 and Z on qubit 2.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(int num_qubits);

    /// Parses "[+|-][i]LLL..." with L in {I,_,X,Y,Z}.
    static PauliString parse(std::string_view text);
    static PauliString single(int num_qubits, int qubit, Pauli letter);
    static PauliString from_masks(int num_qubits, std::uint32_t x_mask, std::uint32_t z_mask, int phase = 0);

    int num_qubits() const { return num_qubits_; }
    std::uint32_t x_mask() const { return x_; }
    std::uint32_t z_mask() const { return z_; }
    /// Exponent k of the global factor i^k, in 0..3.
    int phase_exponent() const { return phase_; }
    Complex phase() const;
    Pauli letter(int qubit) const;
    void set_letter(int qubit, Pauli letter);
    int weight() const;
    bool is_identity() const { return x_ == 0 && z_ == 0; }
    bool is_hermitian() const { return (phase_ & 1) == 0; }

    bool commutes_with(const PauliString &other) const;
    PauliString operator*(const PauliString &rhs) const;
    PauliString &operator*=(const PauliString &rhs);
    PauliString operator-() const;
    /// Multiplies the global phase by i^k.
    PauliString times_i(int k = 1) const;
    /// Same operator with the sign dropped (phase +1).
    PauliString unsigned_copy() const;

    /// Places this string on qubits offset..offset+n-1 of a larger register.
    PauliString embed(int total_qubits, int offset) const;

    bool operator==(const PauliString &other) const = default;
    std::string str() const;

    /// psi <- P psi on a raw amplitude buffer of dimension 2^num_qubits().
    void apply(std::span<Complex> amplitudes) const;
    /// v <- (I + P) v / 2 in place; P must be Hermitian.
    void project_plus(std::span<Complex> amplitudes) const;
    /// <psi|P|psi> on a raw amplitude buffer (no normalization assumed).
    Complex expectation(std::span<const Complex> amplitudes) const;
    /// <a|P|b>.
    Complex matrix_element(std::span<const Complex> a, std::span<const Complex> b) const;
    /// Dense row-major 2^n x 2^n matrix; n <= 10.
    std::vector<Complex> dense() const;

   private:
    int num_qubits_ = 0;
    std::uint32_t x_ = 0;
    std::uint32_t z_ = 0;
    int phase_ = 0;

    // Total exponent a with P = i^a X^x Z^z.
    int action_exponent() const;
};

/// Real linear combination of Pauli strings over a common register.
class PauliSum {
   public:
    struct Term {
        double coefficient;
        PauliString op;
    };

    PauliSum() = default;
    explicit PauliSum(int num_qubits) : num_qubits_(num_qubits) {}

    void add(double coefficient, PauliString op);
    int num_qubits() const { return num_qubits_; }
    const std::vector<Term> &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Returns sum_j c_j P_j psi on a raw amplitude buffer.
    std::vector<Complex> apply(std::span<const Complex> amplitudes) const;
    /// Dense row-major matrix; n <= 10.
    std::vector<Complex> dense() const;
    /// Checks Pi^2 == Pi entrywise within tol via the dense matrix; n <= 10.
    bool is_idempotent(double tol) const;

   private:
    int num_qubits_ = 0;
    std::vector<Term> terms_;
};

}  // namespace lqt

#endif
