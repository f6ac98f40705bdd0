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

#include "lqt/pauli.hpp"

#include <bit>
#include <cmath>

#include "lqt/errors.hpp"

namespace lqt {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_size(int n) {
    if (n < 0 || n > kMaxQubits) {
        throw DomainError("Pauli string size " + std::to_string(n) + " outside 0.." + std::to_string(kMaxQubits));
    }
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I:
            return 'I';
        case Pauli::X:
            return 'X';
        case Pauli::Y:
            return 'Y';
        case Pauli::Z:
            return 'Z';
    }
    return '?';
}

PauliString::PauliString(int num_qubits) : num_qubits_(num_qubits) {
    check_size(num_qubits);
}

PauliString PauliString::from_masks(int num_qubits, std::uint32_t x_mask, std::uint32_t z_mask, int phase) {
    PauliString p(num_qubits);
    std::uint32_t all = num_qubits == 32 ? ~0u : ((1u << num_qubits) - 1u);
    if ((x_mask | z_mask) & ~all) {
        throw DomainError("Pauli masks exceed register size");
    }
    p.x_ = x_mask;
    p.z_ = z_mask;
    p.phase_ = ((phase % 4) + 4) % 4;
    return p;
}

PauliString PauliString::single(int num_qubits, int qubit, Pauli letter) {
    PauliString p(num_qubits);
    p.set_letter(qubit, letter);
    return p;
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase = 2;
        }
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        ++pos;
    }
    std::string_view letters = text.substr(pos);
    PauliString p(static_cast<int>(letters.size()));
    for (std::size_t q = 0; q < letters.size(); ++q) {
        switch (letters[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set_letter(static_cast<int>(q), Pauli::X);
                break;
            case 'Y':
                p.set_letter(static_cast<int>(q), Pauli::Y);
                break;
            case 'Z':
                p.set_letter(static_cast<int>(q), Pauli::Z);
                break;
            default:
                throw DomainError("bad Pauli letter '" + std::string(1, letters[q]) + "' in \"" + std::string(text) + "\"");
        }
    }
    p.phase_ = phase % 4;
    return p;
}

Complex PauliString::phase() const {
    return kIPowers[phase_];
}

Pauli PauliString::letter(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw DomainError("qubit index out of range");
    }
    bool x = (x_ >> qubit) & 1u;
    bool z = (z_ >> qubit) & 1u;
    if (x && z) {
        return Pauli::Y;
    }
    if (x) {
        return Pauli::X;
    }
    return z ? Pauli::Z : Pauli::I;
}

void PauliString::set_letter(int qubit, Pauli letter) {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw DomainError("qubit index out of range");
    }
    std::uint32_t bit = 1u << qubit;
    x_ &= ~bit;
    z_ &= ~bit;
    if (letter == Pauli::X || letter == Pauli::Y) {
        x_ |= bit;
    }
    if (letter == Pauli::Z || letter == Pauli::Y) {
        z_ |= bit;
    }
}

int PauliString::weight() const {
    return std::popcount(x_ | z_);
}

int PauliString::action_exponent() const {
    return (phase_ + std::popcount(x_ & z_)) & 3;
}

bool PauliString::commutes_with(const PauliString &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw DomainError("Pauli strings of different sizes");
    }
    return ((std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_)) & 1) == 0;
}

PauliString PauliString::operator*(const PauliString &rhs) const {
    PauliString out = *this;
    out *= rhs;
    return out;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits_ != num_qubits_) {
        throw DomainError("Pauli strings of different sizes");
    }
    // i^a1 X^x1 Z^z1 i^a2 X^x2 Z^z2 = i^(a1+a2+2|z1&x2|) X^(x1^x2) Z^(z1^z2)
    int a = action_exponent() + rhs.action_exponent() + 2 * std::popcount(z_ & rhs.x_);
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    phase_ = ((a - std::popcount(x_ & z_)) % 4 + 4) % 4;
    return *this;
}

PauliString PauliString::operator-() const {
    return times_i(2);
}

PauliString PauliString::times_i(int k) const {
    PauliString out = *this;
    out.phase_ = ((phase_ + k) % 4 + 4) % 4;
    return out;
}

PauliString PauliString::unsigned_copy() const {
    PauliString out = *this;
    out.phase_ = 0;
    return out;
}

PauliString PauliString::embed(int total_qubits, int offset) const {
    if (offset < 0 || offset + num_qubits_ > total_qubits) {
        throw DomainError("embedding does not fit the target register");
    }
    return from_masks(total_qubits, x_ << offset, z_ << offset, phase_);
}

std::string PauliString::str() const {
    static const char *kSigns[4] = {"+", "+i", "-", "-i"};
    std::string s = kSigns[phase_];
    for (int q = 0; q < num_qubits_; ++q) {
        s += pauli_char(letter(q));
    }
    return s;
}

namespace {

// Multiplies by i^e (e in 0..3) and an extra sign without a general complex product.
inline Complex rotate(Complex v, int e, bool negate) {
    double re = v.real();
    double im = v.imag();
    switch (e) {
        case 1:
            re = -v.imag();
            im = v.real();
            break;
        case 2:
            re = -re;
            im = -im;
            break;
        case 3:
            re = v.imag();
            im = -v.real();
            break;
        default:
            break;
    }
    return negate ? Complex(-re, -im) : Complex(re, im);
}

inline bool odd(std::size_t j, std::uint32_t z) {
    return std::popcount(static_cast<std::uint32_t>(j) & z) & 1;
}

}  // namespace

void PauliString::apply(std::span<Complex> amplitudes) const {
    if (amplitudes.size() != (std::size_t{1} << num_qubits_)) {
        throw DomainError("Pauli string size does not match state");
    }
    const int e = action_exponent();
    const std::size_t n = amplitudes.size();
    if (x_ == 0) {
        for (std::size_t j = 0; j < n; ++j) {
            amplitudes[j] = rotate(amplitudes[j], e, odd(j, z_));
        }
        return;
    }
    // Visit each pair {j, j^x} once, from its member with the lowest flipped bit clear.
    const std::uint32_t low = x_ & (~x_ + 1u);
    for (std::size_t j = 0; j < n; ++j) {
        if (j & low) {
            continue;
        }
        std::size_t k = j ^ x_;
        Complex aj = amplitudes[j];
        Complex ak = amplitudes[k];
        // new[k] = ph * sign(j) * old[j]; new[j] = ph * sign(k) * old[k]
        amplitudes[k] = rotate(aj, e, odd(j, z_));
        amplitudes[j] = rotate(ak, e, odd(k, z_));
    }
}

void PauliString::project_plus(std::span<Complex> amplitudes) const {
    if (amplitudes.size() != (std::size_t{1} << num_qubits_)) {
        throw DomainError("Pauli string size does not match state");
    }
    if (!is_hermitian()) {
        throw DomainError("projector needs a Hermitian Pauli string");
    }
    const int e = action_exponent();
    const std::size_t n = amplitudes.size();
    if (x_ == 0) {
        // Diagonal: keep the +1 eigen-components, drop the rest.
        // A Hermitian diagonal string has e = 0 or 2.
        const bool flip = e == 2;
        for (std::size_t j = 0; j < n; ++j) {
            if (odd(j, z_) != flip) {
                amplitudes[j] = 0.0;
            }
        }
        return;
    }
    const std::uint32_t low = x_ & (~x_ + 1u);
    if (z_ == 0 && e == 0) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j & low) {
                continue;
            }
            Complex &aj = amplitudes[j];
            Complex &ak = amplitudes[j ^ x_];
            if (aj == 0.0 && ak == 0.0) {
                continue;
            }
            const Complex mean = 0.5 * (aj + ak);
            aj = mean;
            ak = mean;
        }
        return;
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (j & low) {
            continue;
        }
        std::size_t k = j ^ x_;
        Complex aj = amplitudes[j];
        Complex ak = amplitudes[k];
        if (aj == 0.0 && ak == 0.0) {
            continue;
        }
        // (P v)[j] = ph(k) v[k] and (P v)[k] = ph(j) v[j].
        amplitudes[j] = 0.5 * (aj + rotate(ak, e, odd(k, z_)));
        amplitudes[k] = 0.5 * (ak + rotate(aj, e, odd(j, z_)));
    }
}

Complex PauliString::matrix_element(std::span<const Complex> a, std::span<const Complex> b) const {
    const std::size_t n = std::size_t{1} << num_qubits_;
    if (a.size() != n || b.size() != n) {
        throw DomainError("Pauli string size does not match state");
    }
    double re_pos = 0, im_pos = 0, re_neg = 0, im_neg = 0;
    for (std::size_t j = 0; j < n; ++j) {
        // Noisy code states are sparse, so skipping zeros pays off.
        if (b[j] == 0.0) {
            continue;
        }
        Complex t = std::conj(a[j ^ x_]) * b[j];
        if (std::popcount(static_cast<std::uint32_t>(j) & z_) & 1) {
            re_neg += t.real();
            im_neg += t.imag();
        } else {
            re_pos += t.real();
            im_pos += t.imag();
        }
    }
    return kIPowers[action_exponent()] * Complex(re_pos - re_neg, im_pos - im_neg);
}

Complex PauliString::expectation(std::span<const Complex> amplitudes) const {
    return matrix_element(amplitudes, amplitudes);
}

std::vector<Complex> PauliString::dense() const {
    if (num_qubits_ > 10) {
        throw DomainError("dense matrices are limited to 10 qubits");
    }
    const std::size_t n = std::size_t{1} << num_qubits_;
    std::vector<Complex> m(n * n);
    const Complex ph = kIPowers[action_exponent()];
    for (std::size_t j = 0; j < n; ++j) {
        double s = (std::popcount(static_cast<std::uint32_t>(j) & z_) & 1) ? -1.0 : 1.0;
        m[(j ^ x_) * n + j] = s * ph;
    }
    return m;
}

void PauliSum::add(double coefficient, PauliString op) {
    if (op.num_qubits() != num_qubits_) {
        throw DomainError("Pauli sum term has the wrong register size");
    }
    terms_.push_back({coefficient, std::move(op)});
}

std::vector<Complex> PauliSum::apply(std::span<const Complex> amplitudes) const {
    std::vector<Complex> out(amplitudes.size());
    std::vector<Complex> scratch(amplitudes.size());
    for (const auto &term : terms_) {
        std::copy(amplitudes.begin(), amplitudes.end(), scratch.begin());
        term.op.apply(scratch);
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] += term.coefficient * scratch[j];
        }
    }
    return out;
}

std::vector<Complex> PauliSum::dense() const {
    if (num_qubits_ > 10) {
        throw DomainError("dense matrices are limited to 10 qubits");
    }
    const std::size_t n = std::size_t{1} << num_qubits_;
    std::vector<Complex> m(n * n);
    for (const auto &term : terms_) {
        const Complex ph = term.op.phase() * std::pow(Complex(0, 1), std::popcount(term.op.x_mask() & term.op.z_mask()));
        for (std::size_t j = 0; j < n; ++j) {
            double s = (std::popcount(static_cast<std::uint32_t>(j) & term.op.z_mask()) & 1) ? -1.0 : 1.0;
            m[(j ^ term.op.x_mask()) * n + j] += term.coefficient * s * ph;
        }
    }
    return m;
}

bool PauliSum::is_idempotent(double tol) const {
    const std::size_t n = std::size_t{1} << num_qubits_;
    std::vector<Complex> m = dense();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Complex acc = 0;
            for (std::size_t k = 0; k < n; ++k) {
                acc += m[r * n + k] * m[k * n + c];
            }
            if (std::abs(acc - m[r * n + c]) > tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace lqt
