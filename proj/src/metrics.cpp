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

#include "lqt/metrics.hpp"

#include <gsl/gsl_statistics_double.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lqt/errors.hpp"
#include "lqt/protocol.hpp"
#include "lqt/stats.hpp"
#include "lqt/tolerances.hpp"

namespace lqt {

namespace {

using std::numbers::sqrt2;

void require_projection(double projection) {
    if (!(projection >= tol::kDegenerateProjection)) {
        throw DegenerateProjectionError("code-space projection probability " + std::to_string(projection) +
                                        " is too small to renormalize");
    }
}

std::int64_t poisson_draw(std::int64_t observed, Rng &rng) {
    if (observed <= 0) {
        return 0;
    }
    std::poisson_distribution<std::int64_t> d(static_cast<double>(observed));
    return d(rng);
}

double sample_stddev(std::span<const double> x) {
    return gsl_stats_sd(x.data(), 1, x.size());
}

}  // namespace

double resource_fidelity(const FidelityTerms &terms, bool corrected) {
    double sum = 0.25 * (terms.identity + terms.xx - terms.yy + terms.zz);
    if (!corrected) {
        return sum;
    }
    require_projection(terms.identity);
    return sum / terms.identity;
}

Correlators correlators_from_paulis(double zx, double xx, double zz, double xz) {
    return {(zx + xx) / sqrt2, (zx - xx) / sqrt2, (zz + xz) / sqrt2, (zz - xz) / sqrt2};
}

double chsh(const Correlators &c, bool corrected, double projection) {
    double s = c.c1 - c.c2 + c.c3 + c.c4;
    if (!corrected) {
        return s;
    }
    require_projection(projection);
    return s / projection;
}

PauliString resource_correlator(Pauli physical, LogicalAxis logical, const ShorCode &code) {
    return PauliString::single(kResourceQubits, kPhysicalQubit, physical) *
           code.logical(logical).embed(kResourceQubits, kCodeOffset);
}

ResourceSample measure_resource(const StateVector &resource, const ShorCode &code) {
    if (resource.num_qubits() != kResourceQubits) {
        throw DomainError("resource state must have 10 qubits");
    }
    const PauliString xx = resource_correlator(Pauli::X, LogicalAxis::X, code);
    const PauliString yy = resource_correlator(Pauli::Y, LogicalAxis::Y, code);
    const PauliString zz = resource_correlator(Pauli::Z, LogicalAxis::Z, code);
    const PauliString zx = resource_correlator(Pauli::Z, LogicalAxis::X, code);
    const PauliString xz = resource_correlator(Pauli::X, LogicalAxis::Z, code);

    ResourceSample s;
    s.bare = {1.0, expectation(resource, xx), expectation(resource, yy), expectation(resource, zz)};
    s.bare_correlators = correlators_from_paulis(expectation(resource, zx), s.bare.xx, s.bare.zz,
                                                 expectation(resource, xz));
    auto proj = project_code_space(resource, code, kCodeOffset);
    s.projection = proj.probability;
    if (proj.state) {
        const StateVector &post = *proj.state;
        const double p = proj.probability;
        s.sandwiched = {p, p * expectation(post, xx), p * expectation(post, yy), p * expectation(post, zz)};
        s.sandwiched_correlators = correlators_from_paulis(p * expectation(post, zx), s.sandwiched.xx,
                                                           s.sandwiched.zz, p * expectation(post, xz));
    } else {
        s.sandwiched = {proj.probability, 0, 0, 0};
    }
    return s;
}

TeleportFidelity teleport_fidelity(std::span<const WeightedState> ensemble, Complex alpha, Complex beta,
                                   bool corrected, const ShorCode &code) {
    const StateVector target = encode_logical(alpha, beta, code);
    double total = 0;
    double accepted = 0;
    double f_all = 0;
    double f_accepted = 0;
    for (const auto &member : ensemble) {
        if (member.state.num_qubits() != ShorCode::kNumQubits) {
            throw DomainError("teleportation output must have 9 qubits");
        }
        if (member.weight < 0) {
            throw DomainError("ensemble weights must be nonnegative");
        }
        auto proj = project_code_space(member.state, code);
        double f = fidelity(member.state, target);
        total += member.weight;
        accepted += member.weight * proj.probability;
        f_all += member.weight * f;
        if (proj.state) {
            f_accepted += member.weight * proj.probability * fidelity(*proj.state, target);
        }
    }
    if (!(total > 0)) {
        throw DomainError("teleportation ensemble has no weight");
    }
    double p_cs = accepted / total;
    if (!corrected) {
        return {f_all / total, p_cs};
    }
    if (!(p_cs >= tol::kDegenerateProjection)) {
        throw DegenerateProjectionError("no ensemble member survives the code-space projection");
    }
    return {f_accepted / accepted, p_cs};
}

double classical_limit() {
    return 2.0 / 3.0;
}

void CountTable::add(std::string label, std::int64_t plus, std::int64_t minus) {
    if (plus < 0 || minus < 0) {
        throw DomainError("counts must be nonnegative");
    }
    labels.push_back(std::move(label));
    counts.push_back({plus, minus});
}

double CountTable::expectation(std::size_t setting) const {
    const auto &c = counts.at(setting);
    const std::int64_t n = c[0] + c[1];
    if (n == 0) {
        return 0.0;
    }
    return static_cast<double>(c[0] - c[1]) / static_cast<double>(n);
}

CountTable sample_counts(std::span<const double> expectations, std::span<const std::string> labels,
                         std::int64_t shots, Rng &rng) {
    if (shots < 1) {
        throw DomainError("shots per setting must be at least 1");
    }
    if (labels.size() != expectations.size()) {
        throw DomainError("one label per setting is required");
    }
    CountTable t;
    t.labels.reserve(labels.size());
    t.counts.reserve(labels.size());
    for (std::size_t s = 0; s < expectations.size(); ++s) {
        double p = std::clamp(0.5 * (1.0 + expectations[s]), 0.0, 1.0);
        std::binomial_distribution<std::int64_t> d(shots, p);
        std::int64_t plus = d(rng);
        t.add(labels[s], plus, shots - plus);
    }
    return t;
}

std::vector<double> poisson_resample(const CountTable &counts, std::span<const CountStatistic> derived,
                                     std::size_t n_resamples, Rng &rng) {
    if (n_resamples < 100) {
        throw DomainError("Poisson resampling needs at least 100 resamples");
    }
    std::vector<std::vector<double>> values(derived.size(), std::vector<double>(n_resamples));
    CountTable copy = counts;
    for (std::size_t r = 0; r < n_resamples; ++r) {
        for (std::size_t s = 0; s < counts.size(); ++s) {
            copy.counts[s][0] = poisson_draw(counts.counts[s][0], rng);
            copy.counts[s][1] = poisson_draw(counts.counts[s][1], rng);
        }
        for (std::size_t k = 0; k < derived.size(); ++k) {
            values[k][r] = derived[k](copy);
        }
    }
    std::vector<double> out;
    out.reserve(derived.size());
    for (const auto &v : values) {
        out.push_back(sample_stddev(v));
    }
    return out;
}

double poisson_resample(const CountTable &counts, const CountStatistic &derived, std::size_t n_resamples,
                        Rng &rng) {
    CountStatistic one[1] = {derived};
    return poisson_resample(counts, one, n_resamples, rng)[0];
}

Estimate Influence::estimate() const {
    const std::size_t n = psi.size();
    if (n < 2) {
        return {value, 0.0};
    }
    double ss = 0;
    for (double v : psi) {
        ss += v * v;
    }
    return {value, std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n))};
}

Influence sample_mean(std::span<const double> x) {
    if (x.empty()) {
        throw DomainError("mean of an empty sample");
    }
    Influence out;
    for (double v : x) {
        out.value += v;
    }
    out.value /= static_cast<double>(x.size());
    out.psi.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out.psi[i] = x[i] - out.value;
    }
    return out;
}

Influence sample_ratio(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.empty()) {
        throw DomainError("ratio estimator needs equal nonempty samples");
    }
    double ma = 0;
    double mb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(a.size());
    mb /= static_cast<double>(b.size());
    if (!(std::abs(mb) >= tol::kDegenerateProjection)) {
        throw DegenerateProjectionError("ratio estimator denominator vanishes");
    }
    Influence out;
    out.value = ma / mb;
    out.psi.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out.psi[i] = (a[i] - out.value * b[i]) / mb;
    }
    return out;
}

Influence linear_combination(std::span<const Influence> terms, std::span<const double> weights) {
    if (terms.size() != weights.size() || terms.empty()) {
        throw DomainError("one weight per term is required");
    }
    Influence out;
    out.psi.assign(terms[0].psi.size(), 0.0);
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].psi.size() != out.psi.size()) {
            throw DomainError("terms must share the sample count");
        }
        out.value += weights[k] * terms[k].value;
        for (std::size_t i = 0; i < out.psi.size(); ++i) {
            out.psi[i] += weights[k] * terms[k].psi[i];
        }
    }
    return out;
}

}  // namespace lqt
