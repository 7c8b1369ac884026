// Copyright 2026 The dmbqc Authors
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

#include "phase_state.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "reed_muller.h"

namespace dmbqc {

namespace {

int64_t mod_positive(int64_t v, int64_t m) {
    int64_t r = v % m;
    return r < 0 ? r + m : r;
}

}  // namespace

PhaseCosetState::PhaseCosetState(BinMatrix generators) : PhaseCosetState(std::move(generators), {}, BitVec()) {}

PhaseCosetState::PhaseCosetState(
    BinMatrix generators, const std::vector<std::pair<size_t, size_t>>& quad_pairs, BitVec lin)
    : generators_(std::move(generators)), lin_(std::move(lin)) {
    size_t n = generators_.cols();
    if (lin_.empty() && n > 0) {
        lin_ = BitVec(n);
    }
    if (lin_.size() != n) {
        throw std::invalid_argument("linear phase vector length does not match qubit count");
    }
    if (generators_.rows() >= 63) {
        throw std::invalid_argument("support dimension too large");
    }
    upper_.assign(n, BitVec(n));
    for (auto [a, b] : quad_pairs) {
        if (a >= n || b >= n) {
            throw std::invalid_argument("quadratic form pair index out of range");
        }
        if (a == b) {
            lin_.flip(a);
            continue;
        }
        if (a > b) {
            std::swap(a, b);
        }
        upper_[a].flip(b);
    }

    // Echelon form; rejects dependent generators.
    for (const auto& row : generators_.row_list()) {
        BitVec cur = row;
        for (size_t p = 0; p < echelon_.size(); p++) {
            if (cur.get(echelon_cols_[p])) {
                cur ^= echelon_[p];
            }
        }
        if (cur.is_zero()) {
            throw std::invalid_argument("support generators are linearly dependent");
        }
        size_t col = cur.first_one();
        for (auto& e : echelon_) {
            if (e.get(col)) {
                e ^= cur;
            }
        }
        echelon_.push_back(std::move(cur));
        echelon_cols_.push_back(col);
    }
}

std::vector<std::pair<size_t, size_t>> PhaseCosetState::quad_pairs() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t a = 0; a < upper_.size(); a++) {
        upper_[a].for_each_one([&](size_t b) { out.emplace_back(a, b); });
    }
    return out;
}

bool PhaseCosetState::has_quadratic_phase() const {
    return std::any_of(upper_.begin(), upper_.end(), [](const BitVec& r) { return !r.is_zero(); });
}

bool PhaseCosetState::quad_form(const BitVec& x) const {
    bool acc = false;
    x.for_each_one([&](size_t a) { acc ^= upper_[a].dot(x); });
    return acc;
}

BitVec PhaseCosetState::polar(const BitVec& z) const {
    BitVec out(n());
    for (size_t a = 0; a < n(); a++) {
        // (U z)_a + (U^T z)_a
        bool v = upper_[a].dot(z);
        if (z.get(a)) {
            upper_[a].for_each_one([&](size_t b) { out.flip(b); });
        }
        if (v) {
            out.flip(a);
        }
    }
    return out;
}

bool PhaseCosetState::contains(const BitVec& x) const {
    if (x.size() != n()) {
        return false;
    }
    BitVec cur = x;
    for (size_t p = 0; p < echelon_.size(); p++) {
        if (cur.get(echelon_cols_[p])) {
            cur ^= echelon_[p];
        }
    }
    return cur.is_zero();
}

AngleSpec::AngleSpec(int denominator_exponent, std::vector<int64_t> nums)
    : D(denominator_exponent), numerators(std::move(nums)) {
    validate();
}

AngleSpec AngleSpec::uniform(size_t n, int denominator_exponent) {
    return AngleSpec(denominator_exponent, std::vector<int64_t>(n, 1));
}

void AngleSpec::validate() const {
    if (D < 1 || D > 40) {
        throw std::invalid_argument("angle denominator exponent must lie in [1, 40], got " + std::to_string(D));
    }
    for (size_t j = 0; j < numerators.size(); j++) {
        if (numerators[j] % 2 == 0) {
            throw std::invalid_argument(
                "angle numerator at site " + std::to_string(j) + " is even (" + std::to_string(numerators[j]) +
                "); only odd numerators give non-Pauli X-Y plane observables");
        }
    }
}

double AngleSpec::angle(size_t j) const {
    return std::numbers::pi * static_cast<double>(numerators[j]) / std::ldexp(1.0, D);
}

uint64_t CyclotomicSum::total() const {
    uint64_t t = 0;
    for (const auto& [e, c] : counts) {
        t += c;
    }
    return t;
}

std::complex<double> CyclotomicSum::value() const {
    std::complex<double> acc = 0;
    for (const auto& [e, c] : counts) {
        double theta = 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(modulus);
        acc += static_cast<double>(c) * std::polar(1.0, theta);
    }
    return acc / static_cast<double>(norm);
}

CyclotomicSum expectation(const PhaseCosetState& state, const AngleSpec& angles, const CorrelationContext& ctx) {
    size_t n = state.n();
    if (ctx.z.size() != n || ctx.q.size() != n) {
        throw std::invalid_argument(
            "correlation context has length " + std::to_string(ctx.z.size()) + "/" + std::to_string(ctx.q.size()) +
            " but the state has " + std::to_string(n) + " qubits");
    }
    if (angles.numerators.size() != n) {
        throw std::invalid_argument("angle specification covers " + std::to_string(angles.numerators.size()) +
                                    " sites but the state has " + std::to_string(n) + " qubits");
    }
    angles.validate();

    CyclotomicSum out;
    const auto modulus = int64_t{1} << (angles.D + 1);
    const int64_t half = int64_t{1} << angles.D;
    out.modulus = static_cast<uint64_t>(modulus);
    out.norm = uint64_t{1} << state.k();
    if (!state.contains(ctx.z)) {
        return out;
    }

    int64_t base = 0;
    bool uniform = true;
    int64_t a0 = 0;
    bool first = true;
    ctx.z.for_each_one([&](size_t j) {
        int64_t a = mod_positive(angles.numerators[j], modulus);
        base += a;
        if (first) {
            a0 = a;
            first = false;
        } else if (a != a0) {
            uniform = false;
        }
    });
    base = mod_positive(base, modulus);

    const BitVec w = state.polar(ctx.z);
    const bool fixed_phase = state.quad_form(ctx.z) ^ state.lin().dot(ctx.z);
    const auto zw = ctx.z.words();
    const auto qw = ctx.q.words();
    const auto ww = w.words();

    // Per-x exponent: sum_{j in z} a_j (-1)^{x_j + q_j} + 2^D (Q(x) + Q(x + z) + lin.z).
    // Q(x) + Q(x + z) = Q(z) + x.(U + U^T) z.
    std::vector<uint64_t> dense(static_cast<size_t>(modulus <= 4096 ? modulus : 0), 0);
    state.for_each_support([&](const BitVec& x) {
        const auto xw = x.words();
        int64_t flipped = 0;
        uint64_t phase_bits = 0;
        if (uniform) {
            int64_t cnt = 0;
            for (size_t k = 0; k < zw.size(); k++) {
                cnt += std::popcount(zw[k] & (xw[k] ^ qw[k]));
                phase_bits ^= xw[k] & ww[k];
            }
            flipped = cnt * a0;
        } else {
            for (size_t k = 0; k < zw.size(); k++) {
                uint64_t bits = zw[k] & (xw[k] ^ qw[k]);
                while (bits) {
                    size_t j = k * 64 + static_cast<size_t>(std::countr_zero(bits));
                    flipped += mod_positive(angles.numerators[j], modulus);
                    bits &= bits - 1;
                }
                phase_bits ^= xw[k] & ww[k];
            }
        }
        bool phase = fixed_phase ^ static_cast<bool>(std::popcount(phase_bits) & 1);
        int64_t e = mod_positive(base - 2 * (flipped % modulus) + (phase ? half : 0), modulus);
        if (!dense.empty()) {
            dense[static_cast<size_t>(e)]++;
        } else {
            out.counts[static_cast<uint64_t>(e)]++;
        }
    });
    for (size_t e = 0; e < dense.size(); e++) {
        if (dense[e]) {
            out.counts[e] = dense[e];
        }
    }
    return out;
}

CyclotomicSum pauli_x_expectation(const PhaseCosetState& state, const BitVec& z) {
    if (z.size() != state.n()) {
        throw std::invalid_argument("support length does not match qubit count");
    }
    CyclotomicSum out;
    out.modulus = 2;
    out.norm = uint64_t{1} << state.k();
    if (!state.contains(z)) {
        return out;
    }
    const BitVec w = state.polar(z);
    const bool fixed_phase = state.quad_form(z) ^ state.lin().dot(z);
    state.for_each_support([&](const BitVec& x) { out.counts[fixed_phase ^ x.dot(w) ? 1 : 0]++; });
    return out;
}

ExtremalBit extremal_bit(const CyclotomicSum& s) {
    ExtremalBit out;
    if (s.counts.size() != 1 || s.total() != s.norm) {
        return out;
    }
    uint64_t e = s.counts.begin()->first;
    if (e == 0) {
        out.kind = ExtremalBit::Kind::kExtremal;
        out.bit = 0;
    } else if (e * 2 == s.modulus) {
        out.kind = ExtremalBit::Kind::kExtremal;
        out.bit = 1;
    } else {
        out.kind = ExtremalBit::Kind::kNonRealExtremal;
        out.exponent = e;
    }
    return out;
}

const char* kind_name(ExtremalBit::Kind kind) {
    switch (kind) {
        case ExtremalBit::Kind::kExtremal:
            return "Extremal";
        case ExtremalBit::Kind::kNonExtremal:
            return "NonExtremal";
        case ExtremalBit::Kind::kNonRealExtremal:
            return "NonRealExtremal";
    }
    return "?";
}

PhaseCosetState make_rm_state(int r, int m) { return PhaseCosetState(rm_basis(r, m).basis); }

}  // namespace dmbqc
