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


#include "oracle.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace dmbqc {

namespace {

using Complex = std::complex<double>;

void check_size(size_t n) {
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument("dense simulation supports at most " + std::to_string(kMaxDenseQubits) +
                                    " qubits, got " + std::to_string(n));
    }
}

uint64_t index_of(const BitVec& x) {
    uint64_t v = 0;
    x.for_each_one([&](size_t j) { v |= uint64_t{1} << j; });
    return v;
}

// O|0> = e^{i phi s}|1>, O|1> = e^{-i phi s}|0> with s = (-1)^q.
std::vector<Complex> apply_site(const std::vector<Complex>& psi, size_t j, double phi, bool q) {
    const double sgn = q ? -1.0 : 1.0;
    const Complex up = std::polar(1.0, phi * sgn);
    const Complex down = std::polar(1.0, -phi * sgn);
    const uint64_t bit = uint64_t{1} << j;
    std::vector<Complex> out(psi.size());
    for (uint64_t x = 0; x < psi.size(); x++) {
        if (x & bit) {
            out[x] = up * psi[x ^ bit];
        } else {
            out[x] = down * psi[x ^ bit];
        }
    }
    return out;
}

}  // namespace

double DenseState::norm() const {
    double acc = 0;
    for (const auto& a : amplitudes) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

DenseState dense_state(const PhaseCosetState& s) {
    check_size(s.n());
    DenseState st;
    st.n = s.n();
    st.amplitudes.assign(size_t{1} << s.n(), Complex(0, 0));
    const double amp = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(s.k())));
    for (uint64_t x = 0; x < st.amplitudes.size(); x++) {
        BitVec xv = BitVec::from_uint(x, s.n());
        if (!s.contains(xv)) {
            continue;
        }
        bool sign = s.quad_form(xv) ^ s.lin().dot(xv);
        st.amplitudes[x] = sign ? -amp : amp;
    }
    return st;
}

Complex dense_expectation(const DenseState& st, const AngleSpec& angles, const CorrelationContext& ctx) {
    check_size(st.n);
    if (ctx.z.size() != st.n || ctx.q.size() != st.n || angles.numerators.size() != st.n) {
        throw std::invalid_argument("context or angles do not match the dense state size");
    }
    std::vector<size_t> sites;
    ctx.z.for_each_one([&](size_t j) { sites.push_back(j); });
    const uint64_t flip = index_of(ctx.z);
    std::vector<double> phi(st.n);
    for (size_t j = 0; j < st.n; j++) {
        phi[j] = angles.angle(j);
    }
    // <x + z| prod O_j |x> = prod_j exp(i phi_j (-1)^(x_j + q_j)).
    Complex acc = 0;
    for (uint64_t x = 0; x < st.amplitudes.size(); x++) {
        const Complex a = st.amplitudes[x];
        if (a == Complex(0, 0)) {
            continue;
        }
        double theta = 0;
        for (size_t j : sites) {
            bool flipped = ((x >> j) & 1) != static_cast<uint64_t>(ctx.q.get(j));
            theta += flipped ? -phi[j] : phi[j];
        }
        acc += std::conj(st.amplitudes[x ^ flip]) * std::polar(1.0, theta) * a;
    }
    return acc;
}

std::vector<Sample> sample_run(
    const MBQCInstance& inst, const BitVec& input, uint64_t seed, size_t trials, SiteOrder order) {
    check_size(inst.n());
    inst.validate();
    if (!inst.is_flat()) {
        throw UnsupportedError("sampling requires a zero order map (no feed-forward)");
    }
    if (input.size() != inst.n_in()) {
        throw std::invalid_argument("input length does not match the instance");
    }
    const size_t n = inst.n();
    const BitVec q = inst.basis_map.multiply(input);
    const DenseState base = dense_state(inst.state);

    std::vector<Sample> out;
    for (size_t trial = 0; trial < trials; trial++) {
        std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                          static_cast<uint32_t>(trial), static_cast<uint32_t>(uint64_t{trial} >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        std::vector<Complex> psi = base.amplitudes;
        BitVec s(n);
        for (size_t step = 0; step < n; step++) {
            size_t j = order == SiteOrder::kAscending ? step : n - 1 - step;
            std::vector<Complex> opsi = apply_site(psi, j, inst.angles.angle(j), q.get(j));
            // P(+/-) = (I +/- O) / 2.
            double p0 = 0;
            for (size_t x = 0; x < psi.size(); x++) {
                p0 += std::norm(0.5 * (psi[x] + opsi[x]));
            }
            bool minus = unif(rng) >= p0;
            double norm = std::sqrt(minus ? 1.0 - p0 : p0);
            if (norm <= 0) {
                throw std::logic_error("sampled an outcome of zero probability");
            }
            for (size_t x = 0; x < psi.size(); x++) {
                psi[x] = 0.5 * (minus ? psi[x] - opsi[x] : psi[x] + opsi[x]) / norm;
            }
            s.set(j, minus);
        }
        out.push_back({s, inst.output_map.multiply(s)});
    }
    return out;
}

}  // namespace dmbqc
