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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"

namespace dmbqc {
namespace {

using Pairs = std::vector<std::pair<size_t, size_t>>;

// Amplitudes computed directly from the definition, independent of the
// library's dense simulator.
std::vector<oracle::Complex> amplitudes(size_t n, const BinMatrix& gens, const Pairs& quad, const BitVec& lin) {
    std::vector<oracle::Complex> amp(size_t{1} << n, 0.0);
    auto span = enumerate_span(gens);
    double scale = 1.0 / std::sqrt(static_cast<double>(span.size()));
    for (const auto& x : span) {
        int phase = x.dot(lin);
        for (auto [a, b] : quad) {
            phase ^= x.get(a) && x.get(b);
        }
        amp[x.to_uint()] += phase ? -scale : scale;
    }
    return amp;
}

struct RandomState {
    size_t n;
    BinMatrix gens;
    Pairs quad;
    BitVec lin;
};

RandomState random_state(std::mt19937_64& rng, size_t n) {
    RandomState s{n, BinMatrix(n, std::vector<BitVec>{}), {}, BitVec(n)};
    size_t k = rng() % (n + 1);
    for (size_t r = 0; r < k; r++) {
        s.gens.push_row(BitVec::from_uint(rng(), n));
    }
    s.gens = independent_rows(s.gens);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (rng() % 3 == 0) {
                s.quad.emplace_back(a, b);
            }
        }
    }
    s.lin = BitVec::from_uint(rng(), n);
    return s;
}

TEST(PhaseCosetState, PairNormalization) {
    PhaseCosetState s(BinMatrix::identity(3), {{2, 0}, {0, 1}, {0, 1}, {1, 1}}, BitVec(3));
    EXPECT_EQ(s.quad_pairs(), (Pairs{{0, 2}}));
    EXPECT_TRUE(s.lin().get(1));
    EXPECT_TRUE(s.has_quadratic_phase());
}

TEST(PhaseCosetState, RmStateSupport) {
    auto s = make_rm_state(1, 3);
    EXPECT_EQ(s.n(), 8u);
    EXPECT_EQ(s.k(), 4u);
    EXPECT_TRUE(s.contains(BitVec::from_string("01010101")));
    EXPECT_FALSE(s.contains(BitVec::from_string("00000001")));
    EXPECT_FALSE(s.has_quadratic_phase());
}

TEST(Expectation, GhzFourSiteMermin) {
    auto ghz = make_rm_state(0, 2);
    auto angles = AngleSpec::uniform(4, 2);
    auto all = BitVec::ones(4);
    auto e1 = extremal_bit(expectation(ghz, angles, {all, BitVec::from_string("1111")}));
    EXPECT_EQ(e1.kind, ExtremalBit::Kind::kExtremal);
    EXPECT_EQ(e1.bit, 1);
    auto e2 = extremal_bit(expectation(ghz, angles, {all, BitVec::from_string("1100")}));
    EXPECT_EQ(e2.kind, ExtremalBit::Kind::kExtremal);
    EXPECT_EQ(e2.bit, 0);
    auto e3 = extremal_bit(expectation(ghz, angles, {all, BitVec::from_string("1000")}));
    EXPECT_EQ(e3.kind, ExtremalBit::Kind::kNonExtremal);
}

TEST(Expectation, SupportOutsideSpanVanishes) {
    auto ghz = make_rm_state(0, 2);
    auto s = expectation(ghz, AngleSpec::uniform(4, 2), {BitVec::from_string("1100"), BitVec(4)});
    EXPECT_EQ(s.total(), 0u);
    EXPECT_EQ(s.value(), std::complex<double>(0.0, 0.0));
    EXPECT_EQ(extremal_bit(s).kind, ExtremalBit::Kind::kNonExtremal);
}

TEST(Expectation, InputValidation) {
    auto ghz = make_rm_state(0, 2);
    EXPECT_THROW(expectation(ghz, AngleSpec::uniform(3, 2), {BitVec(4), BitVec(4)}), std::invalid_argument);
    EXPECT_THROW(expectation(ghz, AngleSpec::uniform(4, 2), {BitVec(3), BitVec(4)}), std::invalid_argument);
    EXPECT_THROW(AngleSpec(2, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(AngleSpec(0, {1}), std::invalid_argument);
}

TEST(Expectation, MatchesKroneckerSimulation) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng() % 5;
        auto rs = random_state(rng, n);
        PhaseCosetState st(rs.gens, rs.quad, rs.lin);
        auto amps = amplitudes(n, rs.gens, rs.quad, rs.lin);
        int d = 1 + static_cast<int>(rng() % 4);
        std::vector<int64_t> nums(n);
        for (auto& a : nums) {
            a = 2 * static_cast<int64_t>(rng() % 16) - 15;
        }
        AngleSpec angles(d, nums);
        for (int ctx_trial = 0; ctx_trial < 8; ctx_trial++) {
            BitVec z = ctx_trial == 0 && rs.gens.rows() > 0 ? rs.gens.row(0) : BitVec::from_uint(rng(), n);
            BitVec q = BitVec::from_uint(rng(), n);
            std::vector<oracle::Matrix> ops;
            for (size_t j = 0; j < n; j++) {
                ops.push_back(z.get(j) ? oracle::xy_observable(angles.angle(j), q.get(j)) : oracle::identity2());
            }
            auto want = oracle::kron_expectation(amps, n, ops);
            auto got = expectation(st, angles, {z, q});
            EXPECT_NEAR(std::abs(got.value() - want), 0.0, 1e-9);
            EXPECT_EQ(got.total(), st.contains(z) ? got.norm : 0u);
        }
    }
}

TEST(PauliX, MatchesKroneckerAndGroupProperty) {
    std::mt19937_64 rng(29);
    oracle::Matrix x = {{0, 1}, {1, 0}};
    for (int trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng() % 5;
        auto rs = random_state(rng, n);
        PhaseCosetState st(rs.gens, rs.quad, rs.lin);
        auto amps = amplitudes(n, rs.gens, rs.quad, rs.lin);
        std::vector<BitVec> stabilizing;
        for (uint64_t zv = 0; zv < (uint64_t{1} << n); zv++) {
            auto z = BitVec::from_uint(zv, n);
            std::vector<oracle::Matrix> ops;
            for (size_t j = 0; j < n; j++) {
                ops.push_back(z.get(j) ? x : oracle::identity2());
            }
            auto got = pauli_x_expectation(st, z);
            EXPECT_NEAR(std::abs(got.value() - oracle::kron_expectation(amps, n, ops)), 0.0, 1e-9);
            if (extremal_bit(got).is_extremal()) {
                stabilizing.push_back(z);
            }
        }
        // Extremal X-strings form a group with multiplicative signs.
        for (const auto& a : stabilizing) {
            for (const auto& b : stabilizing) {
                auto ea = extremal_bit(pauli_x_expectation(st, a));
                auto eb = extremal_bit(pauli_x_expectation(st, b));
                auto eab = extremal_bit(pauli_x_expectation(st, a ^ b));
                ASSERT_TRUE(eab.is_extremal());
                EXPECT_EQ(eab.bit, ea.bit ^ eb.bit);
            }
        }
    }
}

TEST(ExtremalBit, Classification) {
    CyclotomicSum s;
    s.modulus = 8;
    s.norm = 4;
    s.counts = {{0, 4}};
    EXPECT_EQ(extremal_bit(s).kind, ExtremalBit::Kind::kExtremal);
    EXPECT_EQ(extremal_bit(s).bit, 0);
    s.counts = {{4, 4}};
    EXPECT_EQ(extremal_bit(s).bit, 1);
    s.counts = {{2, 4}};
    EXPECT_EQ(extremal_bit(s).kind, ExtremalBit::Kind::kNonRealExtremal);
    EXPECT_EQ(extremal_bit(s).exponent, 2u);
    s.counts = {{0, 3}, {4, 1}};
    EXPECT_EQ(extremal_bit(s).kind, ExtremalBit::Kind::kNonExtremal);
    EXPECT_NEAR(s.value().real(), 0.5, 1e-12);
    EXPECT_STREQ(kind_name(ExtremalBit::Kind::kNonRealExtremal), "NonRealExtremal");
}

// For the GHZ resource every full-support context with even |q| evaluates to
// the sign (-1)^{|q|/2} of cos(pi |q| / 2 - pi), checked on all 2^4 choices.
TEST(Expectation, GhzAllBasisChoices) {
    auto ghz = make_rm_state(0, 2);
    auto angles = AngleSpec::uniform(4, 2);
    for (uint64_t qv = 0; qv < 16; qv++) {
        auto q = BitVec::from_uint(qv, 4);
        auto e = extremal_bit(expectation(ghz, angles, {BitVec::ones(4), q}));
        double phase = std::numbers::pi / 4 * (4.0 - 2.0 * static_cast<double>(q.weight()));
        double want = std::cos(phase);
        if (q.weight() % 2 == 0) {
            ASSERT_TRUE(e.is_extremal());
            EXPECT_EQ(e.bit == 1 ? -1.0 : 1.0, std::round(want));
        } else {
            EXPECT_FALSE(e.is_extremal());
        }
    }
}

}  // namespace
}  // namespace dmbqc
