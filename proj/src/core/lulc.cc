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


#include "lulc.h"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dmbqc {

namespace {

#include "lulc_data.inc"

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <typename Array>
std::string line(const std::string& key, const Array& values) {
    std::string out = key;
    for (auto v : values) {
        out += " " + std::to_string(static_cast<int>(v));
    }
    return out + "\n";
}

std::string canonical_text() {
    std::string text;
    for (size_t l = 0; l < kSupport.size(); l++) {
        text += line("xi" + std::to_string(l + 1), kSupport[l]);
    }
    text += "quad";
    for (auto [a, b] : kQuadPairs) {
        text += " " + std::to_string(a) + "-" + std::to_string(b);
    }
    text += "\n";
    text += line("e", kAngles);
    text += line("k1", kShift1);
    text += line("k2", kShift2);
    return text;
}

LULCData build_data() {
    if (fnv1a(canonical_text()) != kChecksum) {
        throw std::runtime_error("embedded LU-LC constants fail their checksum");
    }
    LULCData d;
    for (const auto& row : kSupport) {
        d.support.push_back(BitVec::from_bits(row));
    }
    for (auto [a, b] : kQuadPairs) {
        if (a < 1 || b < 1 || a > kLulcQubits || b > kLulcQubits || a == b) {
            throw std::runtime_error("embedded quadratic form has an invalid pair");
        }
        d.quad.emplace_back(a - 1, b - 1);
    }
    d.angles.assign(kAngles.begin(), kAngles.end());
    d.shift1.assign(kShift1.begin(), kShift1.end());
    d.shift2.assign(kShift2.begin(), kShift2.end());
    for (size_t j = 0; j < kLulcQubits; j++) {
        if (d.angles[j] % 2 == 0 || d.shift1[j] % 2 != 0 || d.shift2[j] % 2 != 0) {
            throw std::runtime_error("embedded angle vectors violate their parity constraints");
        }
    }
    BinMatrix gens(kLulcQubits, d.support);
    if (gens.rank() != 6) {
        throw std::runtime_error("embedded support generators are dependent");
    }
    d.plain = PhaseCosetState(gens);
    d.twisted = PhaseCosetState(gens, d.quad, BitVec(kLulcQubits));
    return d;
}

int mod8(int v) { return ((v % 8) + 8) % 8; }

}  // namespace

const LULCData& load_data() {
    static const LULCData data = build_data();
    return data;
}

LUCheck verify_lu_rotation(const std::vector<int>& eps) {
    const LULCData& d = load_data();
    if (eps.size() != kLulcQubits) {
        throw std::invalid_argument("rotation vector must have 35 entries");
    }
    // Phase of U(eps)|x> in units of pi/8, plus the quadratic sign: must not
    // depend on x.
    auto exponent = [&](const BitVec& x) {
        int e = 0;
        for (size_t j = 0; j < kLulcQubits; j++) {
            e += x.get(j) ? -mod8(eps[j]) : mod8(eps[j]);
        }
        e += d.twisted.quad_form(x) ? 8 : 0;
        return ((e % 16) + 16) % 16;
    };
    LUCheck out;
    out.ok = true;
    const int reference = exponent(BitVec(kLulcQubits));
    d.plain.for_each_support([&](const BitVec& x) {
        if (out.ok && exponent(x) != reference) {
            out.ok = false;
            out.violation = x;
        }
    });
    return out;
}

LUCheck verify_lu_family(int a, int b) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
        throw std::invalid_argument("a and b must be bits");
    }
    const LULCData& d = load_data();
    std::vector<int> eps(kLulcQubits);
    for (size_t j = 0; j < kLulcQubits; j++) {
        eps[j] = mod8(d.angles[j] + a * d.shift1[j] + b * d.shift2[j]);
    }
    return verify_lu_rotation(eps);
}

VSplit v_split(int e, int k) {
    if (e < 0 || e >= 8 || k < 0 || k >= 8 || e % 2 == 0 || k % 2 != 0) {
        throw std::invalid_argument("v_split needs odd e and even k in [0, 8), got (" + std::to_string(e) + ", " +
                                    std::to_string(k) + ")");
    }
    VSplit s;
    s.q = (k / 2) % 2;
    s.v = (k * (e + k / 2) / 4) % 2;
    return s;
}

MBQCInstance lulc_and_instance() {
    const LULCData& d = load_data();
    MBQCInstance inst;
    inst.state = d.twisted;
    inst.angles = AngleSpec(2, std::vector<int64_t>(d.angles.begin(), d.angles.end()));
    inst.basis_map = BinMatrix(kLulcQubits, 2);
    for (size_t j = 0; j < kLulcQubits; j++) {
        inst.basis_map.set(j, 0, (d.shift1[j] / 2) % 2 != 0);
        inst.basis_map.set(j, 1, (d.shift2[j] / 2) % 2 != 0);
    }
    inst.output_map = BinMatrix(kLulcQubits, d.support);
    inst.order_map = BinMatrix(kLulcQubits, kLulcQubits);
    return inst;
}

AndProtocolResult and_protocol(int a, int b) {
    if ((a != 0 && a != 1) || (b != 0 && b != 1)) {
        throw std::invalid_argument("a and b must be bits");
    }
    const LULCData& d = load_data();
    MBQCInstance inst = lulc_and_instance();
    BitVec input(2);
    input.set(0, a != 0);
    input.set(1, b != 0);
    RunResult res = run(inst, input);
    for (size_t l = 0; l < res.bits.size(); l++) {
        if (!res.bits[l].is_extremal()) {
            throw DeterminismViolation("AND protocol output " + std::to_string(l) + " is " +
                                           kind_name(res.bits[l].kind),
                                       input, l, res.basis, res.sums[l]);
        }
    }
    AndProtocolResult out;
    out.basis = res.basis;
    out.o = res.output();
    out.sums = res.sums;
    out.eta = BitVec(d.support.size());
    for (size_t l = 0; l < d.support.size(); l++) {
        int parity = 0;
        d.support[l].for_each_one([&](size_t j) {
            parity ^= v_split(d.angles[j], mod8(a * d.shift1[j] + b * d.shift2[j])).v;
        });
        out.eta.set(l, parity != 0);
    }
    return out;
}

bool plain_stabilizer_check() {
    const LULCData& d = load_data();
    for (const auto& xi : d.support) {
        CyclotomicSum s = pauli_x_expectation(d.plain, xi);
        if (s.counts.size() != 1 || s.counts.begin()->first != 0 || s.total() != s.norm) {
            return false;
        }
    }
    return true;
}

}  // namespace dmbqc
