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


#include "contextuality.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace dmbqc {

namespace {

std::vector<size_t> support_of(const BitVec& y) {
    std::vector<size_t> out;
    y.for_each_one([&](size_t j) { out.push_back(j); });
    return out;
}

bool better(const BitVec& a, const BitVec& b) {
    size_t wa = a.weight();
    size_t wb = b.weight();
    if (wa != wb) {
        return wa < wb;
    }
    return support_of(a) < support_of(b);
}

// Row limit for attempting a null-space search at all.
constexpr size_t kMaxMinimizeRows = 4096;

}  // namespace

HVMSystem build_system(size_t n, std::vector<HVMContext> contexts) {
    HVMSystem sys;
    sys.n = n;
    sys.coefficients = BinMatrix(2 * n, std::vector<BitVec>{});
    sys.parities = BitVec(contexts.size());
    for (size_t k = 0; k < contexts.size(); k++) {
        const HVMContext& ctx = contexts[k];
        if (ctx.z.size() != n || ctx.q.size() != n) {
            throw std::invalid_argument("context " + std::to_string(k) + " does not have length " +
                                        std::to_string(n));
        }
        BitVec row(2 * n);
        ctx.z.for_each_one([&](size_t j) {
            row.set(j, true);
            if (ctx.q.get(j)) {
                row.set(n + j, true);
            }
        });
        sys.coefficients.push_row(std::move(row));
        sys.parities.set(k, ctx.o);
    }
    sys.contexts = std::move(contexts);
    return sys;
}

ContextualityVerdict decide(const HVMSystem& system) {
    ContextualityVerdict v;
    Gf2Result res = solve_gf2(system.coefficients, system.parities);
    if (const auto* sol = std::get_if<Gf2Solution>(&res)) {
        v.kind = ContextualityVerdict::Kind::kHVMExists;
        v.assignment = sol->x.empty() ? BitVec(2 * system.n) : sol->x;
        return v;
    }
    const BitVec base = std::get<Gf2Infeasible>(res).certificate;
    BitVec best = base;
    v.kind = ContextualityVerdict::Kind::kContextual;
    if (system.rows() <= kMaxMinimizeRows) {
        std::vector<BitVec> null = left_null_space(system.coefficients);
        if (null.size() <= kMaxMinimizeDim) {
            // Certificates form the coset base + {y in null space : y.b = 0}.
            BinMatrix gens(system.rows(), null);
            for_each_in_span(gens, [&](const BitVec& y) {
                BitVec cand = base ^ y;
                if (cand.dot(system.parities) && better(cand, best)) {
                    best = cand;
                }
            });
            v.minimized = true;
        }
    }
    v.witness = support_of(best);
    if (!witness_is_contradiction(system, v.witness)) {
        throw std::logic_error("contextuality witness failed re-verification");
    }
    return v;
}

bool assignment_satisfies(const HVMSystem& system, const BitVec& assignment) {
    if (assignment.size() != 2 * system.n) {
        return false;
    }
    for (size_t k = 0; k < system.rows(); k++) {
        if (system.coefficients.row(k).dot(assignment) != system.parities.get(k)) {
            return false;
        }
    }
    return true;
}

bool witness_is_contradiction(const HVMSystem& system, const std::vector<size_t>& witness) {
    BitVec acc(2 * system.n);
    bool parity = false;
    for (size_t k : witness) {
        if (k >= system.rows()) {
            return false;
        }
        acc ^= system.coefficients.row(k);
        parity ^= system.parities.get(k);
    }
    return acc.is_zero() && parity;
}

InstanceAnalysis analyze_instance(const MBQCInstance& inst) {
    InstanceAnalysis out;
    out.table = truth_table(inst);
    std::vector<HVMContext> contexts;
    std::unordered_set<BitVec, BitVecHash> seen;
    const size_t n = inst.n();
    for (uint64_t v = 0; v < out.table.size(); v++) {
        BitVec q = inst.basis_map.multiply(BitVec::from_uint(v, inst.n_in()));
        for (size_t r = 0; r < inst.n_out(); r++) {
            const BitVec& z = inst.output_map.row(r);
            // A context is fixed by z and q restricted to z.
            BitVec qz = q & z;
            BitVec key(2 * n);
            z.for_each_one([&](size_t j) { key.set(j, true); });
            qz.for_each_one([&](size_t j) { key.set(n + j, true); });
            if (!seen.insert(key).second) {
                continue;
            }
            contexts.push_back({z, qz, out.table.at(v).get(r)});
        }
    }
    out.system = build_system(n, std::move(contexts));
    out.verdict = decide(out.system);
    return out;
}

std::vector<HVMContext> mermin_witness(const HVMSystem& system, const ContextualityVerdict& verdict) {
    if (!verdict.contextual()) {
        throw std::invalid_argument("mermin_witness needs a contextual verdict");
    }
    std::vector<HVMContext> out;
    for (size_t k : verdict.witness) {
        out.push_back(system.contexts.at(k));
    }
    return out;
}

std::string context_label(const HVMContext& ctx) {
    std::string s;
    for (size_t j = 0; j < ctx.z.size(); j++) {
        s += !ctx.z.get(j) ? 'I' : (ctx.q.get(j) ? 'L' : 'R');
    }
    return s;
}

}  // namespace dmbqc
