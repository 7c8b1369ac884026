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


#include "rm_family.h"

#include <bit>
#include <random>

#include "phase_state.h"

namespace dmbqc {

namespace {

using Words = std::vector<uint64_t>;

Words to_words(const BitVec& v) { return Words(v.words().begin(), v.words().end()); }

uint64_t weight_and(const Words& a, const Words& b) {
    uint64_t w = 0;
    for (size_t k = 0; k < a.size(); k++) {
        w += static_cast<uint64_t>(std::popcount(a[k] & b[k]));
    }
    return w;
}

uint64_t weight_of(const Words& a) {
    uint64_t w = 0;
    for (uint64_t x : a) {
        w += static_cast<uint64_t>(std::popcount(x));
    }
    return w;
}

bool divisible(uint64_t w, int exponent) {
    if (exponent <= 0) {
        return true;
    }
    if (exponent >= 64) {
        return w == 0;
    }
    return (w & ((uint64_t{1} << exponent) - 1)) == 0;
}

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) {
        return 0;
    }
    long double acc = 1;
    for (uint64_t i = 0; i < k; i++) {
        acc = acc * static_cast<long double>(n - i) / static_cast<long double>(i + 1);
    }
    return acc > 1.8e19L ? UINT64_MAX : static_cast<uint64_t>(acc + 0.5L);
}

uint64_t sat_add(uint64_t a, uint64_t b) { return a > UINT64_MAX - b ? UINT64_MAX : a + b; }
uint64_t sat_mul(uint64_t a, uint64_t b) { return b != 0 && a > UINT64_MAX / b ? UINT64_MAX : a * b; }

// Visits every k-subset of `rows` in lexicographic order together with the
// coordinate-wise product of `base` and the chosen rows. Stops when fn
// returns false; returns false in that case.
class SubsetProducts {
   public:
    SubsetProducts(const std::vector<Words>& rows, size_t k, const Words& base)
        : rows_(rows), k_(k), stack_(k + 1, base), idx_(k) {}

    template <typename Fn>
    bool visit(Fn&& fn) {
        if (k_ > rows_.size()) {
            return true;
        }
        return recurse(0, 0, fn);
    }

   private:
    template <typename Fn>
    bool recurse(size_t depth, size_t start, Fn& fn) {
        if (depth == k_) {
            return fn(idx_, stack_[depth]);
        }
        for (size_t i = start; i + (k_ - depth) <= rows_.size(); i++) {
            idx_[depth] = i;
            const Words& prev = stack_[depth];
            Words& next = stack_[depth + 1];
            bool nonzero = false;
            for (size_t w = 0; w < prev.size(); w++) {
                next[w] = prev[w] & rows_[i][w];
                nonzero = nonzero || next[w] != 0;
            }
            // Every product below a zero product is zero and passes.
            if (!nonzero) {
                continue;
            }
            if (!recurse(depth + 1, i + 1, fn)) {
                return false;
            }
        }
        return true;
    }

    const std::vector<Words>& rows_;
    size_t k_;
    std::vector<Words> stack_;
    std::vector<size_t> idx_;
};

BitVec xor_rows(const BinMatrix& basis, const std::vector<size_t>& idx) {
    BitVec out(basis.cols());
    for (size_t i : idx) {
        out ^= basis.row(i);
    }
    return out;
}

std::vector<Words> rows_as_words(const BinMatrix& m) {
    std::vector<Words> out;
    for (const auto& row : m.row_list()) {
        out.push_back(to_words(row));
    }
    return out;
}

std::vector<BitVec> z_candidates(const BinMatrix& output_basis, bool all_z) {
    if (!all_z) {
        return output_basis.row_list();
    }
    std::vector<BitVec> out;
    for_each_in_span(output_basis, [&](const BitVec& v) {
        if (!v.is_zero()) {
            out.push_back(v);
        }
    });
    return out;
}

void check_counterexample(const CounterExample& ce, int chi) {
    BitVec cz = ce.c & ce.z;
    uint64_t w = ce.kind == CounterExample::Kind::kLinear ? cz.weight() : (cz & ce.q).weight();
    int e = ce.kind == CounterExample::Kind::kLinear ? chi : chi - 1;
    if (w != ce.weight || divisible(w, e)) {
        throw std::logic_error("determinism counterexample failed re-verification");
    }
}

DeterminismVerdict expansion_method(const FamilyParams& p, const DeterminismOptions& options) {
    RMCode code_r = rm_basis(p.r, p.m);
    RMCode code_t = rm_basis(p.t, p.m);
    std::vector<BitVec> zs = z_candidates(code_r.basis, options.all_z);
    const size_t dr = code_r.dim();
    const size_t dt = code_t.dim();

    uint64_t estimate = 0;
    for (int i = 1; i <= p.chi; i++) {
        estimate = sat_add(estimate, binomial(dr, static_cast<uint64_t>(i)));
    }
    for (int s = 2; s <= p.chi; s++) {
        for (int i = 1; i < s; i++) {
            estimate = sat_add(estimate, sat_mul(binomial(dr, static_cast<uint64_t>(i)),
                                                 binomial(dt, static_cast<uint64_t>(s - i))));
        }
    }
    estimate = sat_mul(estimate, zs.size());
    if (estimate > options.budget) {
        throw BudgetExceeded("determinism check for " + p.str() + " needs about " + std::to_string(estimate) +
                             " congruences, above the budget " + std::to_string(options.budget));
    }

    const std::vector<Words> a_rows = rows_as_words(code_r.basis);
    const std::vector<Words> b_rows = rows_as_words(code_t.basis);
    DeterminismVerdict verdict;
    verdict.deterministic = true;

    for (const BitVec& z : zs) {
        const Words zw = to_words(z);
        // Linear part: weight(a_I z) == 0 mod 2^(chi - |I| + 1).
        for (int i = 1; i <= p.chi && verdict.deterministic; i++) {
            int e = p.chi - i + 1;
            SubsetProducts(a_rows, static_cast<size_t>(i), zw).visit([&](const std::vector<size_t>& idx, const Words& prod) {
                verdict.checks++;
                if (divisible(weight_of(prod), e)) {
                    return true;
                }
                CounterExample ce;
                ce.kind = CounterExample::Kind::kLinear;
                ce.c = xor_rows(code_r.basis, idx);
                ce.q = BitVec(z.size());
                ce.z = z;
                ce.weight = (ce.c & z).weight();
                ce.modulus_exponent = p.chi;
                verdict.deterministic = false;
                verdict.counterexample = std::move(ce);
                return false;
            });
        }
        // Bilinear part: weight(a_I b_J z) == 0 mod 2^(chi - |I| - |J| + 1).
        for (int s = 2; s <= p.chi && verdict.deterministic; s++) {
            int e = p.chi - s + 1;
            for (int i = 1; i < s && verdict.deterministic; i++) {
                SubsetProducts(a_rows, static_cast<size_t>(i), zw).visit([&](const std::vector<size_t>& ia, const Words& pa) {
                    return SubsetProducts(b_rows, static_cast<size_t>(s - i), pa)
                        .visit([&](const std::vector<size_t>& jb, const Words& prod) {
                            verdict.checks++;
                            if (divisible(weight_of(prod), e)) {
                                return true;
                            }
                            CounterExample ce;
                            ce.kind = CounterExample::Kind::kBilinear;
                            ce.c = xor_rows(code_r.basis, ia);
                            ce.q = xor_rows(code_t.basis, jb);
                            ce.z = z;
                            ce.weight = (ce.c & ce.q & z).weight();
                            ce.modulus_exponent = p.chi - 1;
                            verdict.deterministic = false;
                            verdict.counterexample = std::move(ce);
                            return false;
                        });
                });
            }
        }
        if (!verdict.deterministic) {
            check_counterexample(*verdict.counterexample, p.chi);
            return verdict;
        }
    }
    return verdict;
}

DeterminismVerdict enumeration_method(const FamilyParams& p, const DeterminismOptions& options) {
    RMCode code_r = rm_basis(p.r, p.m);
    RMCode code_t = rm_basis(p.t, p.m);
    std::vector<BitVec> zs = z_candidates(code_r.basis, options.all_z);
    if (code_r.dim() >= 63 || code_t.dim() >= 63) {
        throw BudgetExceeded("code dimension too large to enumerate for " + p.str());
    }
    uint64_t estimate =
        sat_mul(zs.size(), sat_mul(uint64_t{1} << code_r.dim(), sat_add(uint64_t{1} << code_t.dim(), 1)));
    if (estimate > options.budget) {
        throw BudgetExceeded("enumerating " + p.str() + " needs " + std::to_string(estimate) +
                             " congruences, above the budget " + std::to_string(options.budget));
    }
    const std::vector<Words> b_rows = rows_as_words(code_t.basis);
    const uint64_t q_total = uint64_t{1} << code_t.dim();
    const int e_lin = p.chi;
    const int e_bil = p.chi - 1;

    DeterminismVerdict verdict;
    verdict.deterministic = true;
    std::vector<BitVec> cs = enumerate_span(code_r.basis);
    for (const BitVec& z : zs) {
        for (const BitVec& c : cs) {
            const BitVec czv = c & z;
            const Words cz = to_words(czv);
            verdict.checks++;
            uint64_t wl = weight_of(cz);
            if (!divisible(wl, e_lin)) {
                verdict.deterministic = false;
                verdict.counterexample = CounterExample{
                    CounterExample::Kind::kLinear, c, BitVec(z.size()), z, wl, e_lin};
                return verdict;
            }
            if (e_bil <= 0) {
                continue;
            }
            Words q(cz.size(), 0);
            for (uint64_t step = 1; step < q_total; step++) {
                const Words& row = b_rows[static_cast<size_t>(std::countr_zero(step))];
                for (size_t w = 0; w < q.size(); w++) {
                    q[w] ^= row[w];
                }
                verdict.checks++;
                uint64_t wb = weight_and(cz, q);
                if (!divisible(wb, e_bil)) {
                    BitVec qv(z.size());
                    for (size_t w = 0; w < q.size(); w++) {
                        qv.words()[w] = q[w];
                    }
                    verdict.deterministic = false;
                    verdict.counterexample =
                        CounterExample{CounterExample::Kind::kBilinear, c, std::move(qv), z, wb, e_bil};
                    check_counterexample(*verdict.counterexample, p.chi);
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

}  // namespace

void FamilyParams::validate() const {
    if (m < 0 || m > 20) {
        throw std::invalid_argument("m must lie in [0, 20], got " + std::to_string(m));
    }
    if (r < 0 || r > m || t < 0 || t > m) {
        throw std::invalid_argument("family parameters need 0 <= r <= m and 0 <= t <= m, got " + str());
    }
    if (chi < 1 || chi > 40) {
        throw std::invalid_argument("chi must lie in [1, 40], got " + std::to_string(chi));
    }
}

std::string FamilyParams::str() const {
    return "(r=" + std::to_string(r) + ", t=" + std::to_string(t) + ", m=" + std::to_string(m) +
           ", chi=" + std::to_string(chi) + ")";
}

MBQCInstance build(const FamilyParams& p) {
    p.validate();
    if (p.m > kMaxBuildM) {
        throw std::invalid_argument("building an instance is limited to m <= " + std::to_string(kMaxBuildM));
    }
    size_t n = size_t{1} << p.m;
    MBQCInstance inst;
    inst.state = make_rm_state(p.r, p.m);
    inst.angles = AngleSpec::uniform(n, p.chi);
    inst.basis_map = rm_basis(p.t, p.m).basis.transpose();
    inst.output_map = rm_basis(p.r, p.m).basis;
    inst.order_map = BinMatrix(n, n);
    return inst;
}

DeterminismVerdict determinism_exact(const FamilyParams& p, const DeterminismOptions& options) {
    p.validate();
    if (options.method == DeterminismOptions::Method::kEnumeration) {
        return enumeration_method(p, options);
    }
    return expansion_method(p, options);
}

bool sufficient_condition(const FamilyParams& p) {
    int64_t chi = p.chi;
    int64_t lhs = (chi - 1) * (p.r + p.t);
    int64_t mid = p.m - p.r;
    return chi >= 2 && lhs < mid && mid <= chi * p.t;
}

ClosedForm::ClosedForm(const FamilyParams& p) : p_(p) {
    p.validate();
    input_code_ = rm_basis(p.t, p.m);
    output_code_ = rm_basis(p.r, p.m);
}

BitVec ClosedForm::operator()(const BitVec& input) const {
    if (input.size() != n_in()) {
        throw std::invalid_argument("input has length " + std::to_string(input.size()) + ", expected " +
                                    std::to_string(n_in()));
    }
    BitVec q(input_code_.length());
    input.for_each_one([&](size_t k) { q ^= input_code_.basis.row(k); });
    const int chi = p_.chi;
    BitVec o(n_out());
    for (size_t row = 0; row < n_out(); row++) {
        const BitVec& z = output_code_.basis.row(row);
        uint64_t wzq = (z & q).weight();
        uint64_t wz = z.weight();
        if (!divisible(wzq, chi - 1) || !divisible(wz, chi)) {
            throw PromiseViolation("weights (" + std::to_string(wzq) + ", " + std::to_string(wz) +
                                   ") of output row " + std::to_string(row) + " break the promise for " + p_.str());
        }
        uint64_t mod_lo = uint64_t{1} << chi;
        bool bit = (((wzq % mod_lo) >> (chi - 1)) ^ ((wz % (mod_lo << 1)) >> chi)) & 1;
        o.set(row, bit);
    }
    return o;
}

BitVec closed_form(const FamilyParams& p, const BitVec& input) { return ClosedForm(p)(input); }

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::kProbabilistic:
            return "Probabilistic";
        case Regime::kDeterministicLinear:
            return "DeterministicLinear";
        case Regime::kUnknown:
            return "Unknown";
        case Regime::kNonlinearDeterministic:
            return "NonlinearDeterministic";
    }
    return "?";
}

Regime classify(int r, int m) {
    if (r < 0 || m < r) {
        throw std::invalid_argument("phase diagram cells need 0 <= r <= m");
    }
    if (m <= 2 * r) {
        return Regime::kProbabilistic;
    }
    if (m <= 3 * r || (r == 0 && m == 1)) {
        return Regime::kDeterministicLinear;
    }
    if (m == 3 * r + 1) {
        return Regime::kUnknown;
    }
    return Regime::kNonlinearDeterministic;
}

std::optional<int> sufficiency_witness(int r, int m, int chi) {
    for (int t = 0; t <= m; t++) {
        if (sufficient_condition({r, t, m, chi})) {
            return t;
        }
    }
    return std::nullopt;
}

std::vector<PhaseCell> phase_diagram(int r_max, int m_max) {
    if (r_max < 0 || m_max < 0) {
        throw std::invalid_argument("phase diagram bounds must be nonnegative");
    }
    std::vector<PhaseCell> cells;
    for (int m = 1; m <= m_max; m++) {
        for (int r = 0; r <= std::min(r_max, m); r++) {
            PhaseCell cell;
            cell.r = r;
            cell.m = m;
            cell.regime = classify(r, m);
            if (cell.regime == Regime::kNonlinearDeterministic) {
                for (int chi = 2; chi <= m + 1; chi++) {
                    if (auto t = sufficiency_witness(r, m, chi)) {
                        cell.chi_max = chi;
                        cell.witness_t = *t;
                    }
                }
            }
            cells.push_back(cell);
        }
    }
    return cells;
}

CorrespondenceCheck correspondence_check(const FamilyParams& p) {
    CorrespondenceCheck out;
    out.params = p;
    out.determinism = determinism_exact(p);
    MBQCInstance inst = build(p);
    RMCode out_code = rm_basis(p.r, p.m);
    AdmissibleSet adm =
        admissible_inputs(inst.state, inst.angles, inst.output_map, rm_basis(p.t, p.m).basis);
    out.candidates = adm.candidates;
    out.admissible = adm.bases.size();
    out.vector_space = adm.vector_space;
    out.row_values.assign(inst.n_out(), {});
    out.degree_one_constant_zero = out.admissible > 0;
    for (size_t row = 0; row < inst.n_out(); row++) {
        bool seen[2] = {false, false};
        for (const auto& o : adm.outputs) {
            seen[o.get(row) ? 1 : 0] = true;
        }
        for (int v = 0; v < 2; v++) {
            if (seen[v]) {
                out.row_values[row].push_back(v);
            }
        }
        bool deg1 = out_code.monomials[row].size() == 1;
        out.degree_one.push_back(deg1);
        if (deg1 && seen[1]) {
            out.degree_one_constant_zero = false;
        }
    }
    return out;
}

Example2Report example2_report(uint64_t seed, size_t samples) {
    Example2Report rep;
    rep.params = {1, 2, 5, 2};
    rep.determinism = determinism_exact(rep.params);
    ClosedForm cf(rep.params);
    RMCode out_code = rm_basis(rep.params.r, rep.params.m);

    TruthTable tt(cf.n_in(), cf.n_out());
    rep.inputs = tt.size();
    for (size_t row = 0; row < cf.n_out(); row++) {
        Example2Row r;
        r.monomial = out_code.monomials[row];
        r.support_weight = out_code.basis.row(row).weight();
        r.degree_one = r.monomial.size() == 1;
        rep.rows.push_back(std::move(r));
    }
    for (uint64_t v = 0; v < tt.size(); v++) {
        BitVec o = cf(BitVec::from_uint(v, cf.n_in()));
        rep.admissible++;
        for (size_t row = 0; row < o.size(); row++) {
            (o.get(row) ? rep.rows[row].ones : rep.rows[row].zeros)++;
        }
        tt.set(v, std::move(o));
    }
    rep.linearity = is_linear(tt);

    MBQCInstance inst = build(rep.params);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<uint64_t> pick(0, tt.size() - 1);
    for (size_t k = 0; k < samples; k++) {
        uint64_t v = pick(rng);
        RunResult res = run(inst, BitVec::from_uint(v, cf.n_in()));
        rep.sampled++;
        if (!res.deterministic || res.output() != tt.at(v)) {
            rep.sample_mismatches++;
        }
    }
    rep.m4 = correspondence_check({1, 2, 4, 2});
    return rep;
}

}  // namespace dmbqc
