// Copyright 2026 The magiclab Authors
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

#include "magiclab/msr.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "magiclab/gf2.h"

namespace magiclab {

size_t MsrPartition::K_prime() const {
    return static_cast<size_t>(std::count_if(blocks.begin(), blocks.end(), [](const MsrBlock &b) { return b.has_output; }));
}

size_t MsrPartition::max_block() const {
    size_t m = 0;
    for (const auto &b : blocks) {
        m = std::max(m, b.size());
    }
    return m;
}

std::vector<size_t> MsrPartition::sizes() const {
    std::vector<size_t> out;
    out.reserve(blocks.size());
    for (const auto &b : blocks) {
        out.push_back(b.size());
    }
    return out;
}

namespace {

MsrPartition partition_singletons(const std::vector<FinalListEntry> &final_list, size_t t) {
    MsrPartition part;
    part.t = t;
    std::vector<PauliString> ops;
    for (const auto &m : final_list) {
        ops.push_back(m.op);
    }
    std::vector<uint8_t> alive(ops.size(), 1);
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i < ops.size(); i++) {
            if (!alive[i] || ops[i].weight() != 1) {
                continue;
            }
            size_t q = ops[i].support()[0];
            MsrBlock b;
            b.support = {q};
            b.members = {i};
            b.has_output = final_list[i].kind == MeasurementKind::Output;
            part.blocks.push_back(std::move(b));
            alive[i] = 0;
            for (size_t k = 0; k < ops.size(); k++) {
                if (alive[k] && (ops[k].x(q) || ops[k].z(q))) {
                    ops[k] *= ops[i];
                    alive[k] = ops[k].weight() > 0;
                }
            }
            changed = true;
        }
    }
    boost::disjoint_sets_with_storage<> ds(std::max<size_t>(t, 1));
    std::vector<uint8_t> used(t, 0);
    for (size_t i = 0; i < ops.size(); i++) {
        if (!alive[i]) {
            continue;
        }
        auto sup = ops[i].support();
        for (size_t q : sup) {
            ds.union_set(sup[0], q);
            used[q] = 1;
        }
    }
    std::map<size_t, MsrBlock> by_root;
    for (size_t q = 0; q < t; q++) {
        if (used[q]) {
            by_root[ds.find_set(q)].support.push_back(q);
        }
    }
    for (size_t i = 0; i < ops.size(); i++) {
        if (alive[i]) {
            auto &b = by_root[ds.find_set(ops[i].support()[0])];
            b.members.push_back(i);
            b.has_output |= final_list[i].kind == MeasurementKind::Output;
        }
    }
    for (auto &[root, b] : by_root) {
        part.blocks.push_back(std::move(b));
    }
    std::sort(part.blocks.begin(), part.blocks.end(),
              [](const MsrBlock &x, const MsrBlock &y) { return x.support[0] < y.support[0]; });
    return part;
}

}  // namespace

MsrPartition partition(const std::vector<FinalListEntry> &final_list, size_t t, QuotientMode mode) {
    for (const auto &m : final_list) {
        if (m.op.num_qubits() != t) {
            throw std::invalid_argument("partition: member does not act on the MSR");
        }
    }
    if (mode == QuotientMode::Singletons) {
        return partition_singletons(final_list, t);
    }
    MsrPartition part;
    part.t = t;
    size_t cols = 2 * t;
    std::vector<BitRow> rref;
    Gf2Basis fixed(cols);
    for (const auto &m : final_list) {
        BitRow r(cols);
        for (size_t q : m.op.support()) {
            r.set(2 * q, m.op.x(q));
            r.set(2 * q + 1, m.op.z(q));
        }
        if (m.kind != MeasurementKind::Output) {
            fixed.insert(r);
        }
        rref.push_back(std::move(r));
    }

    // Reduced row echelon form; every reduced row then lives inside one factor.
    std::vector<size_t> pivot;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rref.size(); c++) {
        size_t p = rank;
        while (p < rref.size() && !rref[p].get(c)) {
            p++;
        }
        if (p == rref.size()) {
            continue;
        }
        std::swap(rref[p], rref[rank]);
        for (size_t i = 0; i < rref.size(); i++) {
            if (i != rank && rref[i].get(c)) {
                rref[i] ^= rref[rank];
            }
        }
        pivot.push_back(c);
        rank++;
    }
    rref.resize(rank);

    // Columns sharing a fundamental circuit, or a qubit, belong to the same factor.
    boost::disjoint_sets_with_storage<> ds(std::max<size_t>(cols, 1));
    std::vector<uint8_t> used(cols, 0);
    for (size_t i = 0; i < rank; i++) {
        for (size_t w = 0; w < rref[i].w.size(); w++) {
            for (uint64_t bits = rref[i].w[w]; bits; bits &= bits - 1) {
                size_t c = w * 64 + static_cast<size_t>(std::countr_zero(bits));
                used[c] = 1;
                ds.union_set(c, pivot[i]);
            }
        }
    }
    for (size_t q = 0; q < t; q++) {
        if (used[2 * q] && used[2 * q + 1]) {
            ds.union_set(2 * q, 2 * q + 1);
        }
    }
    std::map<size_t, MsrBlock> by_root;
    for (size_t q = 0; q < t; q++) {
        if (used[2 * q] || used[2 * q + 1]) {
            by_root[ds.find_set(used[2 * q] ? 2 * q : 2 * q + 1)].support.push_back(q);
        }
    }
    // A factor needs output sampling iff its subgroup is not fixed by the other measurements.
    for (size_t i = 0; i < rank; i++) {
        auto &b = by_root[ds.find_set(pivot[i])];
        b.has_output |= !fixed.contains(rref[i]);
    }
    for (size_t i = 0; i < final_list.size(); i++) {
        auto sup = final_list[i].op.support();
        size_t last = SIZE_MAX;
        for (size_t q : sup) {
            size_t root = ds.find_set(used[2 * q] ? 2 * q : 2 * q + 1);
            if (root != last) {
                auto &members = by_root[root].members;
                if (members.empty() || members.back() != i) {
                    members.push_back(i);
                }
                last = root;
            }
        }
    }
    for (auto &[root, b] : by_root) {
        part.blocks.push_back(std::move(b));
    }
    std::sort(part.blocks.begin(), part.blocks.end(),
              [](const MsrBlock &x, const MsrBlock &y) { return x.support[0] < y.support[0]; });
    return part;
}

BigInt cpx_pbc(const MsrPartition &part) {
    BigInt sum = 0;
    for (const auto &b : part.blocks) {
        if (b.has_output) {
            sum += BigInt(1) << b.size();
        }
    }
    return sum;
}

double log2_big(const BigInt &x) {
    if (x <= 0) {
        return 0;
    }
    size_t top = boost::multiprecision::msb(x);
    if (top < 60) {
        return std::log2(static_cast<double>(x.convert_to<uint64_t>()));
    }
    size_t shift = top - 60;
    uint64_t head = static_cast<uint64_t>(x >> shift);
    return std::log2(static_cast<double>(head)) + static_cast<double>(shift);
}

double order_param_term(const BigInt &cpx, size_t t) {
    if (t == 0 || cpx == 0) {
        return 0;
    }
    return log2_big(cpx) / static_cast<double>(t);
}

Estimate mean_and_se(const std::vector<double> &values) {
    if (values.empty()) {
        throw std::invalid_argument("mean_and_se: no samples");
    }
    Estimate e;
    e.count = values.size();
    double n = static_cast<double>(values.size());
    double sum = 0;
    for (double v : values) {
        sum += v;
    }
    e.mean = sum / n;
    if (values.size() > 1) {
        double ss = 0;
        for (double v : values) {
            ss += (v - e.mean) * (v - e.mean);
        }
        e.se = std::sqrt(ss / (n - 1) / n);
    }
    return e;
}

Estimate order_parameter(const std::vector<OrderSample> &samples) {
    std::vector<double> terms;
    terms.reserve(samples.size());
    for (const auto &s : samples) {
        if (s.t == 0 && s.cpx != 0) {
            throw std::invalid_argument("order_parameter: nonzero cpx with t = 0");
        }
        terms.push_back(order_param_term(s.cpx, s.t));
    }
    return mean_and_se(terms);
}

std::vector<double> block_histogram(const std::vector<std::vector<size_t>> &block_sizes) {
    std::vector<double> hist;
    size_t counted = 0;
    for (const auto &sizes : block_sizes) {
        if (sizes.empty()) {
            continue;
        }
        counted++;
        for (size_t s : sizes) {
            if (s >= hist.size()) {
                hist.resize(s + 1, 0.0);
            }
            hist[s] += 1.0 / static_cast<double>(sizes.size());
        }
    }
    for (double &h : hist) {
        h /= static_cast<double>(std::max<size_t>(counted, 1));
    }
    return hist;
}

size_t histogram_peak(const std::vector<double> &histogram) {
    size_t best = 0;
    for (size_t k = 1; k < histogram.size(); k++) {
        if (histogram[k] > histogram[best]) {
            best = k;
        }
    }
    return best;
}

}  // namespace magiclab
