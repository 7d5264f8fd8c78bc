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

#ifndef MAGICLAB_MSR_H
#define MAGICLAB_MSR_H

#include <cstddef>
#include <vector>

#include "magiclab/pbc.h"
#include "magiclab/percolation.h"

namespace magiclab {

struct MsrBlock {
    std::vector<size_t> support;  // sorted MSR qubits
    std::vector<size_t> members;  // FinalList members acting on the block
    /// The block's subgroup is not generated by gadget and monitor members alone.
    bool has_output = false;

    size_t size() const {
        return support.size();
    }
};

struct MsrPartition {
    size_t t = 0;
    std::vector<MsrBlock> blocks;  // ordered by smallest support qubit

    size_t K() const {
        return blocks.size();
    }
    size_t K_prime() const;
    size_t max_block() const;
    std::vector<size_t> sizes() const;
};

enum class QuotientMode {
    /// Single-qubit members become singleton blocks and are multiplied out of the others;
    /// the rest split into components of the support-overlap graph.
    Singletons,
    /// Finest disjoint-support factorization of the generated group. Equivalent generating
    /// sets give the same blocks.
    Group,
};

MsrPartition partition(const std::vector<FinalListEntry> &final_list, size_t t,
                       QuotientMode mode = QuotientMode::Group);

/// Sum of 2^{t_i} over blocks holding an output measurement.
BigInt cpx_pbc(const MsrPartition &part);

/// log2 of a positive big integer; 0 maps to 0.
double log2_big(const BigInt &x);

/// log2(cpx) / t, or 0 when t = 0 or cpx = 0.
double order_param_term(const BigInt &cpx, size_t t);

struct Estimate {
    double mean = 0;
    double se = 0;
    size_t count = 0;
};

struct OrderSample {
    BigInt cpx;
    size_t t = 0;
};

/// Realization average of order_param_term with its standard error.
Estimate order_parameter(const std::vector<OrderSample> &samples);
/// Same average over precomputed per-realization terms.
Estimate mean_and_se(const std::vector<double> &values);

/// Entry k is the frequency of block size k, normalized per realization and averaged over
/// realizations that have at least one block.
std::vector<double> block_histogram(const std::vector<std::vector<size_t>> &block_sizes);

/// Block size with the largest averaged frequency (smallest such size on ties).
size_t histogram_peak(const std::vector<double> &histogram);

}  // namespace magiclab

#endif
