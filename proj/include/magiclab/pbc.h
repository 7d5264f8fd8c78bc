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

#ifndef MAGICLAB_PBC_H
#define MAGICLAB_PBC_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "magiclab/circuit.h"
#include "magiclab/clifford.h"
#include "magiclab/gf2.h"
#include "magiclab/pauli.h"
#include "magiclab/rng.h"

namespace magiclab {

enum class MeasurementKind : uint8_t { Dummy, Gadget, Monitor, Output };

const char *kind_name(MeasurementKind kind);
MeasurementKind kind_from_name(std::string_view name);

/// How a measurement was resolved during reduction.
enum class Resolution : uint8_t {
    Replaced,       // anti-commuted with a dummy or a FinalList member; became a Clifford V
    Deterministic,  // dependent on earlier measurements; deleted
    Appended,       // independent and commuting; kept in the FinalList
};

struct FinalListEntry {
    PauliString op;  // restricted to the magic-state register, Hermitian
    MeasurementKind kind = MeasurementKind::Monitor;
    int outcome = +1;
    int64_t source = -1;  // index of the originating circuit event

    bool operator==(const FinalListEntry &other) const = default;
};

struct PbcStep {
    Resolution resolution = Resolution::Appended;
    int outcome = +1;
};

struct PbcOptions {
    /// Force every gadget outcome to -1 so no conditional S-dagger is needed.
    bool preselect_gadgets = false;
};

/// Incremental PBC reduction over n computational qubits and t magic-state ancillas.
///
/// The frame holds, for every qubit q of the joint register, the images of X_q and Z_q
/// after all Cliffords seen so far (including replacement gates V) have been commuted
/// to the front. A measurement of P at the current time is a measurement of frame(P)
/// on |0>^n |A>^t.
class PbcCompiler {
   public:
    PbcCompiler(size_t n, size_t t, PbcOptions options = {});

    size_t num_qubits() const {
        return n_;
    }
    size_t num_ancillas() const {
        return t_;
    }
    size_t ancillas_used() const {
        return next_ancilla_;
    }
    const PbcOptions &options() const {
        return options_;
    }

    /// Clifford on computational qubits (a, b). Arity-1 tableaux ignore b.
    void clifford(const CliffordTableau &c, size_t a, size_t b = 0);
    void clifford_c2(size_t id, size_t a, size_t b);
    void clifford_c1(size_t id, size_t a);

    /// T gate on qubit c, consuming the next ancilla.
    PbcStep gadget(size_t c, Outcome requested, Rng *rng, int64_t source = -1);
    PbcStep monitor(size_t q, Outcome requested, Rng *rng, int64_t source = -1);
    PbcStep output(size_t q, Outcome requested, Rng *rng, int64_t source = -1);

    /// Reduces an already-conjugated measurement on the joint register. Unset outcomes
    /// are drawn from `rng` when the outcome is random. A requested outcome that
    /// contradicts a deterministic value throws std::domain_error.
    PbcStep measure(const PauliString &effective, MeasurementKind kind, Outcome requested, Rng *rng,
                    int64_t source = -1);

    /// The frame image of a Pauli on the joint register.
    PauliString frame_image(const PauliString &p) const;
    const PauliString &frame_x(size_t q) const {
        return frame_x_[q];
    }
    const PauliString &frame_z(size_t q) const {
        return frame_z_[q];
    }

    const std::vector<FinalListEntry> &final_list() const {
        return final_list_;
    }
    /// Per-kind counts of resolutions, indexed [kind][resolution].
    const std::array<std::array<size_t, 3>, 4> &tally() const {
        return tally_;
    }

   private:
    int draw(Outcome requested, Rng *rng) const;
    void replace(const PauliString &generator);
    void prepend_local(const std::array<LocalPauli, 4> &images, uint8_t arity, size_t a, size_t b);
    PbcStep record(MeasurementKind kind, PbcStep step);
    PauliString embed_msr(const PauliString &r) const;

    size_t n_;
    size_t t_;
    PbcOptions options_;
    size_t next_ancilla_ = 0;
    std::vector<PauliString> frame_x_;
    std::vector<PauliString> frame_z_;
    std::vector<FinalListEntry> final_list_;
    std::vector<PauliString> signed_members_;  // outcome * op, in insertion order
    Gf2Basis basis_;
    std::array<std::array<size_t, 3>, 4> tally_{};
};

struct PbcResult {
    size_t n = 0;
    size_t t = 0;
    std::vector<FinalListEntry> final_list;
    std::array<std::array<size_t, 3>, 4> tally{};
    /// Outcomes of every measurement in circuit order (gadgets, monitors, outputs).
    std::vector<int> outcomes;
};

/// Full pipeline: gadgetize, commute, reduce and restrict. Gadget and output outcomes
/// are drawn from `rng`; monitor outcomes come from the circuit record (Unset ones are
/// drawn as well).
PbcResult compile(const Circuit &circuit, Rng &rng, PbcOptions options = {});

/// True if members pairwise commute and are GF(2)-independent.
bool final_list_is_valid(const std::vector<FinalListEntry> &fl);

/// One line per member: "sign pauli kind outcome".
std::string dump_final_list(const std::vector<FinalListEntry> &fl);
std::vector<FinalListEntry> parse_final_list(std::string_view text);

}  // namespace magiclab

#endif
