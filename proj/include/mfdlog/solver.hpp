#pragma once

#include <cstdint>
#include <stdexcept>

#include "mfdlog/kernel.hpp"
#include "mfdlog/stratify.hpp"

namespace mfdlog {

enum class SemanticsKind { AllModels, Minimal, Founded, MinimalFounded, Stable, Perfect };

const char* to_string(SemanticsKind k);
SemanticsKind semantics_from_string(const std::string& s);

/// Result of an enumeration. Models are sorted by cardinality, then
/// lexicographically by atom-id sequence, so output is stable across runs.
struct ModelSet {
    std::vector<Interpretation> models;
    bool complete = true;
    bool budget_exhausted = false;
};

struct SolveOptions {
    /// Maximum number of search nodes examined before the enumeration gives
    /// up and reports itself incomplete.
    std::uint64_t budget = std::uint64_t{1} << 22;
};

struct NotStratified : std::runtime_error {
    NotStratified() : std::runtime_error("program is not locally stratified") {}
};

struct OracleCapExceeded : std::runtime_error {
    OracleCapExceeded(std::size_t atoms, std::size_t cap)
        : std::runtime_error("oracle cap exceeded: " + std::to_string(atoms) +
                             " atoms, cap " + std::to_string(cap)) {}
};

// ---------------------------------------------------------------------------
// membership checks

/// Model with no proper-subset model. The subset search runs over the atoms
/// of `m` with unit propagation; exponential in |m| in the worst case.
bool is_minimal_model(const Interpretation& m, const GroundProgram& g);

/// Minimal model of the reduct of `g` by `m`.
bool is_stable(const Interpretation& m, const GroundProgram& g);

/// Minimal model that is also founded.
bool is_minimal_founded(const Interpretation& m, const GroundProgram& g);

/// Equivalent route to is_minimal_founded through the head-deleted program:
/// minimal model of `g`, founded in the standard part, and satisfying every
/// denial of the transformed program.
bool characterization_check(const Interpretation& m, const GroundProgram& g);

/// The priority order on models induced by strata: m comes before n iff they
/// differ and every atom of m - n is outranked by some atom of n - m.
bool prefer(const Interpretation& m, const Interpretation& n, const StratumMap& s);

/// Model such that no model is preferred to it.
bool is_perfect(const Interpretation& m, const GroundProgram& g, const StratumMap& s,
                const SolveOptions& opts = {});

// ---------------------------------------------------------------------------
// enumeration

/// All perfect models, computed two ways (priority-minimality over the full
/// model set, and layer-by-layer minimal-model composition); the two routes
/// are cross-checked before returning.
ModelSet perfect_models(const GroundProgram& g, const StratumMap& s,
                        const SolveOptions& opts = {});

/// Guided enumeration of the requested model class. Candidates are explored
/// in non-decreasing cardinality for the subset-minimal classes, with rule
/// propagation, and every emitted model is re-verified by the corresponding
/// membership check. Throws NotStratified for SemanticsKind::Perfect on
/// unstratifiable input.
ModelSet enumerate(const GroundProgram& g, SemanticsKind kind, const SolveOptions& opts = {});

/// Brute force over all 2^n interpretations with the definitional membership
/// predicates, for differential testing. Requires atom count <= cap.
ModelSet oracle_enumerate(const GroundProgram& g, SemanticsKind kind, std::size_t cap = 20);

}  // namespace mfdlog
