#pragma once

#include <optional>
#include <vector>

#include "mfdlog/ground.hpp"

namespace mfdlog {

/// Assignment of ground atoms to non-negative levels. For every head-bearing
/// ground rule there is a level l with all head atoms at l, positive body
/// atoms at most l and negative body atoms strictly below l. A denial has no
/// head, so it is anchored at the maximum level of its body atoms; its
/// negative body atoms must lie strictly below that anchor.
struct StratumMap {
    std::vector<int> level;  // indexed by AtomId
    int max_level = 0;

    int stratum(AtomId a) const { return level[a]; }
};

/// Returns a stratum map satisfying the level conditions, or nullopt when
/// the program is not locally stratified (some ground atom depends on itself
/// through negation). Predicate-level stratification is tried first as a
/// fast path; the ground-atom-level relaxation is attempted when it fails.
std::optional<StratumMap> stratify(const GroundProgram& g);

/// Literal re-check of the level conditions; exposed so tests can verify a
/// map independently of how it was computed.
bool stratification_valid(const GroundProgram& g, const StratumMap& s);

}  // namespace mfdlog
