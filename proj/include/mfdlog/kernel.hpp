#pragma once

#include "mfdlog/bitset.hpp"
#include "mfdlog/ground.hpp"

namespace mfdlog {

/// An interpretation is a set of ground atom ids, a subset of the ground
/// program's atom table.
using Interpretation = Bitset;

/// Positive ground program: no rule has a negative body literal. May contain
/// denials, including the empty rule ":-" which no interpretation satisfies.
struct ReductProgram {
    std::vector<GroundRule> rules;
};

/// A transformed program split into head-bearing rules and denials.
struct SplitProgram {
    std::vector<GroundRule> standard;
    std::vector<GroundRule> denials;
};

/// Truth of a ground rule under the min/max valuation: the head disjunction
/// (empty = false) must be at least the body conjunction (empty = true).
bool satisfies(const Interpretation& i, const GroundRule& r);

bool is_model(const Interpretation& i, const GroundProgram& g);
bool is_model(const Interpretation& i, const std::vector<GroundRule>& rules);

/// Gelfond-Lifschitz transform: drops every rule whose negative body is
/// contradicted by `i`, strips the negative literals from the rest. Denials
/// are processed like any other rule.
ReductProgram reduct(const GroundProgram& g, const Interpretation& i);
ReductProgram reduct(const std::vector<GroundRule>& rules, const Interpretation& i);

/// One step of the disjunctive consequence operator: collects every head
/// atom of a rule whose positive body holds in `x`. Disjunction is read
/// conjunctively, so the whole head fires at once.
Bitset s_step(const ReductProgram& rp, const Bitset& x, std::size_t atom_count);

/// Least fixpoint of s_step from the empty set.
Bitset s_fixpoint(const ReductProgram& rp, std::size_t atom_count);

/// Classical immediate-consequence fixpoint; defined for normal positive
/// programs only. Throws std::invalid_argument on disjunctive heads or
/// denials.
Bitset t_fixpoint(const ReductProgram& rp, std::size_t atom_count);

/// Largest set of atoms of `m` derivable from the reduct of `g` by `m`
/// through atoms of `m` alone. A model is founded exactly when it equals
/// this closure; routing a derivation through an atom outside the model
/// does not count as support for it.
Bitset founded_atoms(const GroundProgram& g, const Interpretation& m);

/// True iff `m` is a model of `g` and every atom of `m` is in the founded
/// closure. The model check is folded in so callers cannot misuse the
/// operation on non-models.
bool is_founded(const Interpretation& m, const GroundProgram& g);

/// Deletes every head atom outside `m` from every rule; bodies are kept.
/// Rules whose head empties out are classified as denials, alongside the
/// original denials.
SplitProgram head_delete(const GroundProgram& g, const Interpretation& m);

/// Standard and denial parts reassembled into one rule list.
std::vector<GroundRule> merged_rules(const SplitProgram& s);

/// Replaces each denial ":- B" with "aux :- B, not aux" for a fresh 0-ary or
/// parameterised predicate "__c<k>", k the 1-based denial index. The "__"
/// prefix cannot be produced by the parser, so the fresh names are
/// collision-free.
Program rewrite_denials(const Program& p);

}  // namespace mfdlog
