#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mfdlog/syntax.hpp"

namespace mfdlog {

using AtomId = std::uint32_t;

/// Finite EDB relations keyed by predicate.
struct Database {
    struct Relation {
        std::size_t arity = 0;
        std::set<std::vector<std::string>> tuples;
    };
    std::map<std::string, Relation> relations;

    std::size_t tuple_count() const {
        std::size_t n = 0;
        for (const auto& [_, rel] : relations) n += rel.tuples.size();
        return n;
    }
};

/// Variable-free rule over atom ids. Parts are sorted and duplicate-free.
struct GroundRule {
    std::vector<AtomId> head;
    std::vector<AtomId> body_pos;
    std::vector<AtomId> body_neg;

    bool is_denial() const { return head.empty(); }
    bool operator==(const GroundRule&) const = default;
};

/// Fully instantiated program. Atom ids are dense and assigned in
/// lexicographic order of the printed ground atom, so enumeration order is
/// reproducible across runs.
struct GroundProgram {
    std::vector<std::string> atom_names;  // index = AtomId, sorted
    std::unordered_map<std::string, AtomId> atom_index;
    std::vector<GroundRule> rules;
    std::set<std::string> universe;

    std::size_t atom_count() const { return atom_names.size(); }
    const std::string& name(AtomId id) const { return atom_names[id]; }
    std::optional<AtomId> find(const std::string& printed) const {
        auto it = atom_index.find(printed);
        if (it == atom_index.end()) return std::nullopt;
        return it->second;
    }
    std::string rule_to_string(const GroundRule& r) const;
    std::string to_string() const;
};

struct GroundCapExceeded : std::runtime_error {
    explicit GroundCapExceeded(std::size_t cap)
        : std::runtime_error("grounding exceeds the configured cap of " + std::to_string(cap) +
                             " rules") {}
};

struct GroundOptions {
    std::size_t max_rules = 1'000'000;
};

/// Appends one ground fact per database tuple. The database predicates must
/// be EDB predicates of the program with matching arities.
Program attach_database(const Program& p, const Database& d);

/// All constants appearing in the program; falls back to the reserved
/// constant "u0" when the program mentions none. The fallback can never
/// collide: it is used only when no constant occurs at all.
std::set<std::string> herbrand_universe(const Program& p);

/// Instantiates every rule with every substitution of its variables by
/// universe constants. Duplicate rules and duplicate atoms within a rule
/// part are removed; nothing else is simplified (no tautology or subsumption
/// elimination, which would not preserve all semantics).
GroundProgram ground(const Program& p, const GroundOptions& opts = {});

/// Rebuild a ground program that shares `base`'s atom table but holds the
/// given rules. Used for transformed programs (reducts, head deletions).
GroundProgram with_rules(const GroundProgram& base, std::vector<GroundRule> rules);

}  // namespace mfdlog
