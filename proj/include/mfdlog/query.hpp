#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mfdlog/solver.hpp"

namespace mfdlog {

/// A bound query: a program together with a ground goal literal.
struct BoundQuery {
    Program program;
    Literal goal;
};

enum class QueryMode { Brave, Cautious };

struct QueryVerdict {
    bool answer = false;
    QueryMode mode = QueryMode::Brave;
    SemanticsKind semantics = SemanticsKind::MinimalFounded;
    /// Model establishing the verdict: present for brave-true and
    /// cautious-false answers, printed in the surface grammar.
    std::optional<std::vector<std::string>> witness;
};

/// Raised when the model class could not be enumerated completely; a query
/// never turns an incomplete enumeration into a silent verdict.
struct QueryIncomplete : std::runtime_error {
    QueryIncomplete() : std::runtime_error("enumeration budget exhausted; query verdict unknown") {}
};

struct QueryOptions {
    SolveOptions solve;
    GroundOptions ground;
    bool use_oracle = false;
    std::size_t oracle_cap = 20;
};

/// Parse a facts-only database file: ground atoms terminated by ".".
Database parse_database(const std::string& text);
Database load_database(const std::filesystem::path& path);

/// True iff some model of the class makes the goal true.
QueryVerdict brave(const BoundQuery& q, const Database& d, SemanticsKind kind,
                   const QueryOptions& opts = {});

/// True iff every model of the class makes the goal true (vacuously true on
/// an empty class); carries a counterexample witness when false.
QueryVerdict cautious(const BoundQuery& q, const Database& d, SemanticsKind kind,
                      const QueryOptions& opts = {});

}  // namespace mfdlog
