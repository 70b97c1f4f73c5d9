#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mfdlog {

enum class TermKind { Constant, Variable };

/// A term is a constant or a variable. Constant names begin with a lowercase
/// letter or digit or are quoted; variable names begin with an uppercase
/// letter or underscore.
struct Term {
    TermKind kind;
    std::string name;

    static Term constant(std::string n) { return {TermKind::Constant, std::move(n)}; }
    static Term variable(std::string n) { return {TermKind::Variable, std::move(n)}; }
    bool is_variable() const { return kind == TermKind::Variable; }
    bool operator==(const Term&) const = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool ground() const {
        for (const auto& t : args)
            if (t.is_variable()) return false;
        return true;
    }
    std::size_t arity() const { return args.size(); }
    bool operator==(const Atom&) const = default;
};

struct Literal {
    Atom atom;
    bool negative = false;

    Literal negated() const { return {atom, !negative}; }
    bool operator==(const Literal&) const = default;
};

/// head atoms (empty for a denial), positive body, negative body.
/// At least one of the three parts must be non-empty.
struct Rule {
    std::vector<Atom> head;
    std::vector<Atom> body_pos;
    std::vector<Atom> body_neg;

    bool is_denial() const { return head.empty(); }
    bool is_fact() const {
        return head.size() == 1 && body_pos.empty() && body_neg.empty();
    }
    bool operator==(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;
    /// Explicit EDB declaration; when absent, every predicate that never
    /// occurs in a rule head is EDB and the rest are IDB.
    std::optional<std::set<std::string>> declared_edb;

    std::set<std::string> predicates() const;
    std::set<std::string> edb_predicates() const;
    std::set<std::string> idb_predicates() const;
    /// Arity of each predicate, first occurrence wins.
    std::map<std::string, std::size_t> arities() const;
    bool operator==(const Program& o) const {
        return rules == o.rules && declared_edb == o.declared_edb;
    }
};

// ---------------------------------------------------------------------------
// printing (surface grammar)

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);
std::string to_string(const Program& p);

// ---------------------------------------------------------------------------
// parsing

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_),
          column(col_) {}
};

/// Grammar-only parse; no validation beyond what the grammar enforces.
Program parse_program_raw(const std::string& text);

/// Parse and validate; throws ParseError on syntax errors and
/// ValidationError when diagnostics are produced.
Program parse_program(const std::string& text);

/// Parse a single ground atom, e.g. "active(d1)". Rejects variables.
Atom parse_ground_atom(const std::string& text);

/// Parse a query goal: a ground atom optionally prefixed with "not".
Literal parse_goal(const std::string& text);

// ---------------------------------------------------------------------------
// validation

enum class DiagnosticKind { UnsafeVariable, ArityConflict, EdbInHead, EmptyRule };

struct Diagnostic {
    DiagnosticKind kind;
    std::size_t rule_index;  // rule the diagnostic refers to, or npos
    std::string message;
};

struct ValidationError : std::runtime_error {
    std::vector<Diagnostic> diagnostics;
    explicit ValidationError(std::vector<Diagnostic> diags);
};

/// Returns the empty vector iff the program is valid: every rule is safe
/// (each variable occurs in some positive body atom), arities are
/// consistent, no rule part is missing entirely, and no explicitly declared
/// EDB predicate occurs in the head of anything but a ground fact.
std::vector<Diagnostic> validate(const Program& p);

// ---------------------------------------------------------------------------
// dependency graph

struct DepGraph {
    std::set<std::string> nodes;
    /// (p, q, negative): q has a defining rule with p in its body.
    std::set<std::tuple<std::string, std::string, bool>> edges;

    bool edge(const std::string& from, const std::string& to) const;
    /// Transitive reachability (one or more edges), ignoring polarity.
    bool reaches(const std::string& from, const std::string& to) const;
    bool recursive(const std::string& p) const { return reaches(p, p); }
};

DepGraph dependency_graph(const Program& p);

}  // namespace mfdlog
