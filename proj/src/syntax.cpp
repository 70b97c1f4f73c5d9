#include "mfdlog/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace mfdlog {

std::set<std::string> Program::predicates() const {
    std::set<std::string> out;
    for (const auto& r : rules) {
        for (const auto& a : r.head) out.insert(a.predicate);
        for (const auto& a : r.body_pos) out.insert(a.predicate);
        for (const auto& a : r.body_neg) out.insert(a.predicate);
    }
    return out;
}

std::set<std::string> Program::edb_predicates() const {
    if (declared_edb) return *declared_edb;
    std::set<std::string> heads;
    for (const auto& r : rules)
        for (const auto& a : r.head) heads.insert(a.predicate);
    std::set<std::string> out;
    for (const auto& p : predicates())
        if (!heads.count(p)) out.insert(p);
    return out;
}

std::set<std::string> Program::idb_predicates() const {
    auto edb = edb_predicates();
    std::set<std::string> out;
    for (const auto& p : predicates())
        if (!edb.count(p)) out.insert(p);
    return out;
}

std::map<std::string, std::size_t> Program::arities() const {
    std::map<std::string, std::size_t> out;
    for (const auto& r : rules) {
        auto scan = [&](const std::vector<Atom>& atoms) {
            for (const auto& a : atoms) out.emplace(a.predicate, a.arity());
        };
        scan(r.head);
        scan(r.body_pos);
        scan(r.body_neg);
    }
    return out;
}

// ---------------------------------------------------------------------------
// printing

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Atom& a) {
    if (a.args.empty()) return a.predicate;
    std::string out = a.predicate + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ",";
        out += a.args[i].name;
    }
    out += ")";
    return out;
}

std::string to_string(const Literal& l) {
    return l.negative ? "not " + to_string(l.atom) : to_string(l.atom);
}

std::string to_string(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.head.size(); ++i) {
        if (i) out += " | ";
        out += to_string(r.head[i]);
    }
    if (!r.body_pos.empty() || !r.body_neg.empty()) {
        out += r.head.empty() ? ":- " : " :- ";
        bool first = true;
        for (const auto& a : r.body_pos) {
            if (!first) out += ", ";
            out += to_string(a);
            first = false;
        }
        for (const auto& a : r.body_neg) {
            if (!first) out += ", ";
            out += "not " + to_string(a);
            first = false;
        }
    } else if (r.head.empty()) {
        // Empty head and empty body: unsatisfiable rule produced by
        // transforms. Not part of the input grammar.
        out += ":-";
    }
    out += ".";
    return out;
}

std::string to_string(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) {
        out += to_string(r);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// validation

namespace {

std::string describe(DiagnosticKind k) {
    switch (k) {
        case DiagnosticKind::UnsafeVariable: return "unsafe variable";
        case DiagnosticKind::ArityConflict: return "arity conflict";
        case DiagnosticKind::EdbInHead: return "EDB predicate in rule head";
        case DiagnosticKind::EmptyRule: return "empty rule";
    }
    return "diagnostic";
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : std::runtime_error([&] {
          std::string msg = "invalid program:";
          for (const auto& d : diags) msg += "\n  " + d.message;
          return msg;
      }()),
      diagnostics(std::move(diags)) {}

std::vector<Diagnostic> validate(const Program& p) {
    std::vector<Diagnostic> out;
    std::map<std::string, std::size_t> arity;

    auto check_arity = [&](const Atom& a, std::size_t rule_idx) {
        auto [it, inserted] = arity.emplace(a.predicate, a.arity());
        if (!inserted && it->second != a.arity()) {
            out.push_back({DiagnosticKind::ArityConflict, rule_idx,
                           describe(DiagnosticKind::ArityConflict) + ": " + a.predicate +
                               " used with arity " + std::to_string(a.arity()) + " and " +
                               std::to_string(it->second)});
        }
    };

    for (std::size_t i = 0; i < p.rules.size(); ++i) {
        const Rule& r = p.rules[i];
        if (r.head.empty() && r.body_pos.empty() && r.body_neg.empty()) {
            out.push_back({DiagnosticKind::EmptyRule, i,
                           describe(DiagnosticKind::EmptyRule) + " in rule " +
                               std::to_string(i + 1)});
            continue;
        }
        for (const auto& a : r.head) check_arity(a, i);
        for (const auto& a : r.body_pos) check_arity(a, i);
        for (const auto& a : r.body_neg) check_arity(a, i);

        // safety: every variable must occur in a positive body atom
        std::set<std::string> safe;
        for (const auto& a : r.body_pos)
            for (const auto& t : a.args)
                if (t.is_variable()) safe.insert(t.name);
        auto check_safe = [&](const std::vector<Atom>& atoms) {
            for (const auto& a : atoms)
                for (const auto& t : a.args)
                    if (t.is_variable() && !safe.count(t.name)) {
                        out.push_back({DiagnosticKind::UnsafeVariable, i,
                                       describe(DiagnosticKind::UnsafeVariable) + " " +
                                           t.name + " in rule " + std::to_string(i + 1) +
                                           ": " + to_string(r)});
                        safe.insert(t.name);  // report each variable once
                    }
        };
        check_safe(r.head);
        check_safe(r.body_neg);
    }

    if (p.declared_edb) {
        for (std::size_t i = 0; i < p.rules.size(); ++i) {
            const Rule& r = p.rules[i];
            // Ground facts of EDB predicates are database tuples inlined in
            // the program; anything else defining an EDB predicate is an
            // error.
            if (r.is_fact() && r.head[0].ground()) continue;
            for (const auto& a : r.head)
                if (p.declared_edb->count(a.predicate)) {
                    out.push_back({DiagnosticKind::EdbInHead, i,
                                   describe(DiagnosticKind::EdbInHead) + ": " + a.predicate +
                                       " in rule " + std::to_string(i + 1)});
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// dependency graph

DepGraph dependency_graph(const Program& p) {
    DepGraph g;
    g.nodes = p.predicates();
    for (const auto& r : p.rules) {
        for (const auto& h : r.head) {
            for (const auto& b : r.body_pos) g.edges.insert({b.predicate, h.predicate, false});
            for (const auto& b : r.body_neg) g.edges.insert({b.predicate, h.predicate, true});
        }
    }
    return g;
}

bool DepGraph::edge(const std::string& from, const std::string& to) const {
    return edges.count({from, to, false}) || edges.count({from, to, true});
}

bool DepGraph::reaches(const std::string& from, const std::string& to) const {
    std::set<std::string> seen;
    std::vector<std::string> stack{from};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        for (const auto& [p, q, neg] : edges) {
            (void)neg;
            if (p != cur || seen.count(q)) continue;
            if (q == to) return true;
            seen.insert(q);
            stack.push_back(q);
        }
    }
    return false;
}

}  // namespace mfdlog
