#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mfdlog/query.hpp"

namespace testutil {

using namespace mfdlog;

inline std::string corpus_path(const std::string& name) {
    return std::string(CORPUS_DIR) + "/" + name;
}

inline std::string read_corpus(const std::string& name) {
    std::ifstream in(corpus_path(name));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline GroundProgram ground_corpus(const std::string& name, const std::string& facts_name = "") {
    Program p = parse_program(read_corpus(name));
    if (!facts_name.empty()) {
        Database d = parse_database(read_corpus(facts_name));
        p = attach_database(p, d);
    }
    return ground(p);
}

inline Interpretation interp(const GroundProgram& g, const std::vector<std::string>& atoms) {
    Interpretation m(g.atom_count());
    for (const auto& a : atoms) m.set(*g.find(a));
    return m;
}

inline std::set<std::set<std::string>> name_sets(const GroundProgram& g,
                                                 const std::vector<Interpretation>& models) {
    std::set<std::set<std::string>> out;
    for (const auto& m : models) {
        std::set<std::string> one;
        for (std::size_t a = m.next(0); a < m.universe_size(); a = m.next(a + 1))
            one.insert(g.name(static_cast<AtomId>(a)));
        out.insert(std::move(one));
    }
    return out;
}

inline std::set<std::set<std::string>> name_sets(const GroundProgram& g, const ModelSet& ms) {
    return name_sets(g, ms.models);
}

// ---------------------------------------------------------------------------
// randomness

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng) < p;
    }
};

struct RandomProgramParams {
    int min_atoms = 2;
    int max_atoms = 8;
    int min_rules = 1;
    int max_rules = 12;
    int max_head = 3;
    int max_body = 3;
    double denial_rate = 0.2;
    bool normal = false;    // singleton heads
    bool positive = false;  // no negative body literals
};

/// Propositional ground program over atoms p00..p<n-1>; zero-padded names
/// keep lexicographic atom-id order aligned with the numeric order.
inline GroundProgram random_ground_program(Rng& rng, const RandomProgramParams& pp) {
    int n = pp.min_atoms + rng.below(pp.max_atoms - pp.min_atoms + 1);
    GroundProgram g;
    for (int i = 0; i < n; ++i) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "p%02d", i);
        g.atom_names.push_back(buf);
    }
    for (AtomId id = 0; id < g.atom_names.size(); ++id) g.atom_index[g.atom_names[id]] = id;
    g.universe.insert("u0");

    int nrules = pp.min_rules + rng.below(pp.max_rules - pp.min_rules + 1);
    for (int r = 0; r < nrules; ++r) {
        GroundRule rule;
        bool denial = rng.chance(pp.denial_rate);
        int head_n = denial ? 0 : (pp.normal ? 1 : 1 + rng.below(pp.max_head));
        int pos_n = rng.below(pp.max_body + 1);
        int neg_n = pp.positive ? 0 : rng.below(pp.max_body + 1);
        if (head_n + pos_n + neg_n == 0) pos_n = 1;
        std::set<AtomId> hs, ps, ns;
        for (int i = 0; i < head_n; ++i) hs.insert(static_cast<AtomId>(rng.below(n)));
        for (int i = 0; i < pos_n; ++i) ps.insert(static_cast<AtomId>(rng.below(n)));
        for (int i = 0; i < neg_n; ++i) ns.insert(static_cast<AtomId>(rng.below(n)));
        rule.head.assign(hs.begin(), hs.end());
        rule.body_pos.assign(ps.begin(), ps.end());
        rule.body_neg.assign(ns.begin(), ns.end());
        g.rules.push_back(std::move(rule));
    }
    return g;
}

/// Random safe non-ground program for parser round trips.
inline Program random_ast_program(Rng& rng) {
    Program p;
    const std::vector<std::string> preds = {"p", "q", "r", "edge"};
    const std::vector<std::string> consts = {"a", "b", "1", "\"it\""};
    const std::vector<std::string> vars = {"X", "Y", "_Z"};
    int nrules = 1 + rng.below(6);
    for (int i = 0; i < nrules; ++i) {
        Rule r;
        int arity = rng.below(3);
        auto make_atom = [&](bool allow_vars) {
            Atom a;
            a.predicate = preds[rng.below(static_cast<int>(preds.size()))] +
                          std::to_string(arity);  // unique arity per name
            for (int k = 0; k < arity; ++k) {
                if (allow_vars && rng.chance(0.5))
                    a.args.push_back(Term::variable(vars[rng.below(3)]));
                else
                    a.args.push_back(Term::constant(consts[rng.below(4)]));
            }
            return a;
        };
        int nh = rng.chance(0.15) ? 0 : 1 + rng.below(2);
        for (int k = 0; k < nh; ++k) r.head.push_back(make_atom(true));
        int np = rng.below(3), nn = rng.below(2);
        if (nh + np + nn == 0) np = 1;
        for (int k = 0; k < np; ++k) r.body_pos.push_back(make_atom(true));
        for (int k = 0; k < nn; ++k) r.body_neg.push_back(make_atom(true));
        // make the rule safe: cover every variable with one positive atom
        std::vector<std::string> used;
        auto scan = [&](const std::vector<Atom>& atoms) {
            for (const auto& a : atoms)
                for (const auto& t : a.args)
                    if (t.is_variable() &&
                        std::find(used.begin(), used.end(), t.name) == used.end())
                        used.push_back(t.name);
        };
        scan(r.head);
        scan(r.body_pos);
        scan(r.body_neg);
        if (!used.empty()) {
            Atom guard;
            guard.predicate = "dom" + std::to_string(used.size());
            for (const auto& v : used) guard.args.push_back(Term::variable(v));
            r.body_pos.push_back(guard);
        }
        p.rules.push_back(std::move(r));
    }
    return p;
}

// ---------------------------------------------------------------------------
// graph kernel instances

struct Digraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;
};

inline Digraph digraph_from_mask(int n, std::uint64_t mask) {
    Digraph g{n, {}};
    int bit = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j, ++bit)
            if (mask & (std::uint64_t{1} << bit)) g.edges.insert({i, j});
    return g;
}

inline Database digraph_db(const Digraph& g) {
    Database d;
    auto& v = d.relations["v"];
    v.arity = 1;
    for (int i = 1; i <= g.n; ++i) v.tuples.insert({std::to_string(i)});
    auto& e = d.relations["e"];
    e.arity = 2;
    for (auto [a, b] : g.edges) e.tuples.insert({std::to_string(a), std::to_string(b)});
    if (e.tuples.empty()) d.relations.erase("e");
    if (v.tuples.empty()) d.relations.erase("v");
    return d;
}

/// Independent search: a kernel is an independent set that dominates every
/// outside vertex through an incoming edge.
inline bool kernel_exists_brute(const Digraph& g) {
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
        bool ok = true;
        for (int i = 1; i <= g.n && ok; ++i) {
            bool in_s = s & (std::uint64_t{1} << (i - 1));
            if (in_s) {
                for (int j = 1; j <= g.n; ++j)
                    if ((s & (std::uint64_t{1} << (j - 1))) && g.edges.count({j, i})) {
                        ok = false;
                        break;
                    }
            } else {
                bool covered = false;
                for (int j = 1; j <= g.n; ++j)
                    if ((s & (std::uint64_t{1} << (j - 1))) && g.edges.count({j, i})) {
                        covered = true;
                        break;
                    }
                if (!covered) ok = false;
            }
        }
        if (ok) return true;
    }
    return g.n == 0;
}

// ---------------------------------------------------------------------------
// 3SAT instances

struct Sat3Clause {
    std::array<int, 3> var;      // 1-based variable index
    std::array<bool, 3> positive;
};

struct Sat3Instance {
    int nvars = 3;
    std::vector<Sat3Clause> clauses;
};

/// Ground encoding, instantiated per clause the way the rule is meant to be
/// read: one disjunctive rule per clause over that clause's three literals.
inline Program sat3_ground_program(const Sat3Instance& ins) {
    auto val = [](int v, bool pos) {
        Atom a;
        a.predicate = "val";
        a.args = {Term::constant("x" + std::to_string(v)),
                  Term::constant(pos ? "true" : "false")};
        return a;
    };
    Program p;
    for (int v = 1; v <= ins.nvars; ++v) {
        Atom var_fact;
        var_fact.predicate = "var";
        var_fact.args = {Term::constant("x" + std::to_string(v))};
        p.rules.push_back(Rule{{var_fact}, {}, {}});
        p.rules.push_back(Rule{{val(v, true), val(v, false)}, {var_fact}, {}});
        p.rules.push_back(Rule{{}, {val(v, true), val(v, false)}, {}});
    }
    int cnum = 0;
    for (const auto& c : ins.clauses) {
        ++cnum;
        std::vector<Atom> occurs;
        for (int k = 0; k < 3; ++k) {
            Atom o;
            o.predicate = "occur";
            o.args = {Term::constant("c" + std::to_string(cnum)),
                      Term::constant("x" + std::to_string(c.var[k])),
                      Term::constant(c.positive[k] ? "true" : "false")};
            occurs.push_back(o);
            p.rules.push_back(Rule{{o}, {}, {}});
        }
        Rule clause_rule;
        for (int k = 0; k < 3; ++k) clause_rule.head.push_back(val(c.var[k], c.positive[k]));
        clause_rule.body_pos = occurs;
        p.rules.push_back(std::move(clause_rule));
    }
    // require x1 and x2 to come out true
    p.rules.push_back(Rule{{}, {}, {val(1, true)}});
    p.rules.push_back(Rule{{}, {}, {val(2, true)}});
    return p;
}

/// Truth-table reference: assignments satisfying every clause with
/// x1 = x2 = true.
inline std::set<std::vector<bool>> sat3_solutions_brute(const Sat3Instance& ins) {
    std::set<std::vector<bool>> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << ins.nvars); ++m) {
        std::vector<bool> assign(ins.nvars);
        for (int v = 0; v < ins.nvars; ++v) assign[v] = m & (std::uint64_t{1} << v);
        if (ins.nvars >= 1 && !assign[0]) continue;
        if (ins.nvars >= 2 && !assign[1]) continue;
        bool ok = true;
        for (const auto& c : ins.clauses) {
            bool sat = false;
            for (int k = 0; k < 3; ++k)
                if (assign[c.var[k] - 1] == c.positive[k]) sat = true;
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(assign);
    }
    return out;
}

}  // namespace testutil
