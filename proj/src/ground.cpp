#include "mfdlog/ground.hpp"

#include <algorithm>
#include <unordered_set>

namespace mfdlog {

std::string GroundProgram::rule_to_string(const GroundRule& r) const {
    Rule ast;
    auto conv = [&](const std::vector<AtomId>& ids, std::vector<Atom>& out) {
        for (AtomId id : ids) out.push_back(parse_ground_atom(atom_names[id]));
    };
    conv(r.head, ast.head);
    conv(r.body_pos, ast.body_pos);
    conv(r.body_neg, ast.body_neg);
    return mfdlog::to_string(ast);
}

std::string GroundProgram::to_string() const {
    std::string out;
    for (const auto& r : rules) {
        out += rule_to_string(r);
        out += "\n";
    }
    return out;
}

Program attach_database(const Program& p, const Database& d) {
    auto edb = p.edb_predicates();
    auto arity = p.arities();
    Program out = p;
    for (const auto& [pred, rel] : d.relations) {
        if (!edb.count(pred))
            throw std::runtime_error("database predicate '" + pred +
                                     "' is not an EDB predicate of the program");
        auto it = arity.find(pred);
        if (it != arity.end() && it->second != rel.arity)
            throw std::runtime_error("database predicate '" + pred + "' has arity " +
                                     std::to_string(rel.arity) + " but the program uses arity " +
                                     std::to_string(it->second));
        for (const auto& tuple : rel.tuples) {
            Atom a;
            a.predicate = pred;
            for (const auto& c : tuple) a.args.push_back(Term::constant(c));
            out.rules.push_back(Rule{{a}, {}, {}});
        }
    }
    return out;
}

std::set<std::string> herbrand_universe(const Program& p) {
    std::set<std::string> out;
    auto scan = [&](const std::vector<Atom>& atoms) {
        for (const auto& a : atoms)
            for (const auto& t : a.args)
                if (!t.is_variable()) out.insert(t.name);
    };
    for (const auto& r : p.rules) {
        scan(r.head);
        scan(r.body_pos);
        scan(r.body_neg);
    }
    if (out.empty()) out.insert("u0");
    return out;
}

namespace {

struct StrRule {
    std::vector<std::string> head, body_pos, body_neg;
};

void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string rule_key(const StrRule& r) {
    std::string key;
    for (const auto& s : r.head) key += s + "|";
    key += ":-";
    for (const auto& s : r.body_pos) key += s + ",";
    key += "~";
    for (const auto& s : r.body_neg) key += s + ",";
    return key;
}

std::string substituted(const Atom& a, const std::map<std::string, std::string>& sub) {
    Atom g;
    g.predicate = a.predicate;
    for (const auto& t : a.args)
        g.args.push_back(Term::constant(t.is_variable() ? sub.at(t.name) : t.name));
    return to_string(g);
}

}  // namespace

GroundProgram ground(const Program& p, const GroundOptions& opts) {
    auto diags = validate(p);
    if (!diags.empty()) throw ValidationError(std::move(diags));

    std::set<std::string> constants = herbrand_universe(p);
    std::vector<std::string> universe(constants.begin(), constants.end());

    std::vector<StrRule> rules;
    std::unordered_set<std::string> seen;

    for (const auto& r : p.rules) {
        std::vector<std::string> vars;
        auto collect = [&](const std::vector<Atom>& atoms) {
            for (const auto& a : atoms)
                for (const auto& t : a.args)
                    if (t.is_variable() &&
                        std::find(vars.begin(), vars.end(), t.name) == vars.end())
                        vars.push_back(t.name);
        };
        collect(r.head);
        collect(r.body_pos);
        collect(r.body_neg);

        std::vector<std::size_t> odometer(vars.size(), 0);
        while (true) {
            std::map<std::string, std::string> sub;
            for (std::size_t i = 0; i < vars.size(); ++i) sub[vars[i]] = universe[odometer[i]];

            StrRule g;
            for (const auto& a : r.head) g.head.push_back(substituted(a, sub));
            for (const auto& a : r.body_pos) g.body_pos.push_back(substituted(a, sub));
            for (const auto& a : r.body_neg) g.body_neg.push_back(substituted(a, sub));
            sort_unique(g.head);
            sort_unique(g.body_pos);
            sort_unique(g.body_neg);
            if (seen.insert(rule_key(g)).second) {
                rules.push_back(std::move(g));
                if (rules.size() > opts.max_rules) throw GroundCapExceeded(opts.max_rules);
            }

            // next substitution
            std::size_t i = 0;
            for (; i < vars.size(); ++i) {
                if (++odometer[i] < universe.size()) break;
                odometer[i] = 0;
            }
            if (vars.empty() || i == vars.size()) break;
        }
    }

    GroundProgram out;
    out.universe.insert(universe.begin(), universe.end());
    std::set<std::string> atoms;
    for (const auto& r : rules) {
        atoms.insert(r.head.begin(), r.head.end());
        atoms.insert(r.body_pos.begin(), r.body_pos.end());
        atoms.insert(r.body_neg.begin(), r.body_neg.end());
    }
    out.atom_names.assign(atoms.begin(), atoms.end());
    for (AtomId id = 0; id < out.atom_names.size(); ++id) out.atom_index[out.atom_names[id]] = id;

    for (const auto& r : rules) {
        GroundRule g;
        auto conv = [&](const std::vector<std::string>& names, std::vector<AtomId>& ids) {
            for (const auto& n : names) ids.push_back(out.atom_index.at(n));
            std::sort(ids.begin(), ids.end());
        };
        conv(r.head, g.head);
        conv(r.body_pos, g.body_pos);
        conv(r.body_neg, g.body_neg);
        out.rules.push_back(std::move(g));
    }
    return out;
}

GroundProgram with_rules(const GroundProgram& base, std::vector<GroundRule> rules) {
    GroundProgram out;
    out.atom_names = base.atom_names;
    out.atom_index = base.atom_index;
    out.universe = base.universe;
    out.rules = std::move(rules);
    return out;
}

}  // namespace mfdlog
