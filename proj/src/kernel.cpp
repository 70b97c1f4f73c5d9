#include "mfdlog/kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace mfdlog {

bool satisfies(const Interpretation& i, const GroundRule& r) {
    for (AtomId h : r.head)
        if (i.test(h)) return true;  // head true
    // head false: satisfied iff body false
    for (AtomId b : r.body_pos)
        if (!i.test(b)) return true;
    for (AtomId c : r.body_neg)
        if (i.test(c)) return true;
    return false;
}

bool is_model(const Interpretation& i, const std::vector<GroundRule>& rules) {
    for (const auto& r : rules)
        if (!satisfies(i, r)) return false;
    return true;
}

bool is_model(const Interpretation& i, const GroundProgram& g) { return is_model(i, g.rules); }

ReductProgram reduct(const std::vector<GroundRule>& rules, const Interpretation& i) {
    ReductProgram out;
    for (const auto& r : rules) {
        bool dropped = false;
        for (AtomId c : r.body_neg)
            if (i.test(c)) {
                dropped = true;
                break;
            }
        if (dropped) continue;
        out.rules.push_back({r.head, r.body_pos, {}});
    }
    return out;
}

ReductProgram reduct(const GroundProgram& g, const Interpretation& i) {
    return reduct(g.rules, i);
}

Bitset s_step(const ReductProgram& rp, const Bitset& x, std::size_t atom_count) {
    Bitset out(atom_count);
    for (const auto& r : rp.rules) {
        bool fires = true;
        for (AtomId b : r.body_pos)
            if (!x.test(b)) {
                fires = false;
                break;
            }
        if (!fires) continue;
        for (AtomId h : r.head) out.set(h);
    }
    return out;
}

Bitset s_fixpoint(const ReductProgram& rp, std::size_t atom_count) {
    Bitset x(atom_count);
    while (true) {
        Bitset next = s_step(rp, x, atom_count);
        next |= x;
        if (next == x) return x;
        x = std::move(next);
    }
}

Bitset t_fixpoint(const ReductProgram& rp, std::size_t atom_count) {
    for (const auto& r : rp.rules) {
        if (r.head.size() > 1)
            throw std::invalid_argument("t_fixpoint requires a normal program");
        if (r.head.empty())
            throw std::invalid_argument("t_fixpoint does not accept denials");
    }
    Bitset x(atom_count);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rp.rules) {
            if (x.test(r.head[0])) continue;
            bool fires = true;
            for (AtomId b : r.body_pos)
                if (!x.test(b)) {
                    fires = false;
                    break;
                }
            if (fires) {
                x.set(r.head[0]);
                changed = true;
            }
        }
    }
    return x;
}

Bitset founded_atoms(const GroundProgram& g, const Interpretation& m) {
    std::size_t n = g.atom_count();
    Bitset x(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : g.rules) {
            bool kept = true;
            for (AtomId c : r.body_neg)
                if (m.test(c)) {
                    kept = false;
                    break;
                }
            if (!kept) continue;
            bool fires = true;
            for (AtomId b : r.body_pos)
                if (!x.test(b)) {
                    fires = false;
                    break;
                }
            if (!fires) continue;
            for (AtomId h : r.head)
                if (m.test(h) && !x.test(h)) {
                    x.set(h);
                    changed = true;
                }
        }
    }
    return x;
}

bool is_founded(const Interpretation& m, const GroundProgram& g) {
    if (!is_model(m, g)) return false;
    return m.subset_of(founded_atoms(g, m));
}

SplitProgram head_delete(const GroundProgram& g, const Interpretation& m) {
    SplitProgram out;
    for (const auto& r : g.rules) {
        GroundRule t;
        for (AtomId h : r.head)
            if (m.test(h)) t.head.push_back(h);
        t.body_pos = r.body_pos;
        t.body_neg = r.body_neg;
        if (t.head.empty())
            out.denials.push_back(std::move(t));
        else
            out.standard.push_back(std::move(t));
    }
    return out;
}

std::vector<GroundRule> merged_rules(const SplitProgram& s) {
    std::vector<GroundRule> out = s.standard;
    out.insert(out.end(), s.denials.begin(), s.denials.end());
    return out;
}

Program rewrite_denials(const Program& p) {
    Program out;
    out.declared_edb = p.declared_edb;
    std::size_t k = 0;
    for (const auto& r : p.rules) {
        if (!r.is_denial()) {
            out.rules.push_back(r);
            continue;
        }
        ++k;
        Atom aux;
        aux.predicate = "__c" + std::to_string(k);
        std::vector<std::string> seen;
        auto collect = [&](const std::vector<Atom>& atoms) {
            for (const auto& a : atoms)
                for (const auto& t : a.args)
                    if (t.is_variable() &&
                        std::find(seen.begin(), seen.end(), t.name) == seen.end()) {
                        seen.push_back(t.name);
                        aux.args.push_back(t);
                    }
        };
        collect(r.body_pos);
        collect(r.body_neg);

        Rule rewritten;
        rewritten.head.push_back(aux);
        rewritten.body_pos = r.body_pos;
        rewritten.body_neg = r.body_neg;
        rewritten.body_neg.push_back(aux);
        out.rules.push_back(std::move(rewritten));
    }
    return out;
}

}  // namespace mfdlog
