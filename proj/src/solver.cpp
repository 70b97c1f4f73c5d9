#include "mfdlog/solver.hpp"

#include <algorithm>
#include <limits>

namespace mfdlog {

const char* to_string(SemanticsKind k) {
    switch (k) {
        case SemanticsKind::AllModels: return "models";
        case SemanticsKind::Minimal: return "mm";
        case SemanticsKind::Founded: return "f";
        case SemanticsKind::MinimalFounded: return "mf";
        case SemanticsKind::Stable: return "sm";
        case SemanticsKind::Perfect: return "pm";
    }
    return "?";
}

SemanticsKind semantics_from_string(const std::string& s) {
    if (s == "models") return SemanticsKind::AllModels;
    if (s == "mm") return SemanticsKind::Minimal;
    if (s == "f") return SemanticsKind::Founded;
    if (s == "mf") return SemanticsKind::MinimalFounded;
    if (s == "sm") return SemanticsKind::Stable;
    if (s == "pm") return SemanticsKind::Perfect;
    throw std::invalid_argument("unknown semantics '" + s + "'");
}

namespace {

// A ground rule as a clause over atom membership. Satisfied when some atom
// of `pos` is in the interpretation or some atom of `neg` is out.
struct Clause {
    Bitset pos;  // head atoms and negative body atoms
    Bitset neg;  // positive body atoms
};

Clause clause_of(const GroundRule& r, std::size_t n) {
    Clause c{Bitset(n), Bitset(n)};
    for (AtomId h : r.head) c.pos.set(h);
    for (AtomId a : r.body_neg) c.pos.set(a);
    for (AtomId b : r.body_pos) c.neg.set(b);
    return c;
}

// Undecided literals of a clause under the partial assignment (t, f),
// without allocating: positive literals live in pos - t - f, negative ones
// in neg - t - f. Stops counting at two.
struct UnitScan {
    int undecided = 0;
    std::size_t atom = 0;
    bool positive = false;
};

UnitScan scan_clause(const Clause& c, const Bitset& t, const Bitset& f) {
    UnitScan u;
    for (std::size_t w = 0; w < t.word_count() && u.undecided < 2; ++w) {
        std::uint64_t undecided_mask = ~t.word(w) & ~f.word(w);
        std::uint64_t up = c.pos.word(w) & undecided_mask;
        std::uint64_t un = c.neg.word(w) & undecided_mask;
        int bits = __builtin_popcountll(up) + __builtin_popcountll(un);
        if (bits == 0) continue;
        u.undecided += bits;
        if (u.undecided == 1) {
            u.positive = up != 0;
            u.atom = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(up ? up : un));
        }
    }
    return u;
}

// DPLL search for a satisfying assignment over the atoms of `m` (everything
// else fixed false) that differs from the all-true one, i.e. a model of the
// rules strictly below m. Unit propagation only; no learning.
class SmallerModelSearch {
public:
    SmallerModelSearch(const std::vector<GroundRule>& rules, const Bitset& m, std::size_t n)
        : n_(n) {
        for (const auto& r : rules) {
            // restrict to subsets of m: atoms outside m are false
            bool satisfied = false;
            for (AtomId b : r.body_pos)
                if (!m.test(b)) {
                    satisfied = true;  // body can never hold below m
                    break;
                }
            if (satisfied) continue;
            Clause c{Bitset(n), Bitset(n)};
            for (AtomId h : r.head)
                if (m.test(h)) c.pos.set(h);
            // a negative body atom outside m stays false below m, so the
            // corresponding clause literal simply disappears
            for (AtomId a : r.body_neg)
                if (m.test(a)) c.pos.set(a);
            for (AtomId b : r.body_pos) c.neg.set(b);
            clauses_.push_back(std::move(c));
        }
        // require at least one atom of m to be false
        Clause strict{Bitset(n), Bitset(n)};
        strict.neg = m;
        clauses_.push_back(std::move(strict));
        vars_ = m.to_indices();
    }

    bool smaller_model_exists() {
        Bitset t(n_), f(n_);
        return dfs(t, f, 0);
    }

private:
    bool dfs(Bitset t, Bitset f, std::size_t next_var) {
        if (!propagate(t, f)) return false;
        std::size_t var = n_;
        for (std::size_t i = next_var; i < vars_.size(); ++i) {
            std::size_t v = vars_[i];
            if (!t.test(v) && !f.test(v)) {
                var = v;
                next_var = i;
                break;
            }
        }
        if (var == n_) return true;  // total assignment, all clauses satisfied
        {
            Bitset t2 = t, f2 = f;
            f2.set(var);
            if (dfs(std::move(t2), std::move(f2), next_var + 1)) return true;
        }
        t.set(var);
        return dfs(std::move(t), std::move(f), next_var + 1);
    }

    // false on conflict
    bool propagate(Bitset& t, Bitset& f) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& c : clauses_) {
                if (c.pos.intersects(t)) continue;
                if (c.neg.intersects(f)) continue;
                UnitScan u = scan_clause(c, t, f);
                if (u.undecided == 0) return false;
                if (u.undecided == 1) {
                    if (u.positive)
                        t.set(u.atom);
                    else
                        f.set(u.atom);
                    changed = true;
                }
            }
        }
        return true;
    }

    std::size_t n_;
    std::vector<Clause> clauses_;
    std::vector<std::size_t> vars_;
};

bool has_proper_submodel(const std::vector<GroundRule>& rules, const Bitset& m, std::size_t n) {
    if (m.none()) return false;
    return SmallerModelSearch(rules, m, n).smaller_model_exists();
}

}  // namespace

bool is_minimal_model(const Interpretation& m, const GroundProgram& g) {
    if (!is_model(m, g)) return false;
    return !has_proper_submodel(g.rules, m, g.atom_count());
}

bool is_stable(const Interpretation& m, const GroundProgram& g) {
    ReductProgram rp = reduct(g, m);
    if (!is_model(m, rp.rules)) return false;
    return !has_proper_submodel(rp.rules, m, g.atom_count());
}

bool is_minimal_founded(const Interpretation& m, const GroundProgram& g) {
    return is_minimal_model(m, g) && is_founded(m, g);
}

bool characterization_check(const Interpretation& m, const GroundProgram& g) {
    if (!is_minimal_model(m, g)) return false;
    SplitProgram split = head_delete(g, m);
    for (const auto& d : split.denials)
        if (!satisfies(m, d)) return false;
    GroundProgram standard = with_rules(g, split.standard);
    return is_founded(m, standard);
}

bool prefer(const Interpretation& m, const Interpretation& n, const StratumMap& s) {
    if (m == n) return false;
    Bitset mn = m;
    mn.subtract(n);
    Bitset nm = n;
    nm.subtract(m);
    if (mn.none()) return true;  // proper subset
    if (nm.none()) return false;
    int min_mn = std::numeric_limits<int>::max();
    for (std::size_t a = mn.next(0); a < mn.universe_size(); a = mn.next(a + 1))
        min_mn = std::min(min_mn, s.level[a]);
    int min_nm = std::numeric_limits<int>::max();
    for (std::size_t b = nm.next(0); b < nm.universe_size(); b = nm.next(b + 1))
        min_nm = std::min(min_nm, s.level[b]);
    return min_mn > min_nm;
}

// ---------------------------------------------------------------------------
// guided enumeration

namespace {

class Enumerator {
public:
    Enumerator(const GroundProgram& g, SemanticsKind kind, const SolveOptions& opts)
        : g_(g), kind_(kind), n_(g.atom_count()), budget_(opts.budget) {
        minimal_kind_ = kind == SemanticsKind::Minimal || kind == SemanticsKind::MinimalFounded ||
                        kind == SemanticsKind::Stable;
        founded_kind_ = kind == SemanticsKind::Founded ||
                        kind == SemanticsKind::MinimalFounded || kind == SemanticsKind::Stable;
        for (const auto& r : g.rules) clauses_.push_back(clause_of(r, n_));
        if (founded_kind_) {
            for (const auto& r : g.rules) {
                MaskRule m{Bitset(n_), Bitset(n_), Bitset(n_)};
                for (AtomId h : r.head) m.head.set(h);
                for (AtomId b : r.body_pos) m.pos.set(b);
                for (AtomId c : r.body_neg) m.neg.set(c);
                mask_rules_.push_back(std::move(m));
            }
        }
        compute_ranks();
    }

    ModelSet run() {
        Bitset t(n_), f(n_);
        if (founded_kind_) {
            // atoms that no reduct can ever derive are false in every
            // founded model
            for (std::size_t a = 0; a < n_; ++a)
                if (rank_[a] == SIZE_MAX) f.set(a);
        }
        bool consistent = propagate(t, f);
        if (consistent) {
            if (minimal_kind_ && founded_kind_) {
                // The founded-closure pruning keeps this tree small, so one
                // pass collects every candidate model; they are then
                // processed in non-decreasing cardinality with superset
                // pruning, exactly as the per-cardinality search would.
                exploring_ = true;
                target_card_ = SIZE_MAX;
                dfs(t, f, 0);
                exploring_ = false;
                std::sort(stored_leaves_.begin(), stored_leaves_.end(), Bitset::model_order);
                for (const auto& m : stored_leaves_) {
                    if (exhausted_) break;
                    bool superset = false;
                    for (const auto& fm : found_minimal_)
                        if (fm.subset_of(m)) {
                            superset = true;
                            break;
                        }
                    if (superset) continue;
                    target_card_ = m.count();
                    leaf(m);
                }
            } else if (minimal_kind_) {
                // nothing lives below the propagation-forced floor or above
                // the forced ceiling
                std::size_t k_min = t.count(), k_max = n_ - f.count();
                for (target_card_ = k_min; target_card_ <= k_max && !exhausted_; ++target_card_)
                    dfs(t, f, 0);
            } else {
                target_card_ = SIZE_MAX;
                dfs(t, f, 0);
            }
        }
        ModelSet out;
        out.models = std::move(results_);
        std::sort(out.models.begin(), out.models.end(), Bitset::model_order);
        out.budget_exhausted = exhausted_;
        out.complete = !exhausted_;
        return out;
    }

private:
    void compute_ranks() {
        // Derivation layer of each atom in the most permissive reduct (all
        // negative literals stripped); drives branching order and the
        // founded-kind pruning.
        rank_.assign(n_, SIZE_MAX);
        Bitset x(n_);
        std::size_t layer = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            ++layer;
            Bitset next = x;
            for (const auto& r : g_.rules) {
                bool fires = true;
                for (AtomId b : r.body_pos)
                    if (!x.test(b)) {
                        fires = false;
                        break;
                    }
                if (!fires) continue;
                for (AtomId h : r.head)
                    if (!next.test(h)) {
                        next.set(h);
                        rank_[h] = layer;
                        changed = true;
                    }
            }
            x = std::move(next);
        }
        order_.resize(n_);
        for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return rank_[a] < rank_[b]; });
    }

    bool charge() {
        if (exhausted_) return false;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        return true;
    }

    void dfs(Bitset t, Bitset f, std::size_t order_pos) {
        if (!charge()) return;
        if (!propagate(t, f)) return;
        std::size_t tc = t.count();
        if (minimal_kind_ && !exploring_) {
            if (tc > target_card_) return;
            if (tc + (n_ - tc - f.count()) < target_card_) return;
            for (const auto& fm : found_minimal_)
                if (fm.subset_of(t)) return;  // any completion is a superset
        }
        std::size_t var = n_;
        while (order_pos < n_) {
            std::size_t v = order_[order_pos];
            if (!t.test(v) && !f.test(v)) {
                var = v;
                break;
            }
            ++order_pos;
        }
        if (var == n_) {
            leaf(t);
            return;
        }
        {
            Bitset t2 = t, f2 = f;
            f2.set(var);
            dfs(std::move(t2), std::move(f2), order_pos + 1);
        }
        if (exhausted_) return;
        t.set(var);
        dfs(std::move(t), std::move(f), order_pos + 1);
    }

    void leaf(const Bitset& m) {
        if (exploring_) {
            if (is_model(m, g_)) stored_leaves_.push_back(m);
            return;
        }
        if (minimal_kind_ && m.count() != target_card_) return;
        if (!is_model(m, g_)) return;
        switch (kind_) {
            case SemanticsKind::AllModels:
                results_.push_back(m);
                break;
            case SemanticsKind::Founded:
                if (is_founded(m, g_)) results_.push_back(m);
                break;
            case SemanticsKind::Minimal:
                if (is_minimal_model(m, g_)) {
                    found_minimal_.push_back(m);
                    results_.push_back(m);
                }
                break;
            case SemanticsKind::MinimalFounded:
                if (is_minimal_model(m, g_)) {
                    found_minimal_.push_back(m);
                    if (is_founded(m, g_)) results_.push_back(m);
                }
                break;
            case SemanticsKind::Stable:
                if (is_minimal_model(m, g_)) found_minimal_.push_back(m);
                if (is_stable(m, g_)) results_.push_back(m);
                break;
            case SemanticsKind::Perfect:
                break;  // handled by perfect_models
        }
    }

    bool propagate(Bitset& t, Bitset& f) {
        while (true) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& c : clauses_) {
                    if (c.pos.intersects(t)) continue;
                    if (c.neg.intersects(f)) continue;
                    UnitScan u = scan_clause(c, t, f);
                    if (u.undecided == 0) return false;
                    if (u.undecided == 1) {
                        if (u.positive)
                            t.set(u.atom);
                        else
                            f.set(u.atom);
                        changed = true;
                    }
                }
            }
            if (!founded_kind_) return true;
            Bitset bound = founded_bound(t, f);
            if (!t.subset_of(bound)) return false;
            bool forced = false;
            for (std::size_t w = 0; w < bound.word_count(); ++w) {
                std::uint64_t dead = ~bound.word(w) & ~f.word(w) & ~t.word(w);
                while (dead) {
                    std::size_t a = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(dead));
                    if (a >= n_) break;
                    f.set(a);
                    forced = true;
                    dead &= dead - 1;
                }
            }
            if (!forced) return true;
        }
    }

    // Upper bound on the founded closure of any completion: keeps every rule
    // whose negative body is not already contradicted, confines derived
    // heads to atoms not yet decided false.
    Bitset founded_bound(const Bitset& t, const Bitset& f) const {
        Bitset x(n_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : mask_rules_) {
                if (r.neg.intersects(t)) continue;
                if (!r.pos.subset_of(x)) continue;
                changed |= x.set_masked(r.head, f);
            }
        }
        return x;
    }

    struct MaskRule {
        Bitset head, pos, neg;
    };

    const GroundProgram& g_;
    SemanticsKind kind_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    bool minimal_kind_ = false;
    bool founded_kind_ = false;
    bool exploring_ = false;
    std::size_t target_card_ = 0;
    std::vector<Clause> clauses_;
    std::vector<MaskRule> mask_rules_;
    std::vector<std::size_t> rank_;
    std::vector<std::size_t> order_;
    std::vector<Bitset> stored_leaves_;
    std::vector<Bitset> found_minimal_;
    std::vector<Bitset> results_;
};

}  // namespace

// ---------------------------------------------------------------------------
// perfect models

namespace {

int rule_level(const GroundRule& r, const StratumMap& s) {
    if (!r.head.empty()) return s.level[r.head[0]];
    int l = 0;
    for (AtomId b : r.body_pos) l = std::max(l, s.level[b]);
    for (AtomId c : r.body_neg) l = std::max(l, s.level[c]);
    return l;
}

// Layer-by-layer composition of minimal models, one stratum at a time.
ModelSet perfect_layered(const GroundProgram& g, const StratumMap& s, const SolveOptions& opts) {
    std::size_t n = g.atom_count();
    std::uint64_t budget = opts.budget;
    std::vector<Bitset> partials{Bitset(n)};
    for (int l = 0; l <= s.max_level; ++l) {
        std::vector<AtomId> layer_atoms;
        for (AtomId a = 0; a < n; ++a)
            if (s.level[a] == l) layer_atoms.push_back(a);
        std::vector<const GroundRule*> layer_rules;
        for (const auto& r : g.rules)
            if (rule_level(r, s) == l) layer_rules.push_back(&r);
        if (layer_rules.empty() && layer_atoms.empty()) continue;

        std::vector<Bitset> next;
        for (const auto& base : partials) {
            // minimal extensions over the layer atoms, by cardinality
            std::vector<Bitset> accepted;
            std::size_t k_max = layer_atoms.size();
            std::vector<std::size_t> comb;
            for (std::size_t k = 0; k <= k_max; ++k) {
                comb.assign(k, 0);
                for (std::size_t i = 0; i < k; ++i) comb[i] = i;
                while (true) {
                    if (budget == 0) return {.models = {}, .complete = false, .budget_exhausted = true};
                    --budget;
                    Bitset ext(n);
                    for (std::size_t i : comb) ext.set(layer_atoms[i]);
                    bool dominated = false;
                    for (const auto& a : accepted)
                        if (a.subset_of(ext)) {
                            dominated = true;
                            break;
                        }
                    if (!dominated) {
                        Bitset cand = base;
                        cand |= ext;
                        bool ok = true;
                        for (const auto* r : layer_rules)
                            if (!satisfies(cand, *r)) {
                                ok = false;
                                break;
                            }
                        if (ok) {
                            accepted.push_back(ext);
                            next.push_back(cand);
                        }
                    }
                    // next k-combination
                    if (k == 0) break;
                    std::size_t i = k;
                    while (i > 0 && comb[i - 1] == k_max - (k - i) - 1) --i;
                    if (i == 0) break;
                    ++comb[i - 1];
                    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
                }
            }
        }
        partials = std::move(next);
        if (partials.empty()) break;
    }
    ModelSet out;
    out.models = std::move(partials);
    std::sort(out.models.begin(), out.models.end(), Bitset::model_order);
    return out;
}

}  // namespace

namespace {

// Dominators for the priority order range over models of the head-bearing
// rules alone; denials only filter candidates. Anything else would let a
// denial delete a model's dominators and promote unsupported models.
GroundProgram standard_part(const GroundProgram& g) {
    std::vector<GroundRule> std_rules;
    for (const auto& r : g.rules)
        if (!r.head.empty()) std_rules.push_back(r);
    return with_rules(g, std::move(std_rules));
}

}  // namespace

ModelSet perfect_models(const GroundProgram& g, const StratumMap& s, const SolveOptions& opts) {
    ModelSet all = enumerate(g, SemanticsKind::AllModels, opts);
    ModelSet dominators = enumerate(standard_part(g), SemanticsKind::AllModels, opts);
    if (!all.complete || !dominators.complete)
        return {.models = {}, .complete = false, .budget_exhausted = true};
    ModelSet by_order;
    for (const auto& m : all.models) {
        bool dominated = false;
        for (const auto& other : dominators.models)
            if (prefer(other, m, s)) {
                dominated = true;
                break;
            }
        if (!dominated) by_order.models.push_back(m);
    }
    std::sort(by_order.models.begin(), by_order.models.end(), Bitset::model_order);

    ModelSet layered = perfect_layered(g, s, opts);
    if (!layered.complete) return {.models = {}, .complete = false, .budget_exhausted = true};
    if (layered.models != by_order.models)
        throw std::logic_error("perfect model computations disagree");
    return layered;
}

bool is_perfect(const Interpretation& m, const GroundProgram& g, const StratumMap& s,
                const SolveOptions& opts) {
    if (!is_model(m, g)) return false;
    ModelSet dominators = enumerate(standard_part(g), SemanticsKind::AllModels, opts);
    if (!dominators.complete)
        throw std::runtime_error("budget exhausted while checking perfection");
    for (const auto& other : dominators.models)
        if (prefer(other, m, s)) return false;
    return true;
}

ModelSet enumerate(const GroundProgram& g, SemanticsKind kind, const SolveOptions& opts) {
    if (kind == SemanticsKind::Perfect) {
        auto s = stratify(g);
        if (!s) throw NotStratified();
        return perfect_models(g, *s, opts);
    }
    return Enumerator(g, kind, opts).run();
}

}  // namespace mfdlog
