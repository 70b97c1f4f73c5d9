#include <algorithm>
#include <cstdint>

#include "mfdlog/solver.hpp"

// Exhaustive reference enumeration. Deliberately independent of the guided
// solver: plain masks, full 2^n scans, and the textbook membership
// definitions applied one interpretation at a time.

namespace mfdlog {
namespace {

struct MaskRule {
    std::uint64_t head = 0, pos = 0, neg = 0;
};

bool sat(std::uint64_t v, const MaskRule& r) {
    return (r.head & v) || (r.pos & ~v) || (r.neg & v);
}

bool all_sat(std::uint64_t v, const std::vector<MaskRule>& rules) {
    for (const auto& r : rules)
        if (!sat(v, r)) return false;
    return true;
}

// founded closure confined to v
bool founded_mask(std::uint64_t v, const std::vector<MaskRule>& rules) {
    std::uint64_t x = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : rules) {
            if (r.neg & v) continue;       // dropped by the reduct
            if (r.pos & ~x) continue;      // positive body not derived yet
            std::uint64_t add = r.head & v & ~x;
            if (add) {
                x |= add;
                changed = true;
            }
        }
    }
    return (v & ~x) == 0;
}

bool stable_mask(std::uint64_t v, const std::vector<MaskRule>& rules) {
    std::vector<MaskRule> red;
    for (const auto& r : rules)
        if (!(r.neg & v)) red.push_back({r.head, r.pos, 0});
    if (!all_sat(v, red)) return false;
    // look for a model of the reduct strictly below v, smallest first
    std::vector<int> bits;
    for (int i = 0; i < 64; ++i)
        if (v & (std::uint64_t{1} << i)) bits.push_back(i);
    std::size_t nb = bits.size();
    for (std::size_t k = 0; k < nb; ++k) {
        std::vector<std::size_t> comb(k);
        for (std::size_t i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            std::uint64_t u = 0;
            for (std::size_t i : comb) u |= std::uint64_t{1} << bits[i];
            if (all_sat(u, red)) return false;
            if (k == 0) break;
            std::size_t i = k;
            while (i > 0 && comb[i - 1] == nb - (k - i) - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return true;
}

bool prefer_mask(std::uint64_t m, std::uint64_t n, const StratumMap& s) {
    if (m == n) return false;
    std::uint64_t mn = m & ~n, nm = n & ~m;
    if (!mn) return true;
    if (!nm) return false;
    auto min_level = [&](std::uint64_t set) {
        int best = INT32_MAX;
        for (int i = 0; i < 64; ++i)
            if (set & (std::uint64_t{1} << i)) best = std::min(best, s.level[i]);
        return best;
    };
    return min_level(mn) > min_level(nm);
}

Bitset to_bitset(std::uint64_t v, std::size_t n) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
        if (v & (std::uint64_t{1} << i)) b.set(i);
    return b;
}

}  // namespace

ModelSet oracle_enumerate(const GroundProgram& g, SemanticsKind kind, std::size_t cap) {
    std::size_t n = g.atom_count();
    if (n > cap || n > 63) throw OracleCapExceeded(n, std::min<std::size_t>(cap, 63));

    std::optional<StratumMap> strata;
    if (kind == SemanticsKind::Perfect) {
        strata = stratify(g);
        if (!strata) throw NotStratified();
    }

    std::vector<MaskRule> rules;
    for (const auto& r : g.rules) {
        MaskRule m;
        for (AtomId h : r.head) m.head |= std::uint64_t{1} << h;
        for (AtomId b : r.body_pos) m.pos |= std::uint64_t{1} << b;
        for (AtomId c : r.body_neg) m.neg |= std::uint64_t{1} << c;
        rules.push_back(m);
    }

    std::vector<std::uint64_t> models;
    std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < end; ++v)
        if (all_sat(v, rules)) models.push_back(v);

    std::vector<std::uint64_t> picked;
    auto minimal_models = [&] {
        std::vector<std::uint64_t> sorted = models;
        std::stable_sort(sorted.begin(), sorted.end(), [](std::uint64_t a, std::uint64_t b) {
            return __builtin_popcountll(a) < __builtin_popcountll(b);
        });
        std::vector<std::uint64_t> mm;
        for (std::uint64_t v : sorted) {
            bool has_sub = false;
            for (std::uint64_t f : mm)
                if (f != v && (f & ~v) == 0) {
                    has_sub = true;
                    break;
                }
            if (!has_sub) mm.push_back(v);
        }
        return mm;
    };

    switch (kind) {
        case SemanticsKind::AllModels:
            picked = models;
            break;
        case SemanticsKind::Minimal:
            picked = minimal_models();
            break;
        case SemanticsKind::Founded:
            for (std::uint64_t v : models)
                if (founded_mask(v, rules)) picked.push_back(v);
            break;
        case SemanticsKind::MinimalFounded:
            for (std::uint64_t v : minimal_models())
                if (founded_mask(v, rules)) picked.push_back(v);
            break;
        case SemanticsKind::Stable:
            for (std::uint64_t v : models)
                if (stable_mask(v, rules)) picked.push_back(v);
            break;
        case SemanticsKind::Perfect: {
            // dominators come from the head-bearing rules alone; denials
            // filter candidates but never remove a dominator
            std::vector<MaskRule> standard;
            for (const auto& r : rules)
                if (r.head) standard.push_back(r);
            for (std::uint64_t c : minimal_models()) {
                bool dominated = false;
                for (std::uint64_t v = 0; v < end && !dominated; ++v)
                    dominated = all_sat(v, standard) && prefer_mask(v, c, *strata);
                if (!dominated) picked.push_back(c);
            }
            break;
        }
    }

    ModelSet out;
    for (std::uint64_t v : picked) out.models.push_back(to_bitset(v, n));
    std::sort(out.models.begin(), out.models.end(), Bitset::model_order);
    return out;
}

}  // namespace mfdlog
