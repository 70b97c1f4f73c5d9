// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "support.hpp"

using namespace mfdlog;
using testutil::Rng;
using testutil::interp;
using testutil::name_sets;

namespace {

using Names = std::set<std::set<std::string>>;

Names sets(std::initializer_list<std::set<std::string>> xs) { return Names(xs); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& why) {
        if (!cond && pass) {
            pass = false;
            detail = why;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------------------

Outcome criterion_1_example_corpus() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();

    GroundProgram p1 = testutil::ground_corpus("p1.dl");
    o.require(name_sets(p1, enumerate(p1, SemanticsKind::MinimalFounded)) == sets({{"a", "b"}}),
              "p1 MF != {{a,b}}");
    o.require(enumerate(p1, SemanticsKind::Stable).models.empty(), "p1 SM != {}");

    GroundProgram p5 = testutil::ground_corpus("p5.dl");
    Names p5_expected = sets({{"a"}, {"b", "c"}});
    o.require(name_sets(p5, enumerate(p5, SemanticsKind::Stable)) == p5_expected,
              "p5 SM != {{a},{b,c}}");
    o.require(name_sets(p5, enumerate(p5, SemanticsKind::MinimalFounded)) == p5_expected,
              "p5 MF != SM");

    GroundProgram p6 = testutil::ground_corpus("p6.dl");
    o.require(name_sets(p6, enumerate(p6, SemanticsKind::MinimalFounded)) ==
                  sets({{"a", "b"}, {"a", "c"}, {"b", "c"}}),
              "p6 MF wrong");
    o.require(enumerate(p6, SemanticsKind::Stable).models.empty(), "p6 SM != {}");

    GroundProgram p7 = testutil::ground_corpus("p7.dl");
    o.require(name_sets(p7, enumerate(p7, SemanticsKind::MinimalFounded)) ==
                  sets({{"eat", "thirsty"}, {"eat", "drink"}}),
              "p7 MF wrong");
    o.require(name_sets(p7, enumerate(p7, SemanticsKind::Stable)) == sets({{"eat", "thirsty"}}),
              "p7 SM wrong");

    GroundProgram choice = testutil::ground_corpus("choice.dl");
    o.require(name_sets(choice, enumerate(choice, SemanticsKind::Minimal)) ==
                  sets({{"a"}, {"b"}}),
              "a|b MM wrong");

    GroundProgram layered = testutil::ground_corpus("choice_neg.dl");
    o.require(name_sets(layered, enumerate(layered, SemanticsKind::Perfect)) ==
                  sets({{"a"}, {"b"}}),
              "a|b :- not c PM wrong");

    double t = seconds_since(start);
    o.require(t < 1.0, "runtime " + std::to_string(t) + "s >= 1s");
    if (o.pass) o.detail = "6 programs, exact sets";
    return o;
}

Outcome criterion_2_containment_chain() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Rng rng(100001);
    for (int round = 0; round < 500 && o.pass; ++round) {
        GroundProgram g = testutil::random_ground_program(rng, {});
        auto sm = name_sets(g, enumerate(g, SemanticsKind::Stable));
        auto mf = name_sets(g, enumerate(g, SemanticsKind::MinimalFounded));
        auto mm = name_sets(g, enumerate(g, SemanticsKind::Minimal));
        o.require(std::includes(mf.begin(), mf.end(), sm.begin(), sm.end()),
                  "SM not within MF at round " + std::to_string(round));
        o.require(std::includes(mm.begin(), mm.end(), mf.begin(), mf.end()),
                  "MF not within MM at round " + std::to_string(round));
    }
    double t = seconds_since(start);
    o.require(t < 60.0, "runtime " + std::to_string(t) + "s >= 60s");
    if (o.pass) o.detail = "500 programs";
    return o;
}

Outcome criterion_3_normal_equivalence() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Rng rng(100002);
    for (int round = 0; round < 500 && o.pass; ++round) {
        testutil::RandomProgramParams pp;
        pp.normal = true;
        pp.denial_rate = 0.15;
        GroundProgram g = testutil::random_ground_program(rng, pp);
        o.require(enumerate(g, SemanticsKind::Stable).models ==
                      enumerate(g, SemanticsKind::MinimalFounded).models,
                  "SM != MF on a normal program at round " + std::to_string(round));
    }
    double t = seconds_since(start);
    o.require(t < 60.0, "runtime " + std::to_string(t) + "s >= 60s");
    if (o.pass) o.detail = "500 normal programs";
    return o;
}

Outcome criterion_4_positive_equivalence() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Rng rng(100003);
    for (int round = 0; round < 500 && o.pass; ++round) {
        testutil::RandomProgramParams pp;
        pp.positive = true;
        GroundProgram g = testutil::random_ground_program(rng, pp);
        o.require(enumerate(g, SemanticsKind::Minimal).models ==
                      enumerate(g, SemanticsKind::MinimalFounded).models,
                  "MM != MF on a positive program at round " + std::to_string(round));
    }
    double t = seconds_since(start);
    o.require(t < 60.0, "runtime " + std::to_string(t) + "s >= 60s");
    if (o.pass) o.detail = "500 positive programs";
    return o;
}

Outcome criterion_5_characterization_agreement() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Rng rng(100004);
    long checked = 0;
    for (int round = 0; round < 500 && o.pass; ++round) {
        GroundProgram g = testutil::random_ground_program(rng, {});
        std::size_t n = g.atom_count();
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n) && o.pass; ++v) {
            Interpretation m(n);
            for (std::size_t i = 0; i < n; ++i)
                if (v & (std::uint64_t{1} << i)) m.set(i);
            ++checked;
            o.require(characterization_check(m, g) == is_minimal_founded(m, g),
                      "disagreement at round " + std::to_string(round) + ", mask " +
                          std::to_string(v));
        }
    }
    if (o.pass)
        o.detail = "500 programs, " + std::to_string(checked) + " interpretations, " +
                   std::to_string(seconds_since(start)) + "s";
    return o;
}

Outcome criterion_6_head_deletion_fixpoint() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Rng rng(100005);
    long checked = 0;
    for (int round = 0; round < 400 && o.pass; ++round) {
        GroundProgram g = testutil::random_ground_program(rng, {});
        std::size_t n = g.atom_count();
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << n) && o.pass; ++v) {
            Interpretation m(n);
            for (std::size_t i = 0; i < n; ++i)
                if (v & (std::uint64_t{1} << i)) m.set(i);
            GroundProgram transformed = with_rules(g, merged_rules(head_delete(g, m)));
            ++checked;
            o.require(is_minimal_founded(m, g) == is_minimal_founded(m, transformed),
                      "disagreement at round " + std::to_string(round) + ", mask " +
                          std::to_string(v));
        }
    }
    if (o.pass)
        o.detail = "400 programs, " + std::to_string(checked) + " interpretations, " +
                   std::to_string(seconds_since(start)) + "s";
    return o;
}

Outcome criterion_7_oracle_equivalence() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    const std::array<SemanticsKind, 6> kinds = {
        SemanticsKind::AllModels, SemanticsKind::Minimal,        SemanticsKind::Founded,
        SemanticsKind::Stable,    SemanticsKind::MinimalFounded, SemanticsKind::Perfect};

    auto compare = [&](const GroundProgram& g, const std::string& label) {
        for (auto kind : kinds) {
            if (!o.pass) return;
            bool engine_throws = false, oracle_throws = false;
            ModelSet a, b;
            try {
                a = enumerate(g, kind);
            } catch (const NotStratified&) {
                engine_throws = true;
            }
            try {
                b = oracle_enumerate(g, kind);
            } catch (const NotStratified&) {
                oracle_throws = true;
            }
            o.require(engine_throws == oracle_throws,
                      label + ": stratification verdicts differ for " +
                          std::string(to_string(kind)));
            if (engine_throws || !o.pass) continue;
            o.require(a.complete, label + ": engine budget exhausted");
            o.require(a.models == b.models,
                      label + ": engine and oracle differ for " + std::string(to_string(kind)));
        }
    };

    compare(testutil::ground_corpus("p1.dl"), "p1");
    compare(testutil::ground_corpus("p5.dl"), "p5");
    compare(testutil::ground_corpus("p6.dl"), "p6");
    compare(testutil::ground_corpus("p7.dl"), "p7");
    compare(testutil::ground_corpus("choice.dl"), "choice");
    compare(testutil::ground_corpus("choice_neg.dl"), "choice_neg");
    {
        // two-constant database keeps the ground base within oracle reach
        Program dns = parse_program(testutil::read_corpus("dns.dl"));
        Database d = parse_database("dns(d1, d1, d2).");
        compare(ground(attach_database(dns, d)), "dns");
    }
    {
        Program kernel = parse_program(testutil::read_corpus("kernel.dl"));
        testutil::Digraph g2{2, {{1, 2}, {2, 2}}};
        compare(ground(attach_database(kernel, testutil::digraph_db(g2))), "kernel-2v");
    }
    {
        testutil::Sat3Instance tiny{3, {{{1, 2, 3}, {true, false, true}}}};
        compare(ground(testutil::sat3_ground_program(tiny)), "sat3-1clause");
    }

    Rng rng(100006);
    for (int round = 0; round < 200 && o.pass; ++round) {
        testutil::RandomProgramParams pp;
        pp.min_atoms = 2;
        pp.max_atoms = 16;
        pp.max_rules = 14;
        GroundProgram g = testutil::random_ground_program(rng, pp);
        compare(g, "random round " + std::to_string(round));
    }
    double t = seconds_since(start);
    o.require(t < 120.0, "runtime " + std::to_string(t) + "s >= 120s");
    if (o.pass) o.detail = "9 corpus + 200 random programs, 6 kinds, " + std::to_string(t) + "s";
    return o;
}

Outcome criterion_8_graph_kernel() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Program kernel = parse_program(testutil::read_corpus("kernel.dl"));

    auto engine_kernel_verdict = [&](const testutil::Digraph& dg) {
        GroundProgram g = ground(attach_database(kernel, testutil::digraph_db(dg)));
        ModelSet mf = enumerate(g, SemanticsKind::MinimalFounded);
        if (!mf.complete) throw std::runtime_error("budget exhausted");
        auto gid = g.find("g");
        for (const auto& m : mf.models)
            if (!gid || !m.test(*gid)) return true;  // g false somewhere
        return false;
    };
    auto oracle_kernel_verdict = [&](const testutil::Digraph& dg, std::size_t cap) {
        GroundProgram g = ground(attach_database(kernel, testutil::digraph_db(dg)));
        ModelSet mf = oracle_enumerate(g, SemanticsKind::MinimalFounded, cap);
        auto gid = g.find("g");
        for (const auto& m : mf.models)
            if (!gid || !m.test(*gid)) return true;
        return false;
    };

    // oracle validation: every digraph on <= 2 vertices, then one 3-vertex
    // graph without a kernel (the directed 3-cycle) under a raised cap
    for (int n = 0; n <= 2 && o.pass; ++n) {
        std::uint64_t graphs = std::uint64_t{1} << (n * n);
        for (std::uint64_t mask = 0; mask < graphs && o.pass; ++mask) {
            testutil::Digraph dg = testutil::digraph_from_mask(n, mask);
            bool expected = testutil::kernel_exists_brute(dg);
            o.require(oracle_kernel_verdict(dg, 20) == expected,
                      "oracle disagrees with kernel search at n=" + std::to_string(n) +
                          " mask=" + std::to_string(mask));
            o.require(engine_kernel_verdict(dg) == expected,
                      "engine disagrees at n=" + std::to_string(n) +
                          " mask=" + std::to_string(mask));
        }
    }
    if (o.pass) {
        testutil::Digraph cycle3{3, {{1, 2}, {2, 3}, {3, 1}}};
        o.require(!testutil::kernel_exists_brute(cycle3), "3-cycle should have no kernel");
        o.require(oracle_kernel_verdict(cycle3, 28) == false, "oracle wrong on the 3-cycle");
        o.require(engine_kernel_verdict(cycle3) == false, "engine wrong on the 3-cycle");
    }

    // engine vs independent kernel search: every digraph on <= 4 vertices
    for (int n = 3; n <= 4 && o.pass; ++n) {
        std::uint64_t graphs = std::uint64_t{1} << (n * n);
        for (std::uint64_t mask = 0; mask < graphs && o.pass; ++mask) {
            testutil::Digraph dg = testutil::digraph_from_mask(n, mask);
            o.require(engine_kernel_verdict(dg) == testutil::kernel_exists_brute(dg),
                      "engine disagrees at n=" + std::to_string(n) +
                          " mask=" + std::to_string(mask));
        }
    }

    // 100 random digraphs on 5 and 6 vertices
    Rng rng(100007);
    for (int round = 0; round < 100 && o.pass; ++round) {
        int n = 5 + rng.below(2);
        testutil::Digraph dg{n, {}};
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (rng.chance(0.3)) dg.edges.insert({i, j});
        o.require(engine_kernel_verdict(dg) == testutil::kernel_exists_brute(dg),
                  "engine disagrees on a random graph at round " + std::to_string(round));
    }

    double t = seconds_since(start);
    o.require(t < 180.0, "runtime " + std::to_string(t) + "s >= 180s");
    if (o.pass)
        o.detail = "all digraphs to n=4 plus 100 random n=5..6, " + std::to_string(t) + "s";
    return o;
}

Outcome criterion_9_sat3() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Rng rng(100008);
    for (int round = 0; round < 50 && o.pass; ++round) {
        testutil::Sat3Instance ins;
        ins.nvars = 3 + rng.below(2);
        int nclauses = 1 + rng.below(5);
        for (int c = 0; c < nclauses; ++c) {
            testutil::Sat3Clause cl{};
            // three distinct variables per clause
            std::vector<int> vars;
            for (int v = 1; v <= ins.nvars; ++v) vars.push_back(v);
            for (int k = 0; k < 3; ++k) {
                int pick = rng.below(static_cast<int>(vars.size()));
                cl.var[k] = vars[pick];
                vars.erase(vars.begin() + pick);
                cl.positive[k] = rng.chance(0.5);
            }
            ins.clauses.push_back(cl);
        }

        GroundProgram g = ground(testutil::sat3_ground_program(ins));
        ModelSet mf = enumerate(g, SemanticsKind::MinimalFounded);
        o.require(mf.complete, "budget exhausted at round " + std::to_string(round));

        std::set<std::vector<bool>> projected;
        for (const auto& m : mf.models) {
            std::vector<bool> assign(ins.nvars);
            bool total = true;
            for (int v = 1; v <= ins.nvars; ++v) {
                bool tru = m.test(*g.find("val(x" + std::to_string(v) + ",true)"));
                bool fal = m.test(*g.find("val(x" + std::to_string(v) + ",false)"));
                if (tru == fal) total = false;
                assign[v - 1] = tru;
            }
            o.require(total, "MF model is not a total assignment at round " +
                                 std::to_string(round));
            projected.insert(assign);
        }
        o.require(projected.size() == mf.models.size(),
                  "projection collapsed models at round " + std::to_string(round));
        o.require(projected == testutil::sat3_solutions_brute(ins),
                  "MF projection differs from the truth table at round " +
                      std::to_string(round));
    }
    if (o.pass) o.detail = "50 instances, " + std::to_string(seconds_since(start)) + "s";
    return o;
}

Outcome criterion_10_denial_rewrite() {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    Rng rng(100009);
    int mf_equal = 0, mf_diff = 0;
    for (int round = 0; round < 200 && o.pass; ++round) {
        testutil::RandomProgramParams pp;
        pp.max_atoms = 7;
        pp.max_rules = 10;
        pp.denial_rate = 0.35;
        GroundProgram g;
        bool has_denial = false;
        while (!has_denial) {
            g = testutil::random_ground_program(rng, pp);
            for (const auto& r : g.rules) has_denial = has_denial || r.is_denial();
        }
        Program original = parse_program_raw(g.to_string());
        Program rewritten = rewrite_denials(original);
        GroundProgram g0 = ground(original);
        GroundProgram g1 = ground(rewritten);

        auto project = [&](const GroundProgram& gp, const ModelSet& ms) {
            Names out;
            for (const auto& m : ms.models) {
                std::set<std::string> one;
                for (std::size_t a = m.next(0); a < m.universe_size(); a = m.next(a + 1)) {
                    std::string name = gp.name(static_cast<AtomId>(a));
                    if (name.rfind("__", 0) != 0) one.insert(name);
                }
                out.insert(std::move(one));
            }
            return out;
        };

        auto sm0 = project(g0, oracle_enumerate(g0, SemanticsKind::Stable));
        auto sm1 = project(g1, oracle_enumerate(g1, SemanticsKind::Stable));
        o.require(sm0 == sm1, "stable models change under the denial rewrite at round " +
                                  std::to_string(round));

        // report-only: the same comparison for minimal founded models
        auto mf0 = project(g0, oracle_enumerate(g0, SemanticsKind::MinimalFounded));
        auto mf1 = project(g1, oracle_enumerate(g1, SemanticsKind::MinimalFounded));
        (mf0 == mf1 ? mf_equal : mf_diff)++;
    }
    o.detail = "200 programs; MF comparison (report only): " + std::to_string(mf_equal) +
               " equal, " + std::to_string(mf_diff) + " different, " +
               std::to_string(seconds_since(start)) + "s";
    return o;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* title;
        std::function<Outcome()> fn;
    };
    const std::vector<Entry> criteria = {
        {1, "example corpus exact model sets", criterion_1_example_corpus},
        {2, "containment chain SM within MF within MM", criterion_2_containment_chain},
        {3, "normal programs: SM equals MF", criterion_3_normal_equivalence},
        {4, "positive programs: MM equals MF", criterion_4_positive_equivalence},
        {5, "head-deletion characterization agreement", criterion_5_characterization_agreement},
        {6, "head-deletion fixpoint membership", criterion_6_head_deletion_fixpoint},
        {7, "guided enumeration equals exhaustive oracle", criterion_7_oracle_equivalence},
        {8, "graph kernel encoding vs independent search", criterion_8_graph_kernel},
        {9, "3SAT encoding vs truth-table oracle", criterion_9_sat3},
        {10, "denial rewrite preserves stable models", criterion_10_denial_rewrite},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o = c.fn();
        std::printf("[%2d] %-48s %s%s%s\n", c.id, c.title, o.pass ? "PASS" : "FAIL",
                    o.detail.empty() ? "" : "  -- ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
