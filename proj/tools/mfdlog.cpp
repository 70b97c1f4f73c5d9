// Command-line frontend: solve, query, transform and check over disjunctive
// datalog programs with optional EDB databases.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfdlog/query.hpp"

using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Split "p(a,b),q" at commas outside parentheses.
std::vector<std::string> split_atoms(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

mfdlog::Interpretation parse_model_arg(const std::string& text, const mfdlog::GroundProgram& g) {
    mfdlog::Interpretation m(g.atom_count());
    for (const auto& part : split_atoms(text)) {
        std::string trimmed;
        for (char c : part)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) continue;
        mfdlog::Atom a = mfdlog::parse_ground_atom(trimmed);
        auto id = g.find(mfdlog::to_string(a));
        if (!id)
            throw std::runtime_error("atom '" + mfdlog::to_string(a) +
                                     "' does not occur in the ground program");
        m.set(*id);
    }
    return m;
}

std::string model_text(const mfdlog::GroundProgram& g, const mfdlog::Interpretation& m) {
    std::string out = "{";
    bool first = true;
    for (std::size_t a = m.next(0); a < m.universe_size(); a = m.next(a + 1)) {
        if (!first) out += ", ";
        out += g.name(static_cast<mfdlog::AtomId>(a));
        first = false;
    }
    return out + "}";
}

json models_json(const mfdlog::GroundProgram& g, const std::vector<mfdlog::Interpretation>& ms) {
    json arr = json::array();
    for (const auto& m : ms) {
        json one = json::array();
        for (std::size_t a = m.next(0); a < m.universe_size(); a = m.next(a + 1))
            one.push_back(g.name(static_cast<mfdlog::AtomId>(a)));
        arr.push_back(one);
    }
    return arr;
}

struct CommonArgs {
    std::string program_path;
    std::string db_path;
    std::string semantics = "mf";
    std::uint64_t budget = 0;  // 0 = unset
    std::size_t max_ground = 1'000'000;
    bool oracle = false;
    std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("program", args.program_path, "program file")->required();
    cmd->add_option("--db", args.db_path, "database file (facts only)");
    cmd->add_option("--semantics", args.semantics, "models|mm|f|mf|sm|pm")
        ->check(CLI::IsMember({"models", "mm", "f", "mf", "sm", "pm"}));
    cmd->add_option("--budget", args.budget, "max candidate interpretations examined");
    cmd->add_option("--max-ground", args.max_ground, "max ground rules");
    cmd->add_flag("--oracle", args.oracle, "use the exhaustive oracle enumeration");
    cmd->add_option("--format", args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
}

mfdlog::QueryOptions make_options(const CommonArgs& args) {
    mfdlog::QueryOptions opts;
    if (args.budget != 0) {
        opts.solve.budget = args.budget;
    } else if (const char* env = std::getenv("MFDLOG_BUDGET")) {
        opts.solve.budget = std::strtoull(env, nullptr, 10);
    }
    opts.ground.max_rules = args.max_ground;
    opts.use_oracle = args.oracle;
    return opts;
}

mfdlog::GroundProgram load_ground(const CommonArgs& args, const mfdlog::QueryOptions& opts) {
    mfdlog::Program p = mfdlog::parse_program(read_file(args.program_path));
    if (!args.db_path.empty()) {
        mfdlog::Database d = mfdlog::load_database(args.db_path);
        p = mfdlog::attach_database(p, d);
        auto diags = mfdlog::validate(p);
        if (!diags.empty()) throw mfdlog::ValidationError(std::move(diags));
    }
    return mfdlog::ground(p, opts.ground);
}

int run_solve(const CommonArgs& args) {
    auto opts = make_options(args);
    auto kind = mfdlog::semantics_from_string(args.semantics);
    mfdlog::GroundProgram g = load_ground(args, opts);
    mfdlog::ModelSet ms = args.oracle ? mfdlog::oracle_enumerate(g, kind, opts.oracle_cap)
                                      : mfdlog::enumerate(g, kind, opts.solve);

    if (args.format == "json") {
        json out = {{"semantics", args.semantics},
                    {"complete", ms.complete},
                    {"models", models_json(g, ms.models)},
                    {"query", nullptr}};
        std::cout << out.dump() << "\n";
    } else {
        if (ms.models.empty() && ms.complete)
            std::cout << "no models\n";
        else
            for (const auto& m : ms.models) std::cout << model_text(g, m) << "\n";
    }
    if (ms.budget_exhausted) {
        std::cerr << "budget exhausted; enumeration incomplete\n";
        return kExitBudget;
    }
    return ms.models.empty() ? kExitFalse : kExitTrue;
}

int run_query(const CommonArgs& args, const std::string& goal_text, bool cautious_mode) {
    auto opts = make_options(args);
    auto kind = mfdlog::semantics_from_string(args.semantics);

    mfdlog::BoundQuery q;
    q.program = mfdlog::parse_program(read_file(args.program_path));
    q.goal = mfdlog::parse_goal(goal_text);
    mfdlog::Database d;
    if (!args.db_path.empty()) d = mfdlog::load_database(args.db_path);

    mfdlog::QueryVerdict v = cautious_mode ? mfdlog::cautious(q, d, kind, opts)
                                           : mfdlog::brave(q, d, kind, opts);

    if (args.format == "json") {
        json qj = {{"mode", cautious_mode ? "cautious" : "brave"},
                   {"goal", mfdlog::to_string(q.goal)},
                   {"answer", v.answer},
                   {"witness", v.witness ? json(*v.witness) : json(nullptr)}};
        json out = {{"semantics", args.semantics},
                    {"complete", true},
                    {"models", json::array()},
                    {"query", qj}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (v.answer ? "true" : "false") << "\n";
        if (v.witness) {
            std::cout << "witness: {";
            for (std::size_t i = 0; i < v.witness->size(); ++i)
                std::cout << (i ? ", " : "") << (*v.witness)[i];
            std::cout << "}\n";
        }
    }
    return v.answer ? kExitTrue : kExitFalse;
}

int run_check(const CommonArgs& args, const std::string& model_text_arg) {
    auto opts = make_options(args);
    auto kind = mfdlog::semantics_from_string(args.semantics);
    mfdlog::GroundProgram g = load_ground(args, opts);
    mfdlog::Interpretation m = parse_model_arg(model_text_arg, g);

    bool member = false;
    switch (kind) {
        case mfdlog::SemanticsKind::AllModels: member = mfdlog::is_model(m, g); break;
        case mfdlog::SemanticsKind::Minimal: member = mfdlog::is_minimal_model(m, g); break;
        case mfdlog::SemanticsKind::Founded: member = mfdlog::is_founded(m, g); break;
        case mfdlog::SemanticsKind::MinimalFounded:
            member = mfdlog::is_minimal_founded(m, g);
            break;
        case mfdlog::SemanticsKind::Stable: member = mfdlog::is_stable(m, g); break;
        case mfdlog::SemanticsKind::Perfect: {
            auto s = mfdlog::stratify(g);
            if (!s) throw mfdlog::NotStratified();
            member = mfdlog::is_perfect(m, g, *s, opts.solve);
            break;
        }
    }
    if (args.format == "json") {
        json out = {{"semantics", args.semantics},
                    {"member", member},
                    {"model", models_json(g, {m})[0]}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (member ? "true" : "false") << "\n";
    }
    return member ? kExitTrue : kExitFalse;
}

int run_transform(const CommonArgs& args, const std::string& reduct_arg,
                  const std::string& head_delete_arg, bool rewrite_arg) {
    auto opts = make_options(args);
    int chosen = (!reduct_arg.empty()) + (!head_delete_arg.empty()) + (rewrite_arg ? 1 : 0);
    if (chosen != 1)
        throw std::runtime_error(
            "transform needs exactly one of --reduct, --head-delete, --rewrite-denials");

    if (rewrite_arg) {
        mfdlog::Program p = mfdlog::parse_program(read_file(args.program_path));
        std::cout << mfdlog::to_string(mfdlog::rewrite_denials(p));
        return kExitTrue;
    }
    mfdlog::GroundProgram g = load_ground(args, opts);
    if (!reduct_arg.empty()) {
        mfdlog::Interpretation i = parse_model_arg(reduct_arg, g);
        for (const auto& r : mfdlog::reduct(g, i).rules)
            std::cout << g.rule_to_string(r) << "\n";
    } else {
        mfdlog::Interpretation m = parse_model_arg(head_delete_arg, g);
        mfdlog::SplitProgram split = mfdlog::head_delete(g, m);
        for (const auto& r : split.standard) std::cout << g.rule_to_string(r) << "\n";
        for (const auto& r : split.denials) std::cout << g.rule_to_string(r) << "\n";
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disjunctive datalog engine with cross-checked model semantics"};
    app.require_subcommand(1);

    CommonArgs solve_args, query_args, check_args, transform_args;
    std::string goal_text, model_arg, reduct_arg, head_delete_arg;
    bool brave_flag = false, cautious_flag = false, rewrite_flag = false;

    CLI::App* solve = app.add_subcommand("solve", "enumerate models of the chosen class");
    add_common(solve, solve_args);

    CLI::App* query = app.add_subcommand("query", "evaluate a ground goal");
    add_common(query, query_args);
    query->add_option("--goal", goal_text, "ground goal, e.g. 'thirsty' or 'not thirsty'")
        ->required();
    query->add_flag("--brave", brave_flag, "some model of the class satisfies the goal");
    query->add_flag("--cautious", cautious_flag, "every model of the class satisfies the goal");

    CLI::App* check = app.add_subcommand("check", "membership of a given model");
    add_common(check, check_args);
    check->add_option("--model", model_arg, "comma-separated ground atoms")->required();

    CLI::App* transform = app.add_subcommand("transform", "print a transformed program");
    add_common(transform, transform_args);
    transform->add_option("--reduct", reduct_arg, "reduct w.r.t. the given interpretation");
    transform->add_option("--head-delete", head_delete_arg,
                          "delete head atoms outside the given model");
    transform->add_flag("--rewrite-denials", rewrite_flag, "rewrite denials to normal rules");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (query->parsed()) {
            if (brave_flag == cautious_flag)
                throw std::runtime_error("query needs exactly one of --brave, --cautious");
            return run_query(query_args, goal_text, cautious_flag);
        }
        if (check->parsed()) return run_check(check_args, model_arg);
        if (transform->parsed())
            return run_transform(transform_args, reduct_arg, head_delete_arg, rewrite_flag);
    } catch (const mfdlog::QueryIncomplete& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const mfdlog::GroundCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
