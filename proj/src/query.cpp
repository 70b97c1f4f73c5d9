#include "mfdlog/query.hpp"

#include <fstream>
#include <sstream>

namespace mfdlog {

Database parse_database(const std::string& text) {
    Program p = parse_program_raw(text);
    Database d;
    for (const auto& r : p.rules) {
        if (!r.is_fact())
            throw std::runtime_error("database files may contain facts only, got: " +
                                     to_string(r));
        const Atom& a = r.head[0];
        if (!a.ground())
            throw std::runtime_error("non-ground fact in database: " + to_string(a));
        auto [it, inserted] = d.relations.try_emplace(a.predicate);
        if (inserted)
            it->second.arity = a.arity();
        else if (it->second.arity != a.arity())
            throw std::runtime_error("arity conflict in database for predicate '" + a.predicate +
                                     "'");
        std::vector<std::string> tuple;
        for (const auto& t : a.args) tuple.push_back(t.name);
        it->second.tuples.insert(std::move(tuple));
    }
    return d;
}

Database load_database(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open database file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_database(buf.str());
}

namespace {

struct Prepared {
    GroundProgram ground_program;
    ModelSet models;
    std::optional<AtomId> goal_id;
};

Prepared prepare(const BoundQuery& q, const Database& d, SemanticsKind kind,
                 const QueryOptions& opts) {
    if (!q.goal.atom.ground()) throw std::runtime_error("query goal must be ground");
    auto preds = q.program.predicates();
    if (!preds.count(q.goal.atom.predicate) && !d.relations.count(q.goal.atom.predicate))
        throw std::runtime_error("goal predicate '" + q.goal.atom.predicate +
                                 "' occurs neither in the program nor in the database");

    Program attached = attach_database(q.program, d);
    auto diags = validate(attached);
    if (!diags.empty()) throw ValidationError(std::move(diags));

    Prepared out{ground(attached, opts.ground), {}, std::nullopt};
    out.models = opts.use_oracle ? oracle_enumerate(out.ground_program, kind, opts.oracle_cap)
                                 : enumerate(out.ground_program, kind, opts.solve);
    if (!out.models.complete) throw QueryIncomplete();
    out.goal_id = out.ground_program.find(to_string(q.goal.atom));
    return out;
}

bool goal_holds(const Literal& goal, const std::optional<AtomId>& id, const Bitset& m) {
    bool atom_true = id.has_value() && m.test(*id);
    return goal.negative ? !atom_true : atom_true;
}

std::vector<std::string> atom_list(const GroundProgram& g, const Bitset& m) {
    std::vector<std::string> out;
    for (std::size_t a = m.next(0); a < m.universe_size(); a = m.next(a + 1))
        out.push_back(g.name(static_cast<AtomId>(a)));
    return out;
}

}  // namespace

QueryVerdict brave(const BoundQuery& q, const Database& d, SemanticsKind kind,
                   const QueryOptions& opts) {
    Prepared p = prepare(q, d, kind, opts);
    QueryVerdict v{false, QueryMode::Brave, kind, std::nullopt};
    for (const auto& m : p.models.models)
        if (goal_holds(q.goal, p.goal_id, m)) {
            v.answer = true;
            v.witness = atom_list(p.ground_program, m);
            break;
        }
    return v;
}

QueryVerdict cautious(const BoundQuery& q, const Database& d, SemanticsKind kind,
                      const QueryOptions& opts) {
    Prepared p = prepare(q, d, kind, opts);
    QueryVerdict v{true, QueryMode::Cautious, kind, std::nullopt};
    for (const auto& m : p.models.models)
        if (!goal_holds(q.goal, p.goal_id, m)) {
            v.answer = false;
            v.witness = atom_list(p.ground_program, m);
            break;
        }
    return v;
}

}  // namespace mfdlog
