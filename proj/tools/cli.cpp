#include "cli.hpp"

#include <causekit/causal.hpp>
#include <causekit/cqa.hpp>
#include <causekit/diagnosis.hpp>
#include <causekit/oracle.hpp>
#include <causekit/repair.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace causekit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string instance;
    std::string query;
    bool json = false;
    std::string tuple;
    std::string semantics = "s";
    std::string minimality = "s";
    std::string candidate;
    std::string atoms;
    std::string graph;
    std::string vertex;
    std::size_t min = 0;
    std::size_t cap = oracle::Limits{}.max_endogenous;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string join_tuples(const std::vector<GroundTuple>& tuples) {
    std::string s = "{";
    for (std::size_t i = 0; i < tuples.size(); ++i)
        s += (i ? ", " : "") + to_string(tuples[i]);
    return s + "}";
}

Json tuples_json(const std::vector<GroundTuple>& tuples) {
    Json a = Json::array();
    for (const auto& t : tuples)
        a.push_back(to_string(t));
    return a;
}

class Session {
public:
    Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    const Instance& instance() {
        if (!instance_)
            instance_ = parse_instance(read_file(opt_.instance));
        return *instance_;
    }

    const Program& program() {
        if (!program_)
            program_ = parse_program(read_file(opt_.query));
        return *program_;
    }

    UCQ query() {
        UCQ q = as_query(program());
        check_compatible(q, instance());
        return q;
    }

    Disjunct observation() {
        UCQ q = query();
        if (q.size() != 1)
            throw Error("expected a single conjunctive query, got " + std::to_string(q.size()) + " rules");
        return q.disjuncts()[0];
    }

    std::vector<DenialConstraint> constraints() {
        auto dcs = as_constraints(program());
        check_compatible(dcs_to_ucq(dcs), instance());
        return dcs;
    }

    // The instance's own copy, so output uses the instance spelling.
    GroundTuple tuple() {
        return instance().tuple(require_tuple(instance(), parse_tuple(opt_.tuple)));
    }

    void emit(const Json& json, const std::string& text) {
        if (opt_.json)
            out_ << json.dump() << '\n';
        else
            out_ << text;
    }

    void emit_sets(const char* key, const std::vector<std::vector<GroundTuple>>& sets, Json json) {
        Json a = Json::array();
        std::string text;
        for (const auto& s : sets) {
            a.push_back(tuples_json(s));
            text += join_tuples(s) + '\n';
        }
        json[key] = std::move(a);
        emit(json, text);
    }

    void emit_bool(const char* key, bool value, Json json) {
        json[key] = value;
        emit(json, value ? "true\n" : "false\n");
    }

    std::vector<std::vector<GroundTuple>> materialize(const std::vector<TupleSet>& sets) {
        std::vector<std::vector<GroundTuple>> out;
        for (const auto& s : sets)
            out.push_back(instance().materialize(s));
        return out;
    }

    void emit_repairs(const std::vector<Repair>& rs, Semantics sem) {
        std::vector<std::pair<std::vector<GroundTuple>, std::vector<GroundTuple>>> sets;
        for (const auto& r : rs)
            sets.emplace_back(instance().materialize(r.kept), instance().materialize(r.removed));
        emit_repair_sets(sets, sem);
    }

    void emit_repair_sets(const std::vector<std::pair<std::vector<GroundTuple>, std::vector<GroundTuple>>>& sets,
                          Semantics sem) {
        Json json;
        json["semantics"] = sem == Semantics::subset ? "s" : "c";
        json["repairs"] = Json::array();
        std::string text;
        for (const auto& [kept, removed] : sets) {
            json["repairs"].push_back({{"kept", tuples_json(kept)}, {"removed", tuples_json(removed)}});
            text += "kept " + join_tuples(kept) + "  removed " + join_tuples(removed) + '\n';
        }
        emit(json, text);
    }

    const Options& opt() const { return opt_; }

private:
    const Options& opt_;
    std::ostream& out_;
    std::optional<Instance> instance_;
    std::optional<Program> program_;
};

Semantics semantics_flag(const std::string& text) {
    return parse_semantics(text);
}

void cmd_causes(Session& s) {
    const auto causes = actual_causes(s.instance(), s.query());
    std::string text;
    for (const auto& t : causes)
        text += to_string(t) + '\n';
    s.emit(Json{{"causes", tuples_json(causes)}}, text);
}

void cmd_responsibility(Session& s) {
    const auto t = s.tuple();
    const auto rho = responsibility(s.instance(), s.query(), t);
    s.emit(Json{{"tuple", to_string(t)}, {"responsibility", rho.fraction()}}, rho.display() + '\n');
}

void cmd_contingency(Session& s) {
    const auto t = s.tuple();
    s.emit_sets("contingencies", minimal_contingencies(s.instance(), s.query(), t), Json{{"tuple", to_string(t)}});
}

void cmd_mrc(Session& s) {
    CausalAnalysis analysis(s.instance(), s.query());
    const auto ids = analysis.most_responsible();
    const auto rho = ids.empty() ? Responsibility::zero() : analysis.responsibility(ids.front());
    const auto tuples = s.instance().materialize(ids);
    std::string text;
    for (const auto& t : tuples)
        text += to_string(t) + '\t' + rho.display() + '\n';
    s.emit(Json{{"most_responsible", tuples_json(tuples)}, {"responsibility", rho.fraction()}}, text);
}

void cmd_repairs(Session& s) {
    const auto sem = semantics_flag(s.opt().semantics);
    s.emit_repairs(repairs(s.instance(), s.constraints(), sem), sem);
}

void cmd_repair_check(Session& s) {
    const auto candidate = parse_facts(read_file(s.opt().candidate));
    s.emit_bool("s_repair", is_s_repair(s.instance(), s.constraints(), candidate), Json::object());
}

void cmd_repair_size(Session& s) {
    const auto dcs = s.constraints();
    if (dcs.size() != 1)
        throw Error("repair-size expects exactly one denial constraint, got " + std::to_string(dcs.size()));
    const auto t = s.tuple();
    s.emit_bool("result", repair_size_at_least(s.instance(), dcs.front(), t, s.opt().min),
                Json{{"tuple", to_string(t)}, {"min", s.opt().min}});
}

void cmd_cqa(Session& s) {
    const auto sem = semantics_flag(s.opt().semantics);
    const auto atoms = parse_facts(read_file(s.opt().atoms));
    s.emit_bool("consistent", consistent_answer(s.instance(), s.constraints(), atoms, sem),
                Json{{"semantics", sem == Semantics::subset ? "s" : "c"}, {"atoms", tuples_json(atoms)}});
}

void cmd_diagnose(Session& s) {
    const auto problem = build_diagnosis_problem(s.instance(), s.observation());
    std::optional<GroundTuple> t;
    if (!s.opt().tuple.empty())
        t = s.tuple();
    const auto result = diagnoses(problem, t, semantics_flag(s.opt().minimality));
    Json json;
    if (t)
        json["tuple"] = to_string(*t);
    json["minimality"] = semantics_flag(s.opt().minimality) == Semantics::subset ? "s" : "c";
    s.emit_sets("diagnoses", s.materialize(result), json);
}

void cmd_emit_theory(Session& s) {
    const auto theory = render_theory(s.instance(), s.observation());
    s.emit(Json{{"theory", theory}}, theory);
}

Graph read_graph(const std::string& text) {
    Graph g;
    std::map<std::string, std::size_t> index;
    auto vertex = [&](const std::string& label) {
        auto [it, inserted] = index.emplace(label, g.vertices.size());
        if (inserted)
            g.vertices.push_back(label);
        return it->second;
    };
    std::istringstream lines(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(lines, line)) {
        ++number;
        line = line.substr(0, line.find_first_of("%#"));
        std::istringstream words(line);
        std::vector<std::string> w{std::istream_iterator<std::string>(words), {}};
        if (w.empty())
            continue;
        if (w.size() > 2)
            throw ParseError("expected `u v` or a single vertex", number, 1);
        const auto a = vertex(w[0]);
        if (w.size() == 2)
            g.edges.emplace_back(a, vertex(w[1]));
    }
    return g;
}

void cmd_encode_graph(Session& s) {
    const Graph g = read_graph(read_file(s.opt().graph));
    auto it = std::find(g.vertices.begin(), g.vertices.end(), s.opt().vertex);
    if (it == g.vertices.end())
        throw Error("vertex " + s.opt().vertex + " is not in the graph");
    const auto enc = encode_graph(g, static_cast<std::size_t>(it - g.vertices.begin()));
    const auto instance = serialize_instance(enc.instance);
    const auto query = to_string(enc.query);
    s.emit(Json{{"instance", instance}, {"query", query}, {"tuple", to_string(enc.tuple)}},
           instance + "% query: " + query + "\n% tuple: " + to_string(enc.tuple) + '\n');
}

oracle::Limits limits(Session& s) {
    return oracle::Limits{s.opt().cap};
}

void cmd_oracle_causes(Session& s) {
    const auto causes = oracle::causes(s.instance(), s.query(), limits(s));
    std::string text;
    for (const auto& t : causes)
        text += to_string(t) + '\n';
    s.emit(Json{{"causes", tuples_json(causes)}}, text);
}

void cmd_oracle_responsibility(Session& s) {
    const auto t = s.tuple();
    const auto rho = oracle::responsibility(s.instance(), s.query(), t, limits(s));
    s.emit(Json{{"tuple", to_string(t)}, {"responsibility", rho.fraction()}}, rho.display() + '\n');
}

void cmd_oracle_contingency(Session& s) {
    const auto t = s.tuple();
    s.emit_sets("contingencies", oracle::contingencies(s.instance(), s.query(), t, limits(s)),
                Json{{"tuple", to_string(t)}});
}

void cmd_oracle_repairs(Session& s) {
    const auto sem = semantics_flag(s.opt().semantics);
    std::vector<std::pair<std::vector<GroundTuple>, std::vector<GroundTuple>>> sets;
    for (auto& r : oracle::repairs(s.instance(), s.constraints(), sem, limits(s)))
        sets.emplace_back(std::move(r.kept), std::move(r.removed));
    s.emit_repair_sets(sets, sem);
}

// Minimum hitting set of 𝔖^n(D) containing the tuple.
void cmd_oracle_min_hs(Session& s) {
    const auto t = s.tuple();
    const auto family = endogenous_support(s.query(), s.instance());
    const auto size = oracle::min_hs_containing(s.materialize(family.sets()), t, limits(s));
    Json json{{"tuple", to_string(t)}};
    json["min_hs"] = size ? Json(*size) : Json(nullptr);
    s.emit(json, (size ? std::to_string(*size) : std::string("none")) + '\n');
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Causes, responsibilities, repairs and diagnoses for conjunctive queries", "causekit"};
    app.require_subcommand(1);
    Options opt;
    std::function<void(Session&)> action;

    auto command = [&](CLI::App* parent, const std::string& name, const std::string& description,
                       std::function<void(Session&)> fn, bool needs_query = true) {
        CLI::App* sub = parent->add_subcommand(name, description);
        sub->add_flag("--json", opt.json, "JSON output");
        sub->add_option("--instance", opt.instance, "instance file")->required();
        auto* q = sub->add_option("--query", opt.query, "query or constraint file");
        if (needs_query)
            q->required();
        sub->callback([&action, fn = std::move(fn)] { action = fn; });
        return sub;
    };
    auto semantics = [&](CLI::App* sub) {
        sub->add_option("--semantics", opt.semantics, "s or c")->check(CLI::IsMember({"s", "c", "S", "C"}));
    };
    auto tuple = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--tuple", opt.tuple, "fact, e.g. s(a3)");
        if (required)
            o->required();
    };

    command(&app, "causes", "actual causes", cmd_causes);
    tuple(command(&app, "responsibility", "responsibility of a tuple", cmd_responsibility), true);
    tuple(command(&app, "contingency", "S-minimal contingency sets of a tuple", cmd_contingency), true);
    command(&app, "mrc", "most responsible causes", cmd_mrc);
    semantics(command(&app, "repairs", "S- or C-repairs wrt. denial constraints", cmd_repairs));
    command(&app, "repair-check", "is the candidate an S-repair", cmd_repair_check)
        ->add_option("--candidate", opt.candidate, "facts file")
        ->required();
    {
        auto* sub = command(&app, "repair-size", "S-repair of size >= m without the tuple", cmd_repair_size);
        tuple(sub, true);
        sub->add_option("--min", opt.min, "m")->required();
    }
    {
        auto* sub = command(&app, "cqa", "consistent answer to a ground conjunction", cmd_cqa);
        semantics(sub);
        sub->add_option("--atoms", opt.atoms, "facts file")->required();
    }
    {
        auto* sub = command(&app, "diagnose", "diagnoses of the observation", cmd_diagnose);
        tuple(sub, false);
        sub->add_option("--minimality", opt.minimality, "s or c")->check(CLI::IsMember({"s", "c", "S", "C"}));
    }
    command(&app, "emit-theory", "system description of the diagnosis problem", cmd_emit_theory);
    {
        CLI::App* sub = app.add_subcommand("encode-graph", "encode (G, v) as an instance and query");
        sub->add_flag("--json", opt.json, "JSON output");
        sub->add_option("--graph", opt.graph, "edge list, one `u v` per line")->required();
        sub->add_option("--vertex", opt.vertex, "vertex label")->required();
        sub->callback([&] { action = cmd_encode_graph; });
    }
    {
        CLI::App* oracle = app.add_subcommand("oracle", "brute-force reference computations");
        oracle->require_subcommand(1);
        auto with_cap = [&](CLI::App* sub) {
            sub->add_option("--cap", opt.cap, "largest set enumerated")->capture_default_str();
            return sub;
        };
        with_cap(command(oracle, "causes", "actual causes", cmd_oracle_causes));
        tuple(with_cap(command(oracle, "responsibility", "responsibility", cmd_oracle_responsibility)), true);
        tuple(with_cap(command(oracle, "contingency", "contingency sets", cmd_oracle_contingency)), true);
        semantics(with_cap(command(oracle, "repairs", "repairs", cmd_oracle_repairs)));
        tuple(with_cap(command(oracle, "min-hs", "minimum hitting set of 𝔖^n(D) containing a tuple",
                               cmd_oracle_min_hs)),
              true);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        Session session(opt, out);
        action(session);
        return 0;
    } catch (const ResourceLimitError& e) {
        err << "resource limit exceeded: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace causekit::cli
