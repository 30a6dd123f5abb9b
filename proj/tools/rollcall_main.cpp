#include <CLI11.hpp>
#include <json.hpp>

#include "rollcall/crosscheck.hpp"
#include "rollcall/generate.hpp"
#include "rollcall/reductions.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace rollcall;

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << text << "\n";
}

Json witness_json(const std::optional<CurrentMove>& move, const Candidates& cands) {
    if (!move) return nullptr;
    Json w = Json::object();
    w["bribe"] = move->bribe;
    if (move->bribe) {
        Json ballot = Json::array();
        if (move->ballot.kind == BallotKind::order)
            for (int c : move->ballot.slots) ballot.push_back(cands.name(c));
        else
            for (int f : move->ballot.slots) ballot.push_back(f);
        w["ballot"] = std::move(ballot);
    }
    return w;
}

int run_engine(Engine engine, const std::string& file, int cap_ballots,
               const std::string& report_path) {
    const Instance inst = parse_instance(slurp(file));
    SolveOptions opts;
    if (cap_ballots > 0) {
        opts.max_order_candidates = cap_ballots;
        opts.max_approval_candidates = std::max(cap_ballots, 12);
    }
    SolveOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    switch (engine) {
        case Engine::general: out = solve(inst.obs, inst.variant, inst.rule, opts); break;
        case Engine::naive:
            out.decision = solve_naive(inst.obs, inst.variant, inst.rule, opts);
            break;
        case Engine::fast: out = fast_decide(inst); break;
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();

    Json rep = Json::object();
    rep["instance"] = instance_digest(inst);
    rep["engine"] = engine_name(engine);
    rep["decision"] = out.decision;
    rep["witness"] = witness_json(out.action, inst.obs.candidates);
    rep["wall_ms"] = ms;
    emit(report_path, rep.dump(2));
    return out.decision ? kExitYes : kExitNo;
}

std::vector<Nat> parse_nat_list(const std::string& csv) {
    std::vector<Nat> out;
    std::string tok;
    std::istringstream ss(csv);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw Error("empty entry in list: " + csv);
        for (char c : tok)
            if (c < '0' || c > '9') throw Error("not a number: " + tok);
        out.emplace_back(tok);
    }
    if (out.empty()) throw Error("empty list");
    return out;
}

Rule rule_by_name(const std::string& name, int m) {
    if (name == "plurality") return Rule::plurality(m);
    if (name == "veto") return Rule::veto(m);
    if (name == "borda") return Rule::borda(m);
    if (name == "approval") return Rule::approval();
    throw Error("unknown rule: " + name + " (try plurality|veto|borda|approval)");
}

ManipInstance parse_manip(const std::string& text) {
    Json doc = Json::parse(text);
    ManipInstance mi;
    for (const auto& n : doc.at("candidates")) mi.candidates.names.push_back(n);
    mi.candidates.check();
    const int m = mi.candidates.size();
    const auto& jr = doc.at("rule");
    const std::string kind = jr.at("kind");
    if (kind == "approval") {
        mi.rule = Rule::approval();
    } else if (kind == "scoring") {
        std::vector<Nat> alpha;
        for (const auto& a : jr.at("alpha")) alpha.emplace_back(a.dump());
        mi.rule = Rule::scoring(std::move(alpha));
    } else {
        throw Error("manipulation instances use scoring or approval rules");
    }
    mi.weighted = doc.value("weighted", false);
    mi.mode = doc.value("mode", std::string("constructive")) == "destructive"
                  ? Variant::Mode::destructive
                  : Variant::Mode::constructive;
    mi.winner_model = doc.value("winner_model", std::string("nonunique")) == "unique"
                          ? ManipInstance::WinnerModel::unique
                          : ManipInstance::WinnerModel::nonunique;
    mi.candidate = mi.candidates.index_of(doc.at("candidate"));
    if (mi.candidate < 0) throw Error("unknown candidate in manipulation instance");
    for (const auto& jv : doc.value("nonmanipulators", Json::array())) {
        Vote v;
        v.voter = jv.at("name");
        std::vector<int> slots;
        if (mi.rule.ballot_kind() == BallotKind::order) {
            for (const auto& n : jv.at("ballot")) {
                const int c = mi.candidates.index_of(n);
                if (c < 0) throw Error("unknown candidate in ballot");
                slots.push_back(c);
            }
            v.ballot = Ballot::order_of(std::move(slots));
        } else {
            for (const auto& f : jv.at("ballot")) slots.push_back(int(f));
            v.ballot = Ballot::approval_of(std::move(slots));
        }
        check_ballot(mi.rule, mi.candidates, v.ballot);
        v.weight = mi.weighted ? Nat(jv.at("weight").dump()) : Nat(1);
        mi.nonmanipulators.push_back(std::move(v));
    }
    for (const auto& w : doc.value("manipulator_weights", Json::array()))
        mi.manipulator_weights.emplace_back(w.dump());
    (void)m;
    return mi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rollcall: exact solvers, deciders and reductions for online "
                 "bribery in sequential elections"};
    app.require_subcommand(1);

    std::string file, report_path, engine_name_opt = "general";
    int cap_ballots = 0;

    auto add_engine_flags = [&](CLI::App* cmd, bool with_engine) {
        cmd->add_option("instance", file, "instance JSON file, or - for stdin")
            ->required();
        if (with_engine)
            cmd->add_option("--engine", engine_name_opt,
                            "general | fast | naive (default general)");
        cmd->add_option("--cap-ballots", cap_ballots,
                        "raise the order-enumeration candidate cap");
        cmd->add_option("--json-report", report_path, "write the run report here");
    };

    auto* cmd_solve = app.add_subcommand("solve", "decide an instance (exit 0 yes, 1 no)");
    add_engine_flags(cmd_solve, true);
    auto* cmd_oracle = app.add_subcommand("oracle", "decide with the naive reference engine");
    add_engine_flags(cmd_oracle, false);
    auto* cmd_fast = app.add_subcommand("fast", "decide with the polynomial-time decider");
    add_engine_flags(cmd_fast, false);

    // classify
    std::string alpha_csv;
    auto* cmd_classify = app.add_subcommand("classify", "dichotomy table for a scoring vector");
    cmd_classify->add_option("--alpha", alpha_csv, "scoring vector, e.g. 1,0,0")->required();

    // reduce
    auto* cmd_reduce = app.add_subcommand("reduce", "emit a reduction image");
    cmd_reduce->require_subcommand(1);
    std::string qbf_input = "-", manip_input = "-", values_csv, out_path;
    bool destructive = false, input_budget = false;
    int manip_part = 1;
    auto* red_qbf = cmd_reduce->add_subcommand("qbf", "A-form QBF -> gadget-rule instance");
    red_qbf->add_option("--input", qbf_input, "formula file, or - for stdin");
    red_qbf->add_flag("--destructive", destructive, "destructive-goal construction");
    red_qbf->add_flag("--input-budget", input_budget,
                      "carry k in the instance instead of a fixed cap");
    red_qbf->add_option("--out", out_path, "output file (default stdout)");
    auto* red_part = cmd_reduce->add_subcommand("partition", "Partition -> priced+weighted Plurality");
    red_part->add_option("--values", values_csv, "comma-separated values")->required();
    red_part->add_flag("--destructive", destructive, "destructive-goal construction");
    red_part->add_option("--out", out_path, "output file (default stdout)");
    auto* red_manip = cmd_reduce->add_subcommand("manip", "manipulation -> online bribery");
    red_manip->add_option("--input", manip_input, "manipulation JSON, or - for stdin");
    red_manip->add_option("--part", manip_part, "1 or 2")->required();
    red_manip->add_option("--out", out_path, "output file (default stdout)");

    // gen
    GenParams gen;
    std::string gen_rule = "plurality", gen_mode = "constructive";
    std::uint64_t gen_seed = 0;
    bool gen_priced = false, gen_weighted = false;
    int gen_cap = -1;
    auto* cmd_gen = app.add_subcommand("gen", "generate a random valid instance");
    cmd_gen->add_option("--rule", gen_rule, "plurality|veto|borda|approval");
    cmd_gen->add_option("--m", gen.num_candidates, "number of candidates");
    cmd_gen->add_option("--past", gen.num_past, "past voters");
    cmd_gen->add_option("--future", gen.num_future, "future voters");
    cmd_gen->add_option("--mode", gen_mode, "constructive|destructive");
    cmd_gen->add_flag("--priced", gen_priced);
    cmd_gen->add_flag("--weighted", gen_weighted);
    cmd_gen->add_option("--max-weight", gen.max_weight);
    cmd_gen->add_option("--max-price", gen.max_price);
    cmd_gen->add_option("--max-k", gen.max_k);
    cmd_gen->add_option("--bribe-cap", gen_cap, "fixed bribe cap (the [k] family)");
    cmd_gen->add_option("--seed", gen_seed, "RNG seed");
    cmd_gen->add_option("--out", out_path, "output file (default stdout)");

    // check
    std::vector<std::string> check_files;
    std::string engines_csv = "fast,general,naive";
    auto* cmd_check = app.add_subcommand("check", "cross-check engines over instances");
    cmd_check->add_option("instances", check_files, "instance JSON files")->required();
    cmd_check->add_option("--engines", engines_csv, "subset of fast,general,naive");
    cmd_check->add_option("--cap-ballots", cap_ballots);
    cmd_check->add_option("--json-report", report_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_solve->parsed()) {
            Engine e = Engine::general;
            if (engine_name_opt == "fast") e = Engine::fast;
            else if (engine_name_opt == "naive") e = Engine::naive;
            else if (engine_name_opt != "general")
                throw Error("unknown engine: " + engine_name_opt);
            return run_engine(e, file, cap_ballots, report_path);
        }
        if (cmd_oracle->parsed()) return run_engine(Engine::naive, file, cap_ballots, report_path);
        if (cmd_fast->parsed()) return run_engine(Engine::fast, file, cap_ballots, report_path);

        if (cmd_classify->parsed()) {
            const auto verdict = scoring_dichotomy(parse_nat_list(alpha_csv));
            const auto row = [](const char* name, Complexity c) {
                std::cout << name << ": " << complexity_name(c) << "\n";
            };
            row("constructive unpriced unweighted", verdict.unpriced_unweighted);
            row("destructive unpriced unweighted", verdict.unpriced_unweighted);
            row("constructive priced unweighted", verdict.priced_unweighted);
            row("destructive priced unweighted", verdict.priced_unweighted);
            row("constructive weighted unpriced", verdict.weighted_unpriced);
            row("destructive weighted unpriced", verdict.weighted_unpriced);
            row("constructive priced weighted", verdict.priced_weighted);
            row("destructive priced weighted", verdict.priced_weighted);
            return kExitYes;
        }

        if (red_qbf->parsed()) {
            const Qbf q = parse_qbf(slurp(qbf_input));
            const Instance img = reduce_qbf(
                q, input_budget ? BribeLimitForm::input_budget : BribeLimitForm::fixed_cap,
                destructive ? Variant::Mode::destructive : Variant::Mode::constructive);
            emit(out_path, serialize_instance(img));
            return kExitYes;
        }
        if (red_part->parsed()) {
            const Instance img =
                reduce_partition(parse_nat_list(values_csv),
                                 destructive ? Variant::Mode::destructive
                                             : Variant::Mode::constructive);
            emit(out_path, serialize_instance(img));
            return kExitYes;
        }
        if (red_manip->parsed()) {
            const Instance img =
                reduce_manipulation(parse_manip(slurp(manip_input)), manip_part);
            emit(out_path, serialize_instance(img));
            return kExitYes;
        }

        if (cmd_gen->parsed()) {
            gen.variant.priced = gen_priced;
            gen.variant.weighted = gen_weighted;
            gen.variant.mode = gen_mode == "destructive" ? Variant::Mode::destructive
                                                         : Variant::Mode::constructive;
            if (gen_cap >= 0) gen.variant.bribe_cap = Nat(gen_cap);
            gen.rule = rule_by_name(gen_rule, gen.num_candidates);
            emit(out_path, serialize_instance(generate_random(gen, gen_seed)));
            return kExitYes;
        }

        if (cmd_check->parsed()) {
            std::vector<Instance> corpus;
            for (const auto& f : check_files) corpus.push_back(parse_instance(slurp(f)));
            std::vector<Engine> engines;
            std::string tok;
            std::istringstream ss(engines_csv);
            while (std::getline(ss, tok, ',')) {
                if (tok == "fast") engines.push_back(Engine::fast);
                else if (tok == "general") engines.push_back(Engine::general);
                else if (tok == "naive") engines.push_back(Engine::naive);
                else throw Error("unknown engine: " + tok);
            }
            SolveOptions opts;
            if (cap_ballots > 0) opts.max_order_candidates = cap_ballots;
            const CrossCheckResult res = cross_check(corpus, engines, opts);

            Json rows = Json::array();
            for (const auto& r : res.reports) {
                Json row = Json::object();
                row["instance"] = r.digest;
                row["engine"] = engine_name(r.engine);
                row["skipped"] = r.skipped;
                if (r.skipped) row["note"] = r.note;
                else row["decision"] = r.decision;
                row["wall_ms"] = r.wall_ms;
                rows.push_back(std::move(row));
            }
            Json rep = Json::object();
            rep["reports"] = std::move(rows);
            rep["instances"] = res.instances;
            rep["agreements"] = res.agreements;
            rep["disagreements"] = res.disagreements;
            rep["skipped_instances"] = res.skipped_instances;
            rep["all_agree"] = res.all_agree;
            emit(report_path, rep.dump(2));
            std::cerr << (res.all_agree ? "all engines agree" : "DISAGREEMENT") << " ("
                      << res.instances << " instances, " << res.disagreements
                      << " disagreements, " << res.skipped_instances << " skipped)\n";
            return res.all_agree ? kExitYes : kExitNo;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
