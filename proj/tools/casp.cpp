#include "casp/casp.hpp"
#include "casp/generate.hpp"
#include "casp/output.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum Exit : int { ok = 0, negative = 1, invalid = 2, too_large = 3, disagreement = 4 };

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw casp::error("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

void emit(const casp::OutputDocument& doc, const std::string& format) {
    std::cout << (format == "json" ? casp::render_json(doc) : casp::render_text(doc));
}

struct Common {
    std::string file;
    bool allow_reserved = false;
};

struct SolveArgs : Common {
    std::string focus;
    std::string brave;
    std::string cautious;
    bool exists = false;
    std::string format = "text";
    std::size_t bound = casp::default_bound;
    unsigned jobs = 1;
    std::string search = "reduct";
    bool strict_minimal = false;
    bool timing = false;
};

casp::Search parse_search(const std::string& s) {
    if (s == "heads") return casp::Search::head_supported;
    if (s == "full") return casp::Search::unpruned;
    return casp::Search::reduct_guess;
}

int cmd_solve(const SolveArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    auto p = casp::parse_program(read_file(a.file), {a.allow_reserved});

    casp::FocusSequence focus;
    for (const auto& n : split_commas(a.focus)) focus.names.push_back(casp::ComponentName{n});
    casp::check_focus(p, focus);

    std::optional<casp::Query> query;
    if (a.exists) query = casp::Query::exists();
    if (!a.brave.empty()) query = casp::Query::brave(casp::parse_situated_literal(a.brave, {a.allow_reserved}));
    if (!a.cautious.empty()) query = casp::Query::cautious(casp::parse_situated_literal(a.cautious, {a.allow_reserved}));
    if (query) casp::check_query(p, *query);

    casp::EnumerateOptions opts;
    opts.bound = a.bound;
    opts.jobs = a.jobs;
    opts.search = parse_search(a.search);
    opts.minimality = a.strict_minimal ? casp::Minimality::unique_minimal : casp::Minimality::any_minimal;
    if (a.bound != casp::default_bound)
        std::cerr << "warning: enumeration bound set to " << a.bound << "; search cost grows exponentially with it\n";

    auto pool = casp::focused_answer_sets(p, focus, opts);

    casp::OutputDocument doc;
    doc.command = "solve";
    doc.program = casp::summarize(p);
    std::vector<std::string> focus_names;
    for (const auto& n : focus.names) focus_names.push_back(n.name());
    doc.config = {{"focus", join(focus_names)},
                  {"mode", query ? casp::to_string(*query) : std::string("enumerate")},
                  {"search", casp::to_string(opts.search)},
                  {"bound", std::to_string(opts.bound)},
                  {"minimality", a.strict_minimal ? "unique" : "any"}};
    int code = ok;
    if (query) {
        bool v = casp::evaluate(*query, pool);
        doc.verdict = v;
        code = v ? ok : negative;
    } else {
        doc.answer_sets = std::move(pool);
    }
    if (a.timing)
        doc.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(doc, a.format);
    return code;
}

struct TransformArgs : Common {
    std::string kind = "naf-sim";
    std::string out;
};

int cmd_transform(const TransformArgs& a) {
    auto p = casp::parse_program(read_file(a.file), {a.allow_reserved});
    std::vector<std::string> comments;
    casp::CommunicatingProgram result;
    if (a.kind == "naf-sim") {
        auto sim = casp::simulate_naf(p);
        comments.push_back("naf simulation of " + a.file);
        comments.push_back("fresh literals: " + std::to_string(sim.map.fresh.size()));
        std::vector<std::string> markers;
        for (const auto& m : sim.total_markers) markers.push_back(casp::to_string(m));
        comments.push_back("total markers: " + join(markers, " "));
        result = std::move(sim.program);
    } else {
        comments.push_back("flattening of " + a.file + " into one normal program");
        comments.push_back("__s_<component>_x_<atom> encodes a situated literal");
        result = casp::as_communicating(casp::to_normal(p), casp::ComponentName{"Flat"});
    }
    auto text = casp::render_program(result, comments);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw casp::error("cannot write '" + a.out + "'");
        f << text;
    }
    return ok;
}

struct QbfArgs {
    std::string file;
    std::string via = "both";
    std::string format = "text";
};

int cmd_qbf(const QbfArgs& a) {
    auto q = casp::parse_qbf(read_file(a.file));
    casp::OutputDocument doc;
    doc.command = "qbf";
    doc.config = {{"via", a.via}, {"prefix", std::to_string(q.blocks.size()) + " blocks"}};
    std::optional<bool> asp;
    std::optional<bool> reference;
    if (a.via != "oracle") {
        asp = casp::qbf_via_asp(q);
        doc.verdicts.emplace_back("asp", *asp);
    }
    if (a.via != "asp") {
        reference = casp::oracle::qbf_eval(q);
        doc.verdicts.emplace_back("oracle", *reference);
    }
    if (asp && reference && *asp != *reference) {
        emit(doc, a.format);
        std::cerr << "error: compiled program and oracle disagree\n";
        return disagreement;
    }
    doc.verdict = asp ? *asp : *reference;
    emit(doc, a.format);
    return *doc.verdict ? ok : negative;
}

struct ValidateArgs : Common {
    std::string format = "text";
};

int cmd_validate(const ValidateArgs& a) {
    auto p = casp::parse_program(read_file(a.file), {a.allow_reserved});
    auto problems = casp::validate(p);
    for (const auto& v : problems) std::cerr << a.file << ": " << casp::to_string(v) << "\n";
    casp::OutputDocument doc;
    doc.command = "validate";
    doc.program = casp::summarize(p);
    doc.verdict = problems.empty();
    emit(doc, a.format);
    return problems.empty() ? ok : invalid;
}

struct GenArgs {
    std::string what = "program";
    std::size_t index = 0;
    std::string first = "exists";
};

int cmd_gen(const GenArgs& a) {
    std::uint64_t seed = 1;
    if (const char* env = std::getenv("CASP_SEED")) seed = std::strtoull(env, nullptr, 10);
    casp::gen::Rng rng(seed);
    if (a.what == "qbf") {
        auto first = a.first == "forall" ? casp::Quantifier::forall : casp::Quantifier::exists;
        casp::Qbf q;
        for (std::size_t i = 0; i <= a.index; ++i) q = casp::gen::random_qbf(rng, first);
        std::cout << "% seed " << seed << ", instance " << a.index << "\n" << casp::render_qbf(q) << "\n";
        return ok;
    }
    casp::CommunicatingProgram p;
    for (std::size_t i = 0; i <= a.index; ++i) p = casp::gen::random_program(rng);
    std::vector<std::string> comments{"seed " + std::to_string(seed) + ", instance " + std::to_string(a.index)};
    std::cout << casp::render_program(p, comments);
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Answer sets of communicating logic programs"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "enumerate (focused) answer sets or answer a query");
    s->add_option("file", solve.file, "program file")->required();
    s->add_option("--focus", solve.focus, "comma-separated focus sequence");
    auto* exists = s->add_flag("--exists", solve.exists, "decide whether an answer set exists");
    auto* brave = s->add_option("--brave", solve.brave, "is Q:l in some answer set");
    auto* cautious = s->add_option("--cautious", solve.cautious, "is Q:l in every answer set");
    exists->excludes(brave, cautious);
    brave->excludes(cautious);
    s->add_option("--format", solve.format)->check(CLI::IsMember({"text", "json"}));
    s->add_option("--bound", solve.bound, "maximum number of guessed situated literals");
    s->add_option("--jobs", solve.jobs, "worker threads")->check(CLI::Range(1u, 256u));
    s->add_option("--search", solve.search, "guess space: reduct, heads or full")
        ->check(CLI::IsMember({"reduct", "heads", "full"}));
    s->add_flag("--strict-minimal", solve.strict_minimal, "require unique minimal models for disjunctive components");
    s->add_flag("--timing", solve.timing, "report elapsed time");
    s->add_flag("--allow-reserved", solve.allow_reserved, "accept names starting with __");

    TransformArgs transform;
    auto* t = app.add_subcommand("transform", "rewrite a program");
    t->add_option("file", transform.file)->required();
    t->add_option("--kind", transform.kind)->check(CLI::IsMember({"naf-sim", "to-normal"}));
    t->add_option("-o,--out", transform.out, "output file");
    t->add_flag("--allow-reserved", transform.allow_reserved);

    QbfArgs qbf;
    auto* q = app.add_subcommand("qbf", "decide a QBF");
    q->add_option("file", qbf.file)->required();
    q->add_option("--via", qbf.via)->check(CLI::IsMember({"asp", "oracle", "both"}));
    q->add_option("--format", qbf.format)->check(CLI::IsMember({"text", "json"}));

    ValidateArgs validate;
    auto* v = app.add_subcommand("validate", "check a program");
    v->add_option("file", validate.file)->required();
    v->add_option("--format", validate.format)->check(CLI::IsMember({"text", "json"}));
    v->add_flag("--allow-reserved", validate.allow_reserved);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "print a random instance (seed from CASP_SEED)");
    g->add_option("what", gen.what)->check(CLI::IsMember({"program", "qbf"}));
    g->add_option("--index", gen.index, "instance number in the seeded sequence");
    g->add_option("--first", gen.first, "leading quantifier")->check(CLI::IsMember({"exists", "forall"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : invalid;
    }

    try {
        if (*s) return cmd_solve(solve);
        if (*t) return cmd_transform(transform);
        if (*q) return cmd_qbf(qbf);
        if (*v) return cmd_validate(validate);
        if (*g) return cmd_gen(gen);
    } catch (const casp::bound_exceeded& e) {
        std::cerr << "error: " << e.what() << " (raise it with --bound)\n";
        return too_large;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid;
    }
    return invalid;
}
