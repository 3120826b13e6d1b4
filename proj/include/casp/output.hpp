#pragma once
// Result document printed by the command-line tool, as line-oriented text or
// JSON. Both encodings carry the same payload; key order is fixed.

#include "casp/model.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace casp {

struct ProgramSummary {
    std::vector<std::string> components;
    std::string program_class;
    std::size_t herbrand_base_size = 0;
    std::size_t rules = 0;
};

inline ProgramSummary summarize(const CommunicatingProgram& p) {
    ProgramSummary s;
    for (const auto& n : p.names()) s.components.push_back(n.name());
    s.program_class = to_string(p.program_class);
    s.herbrand_base_size = herbrand_base(p).size();
    s.rules = p.rule_count();
    return s;
}

struct OutputDocument {
    std::string command;
    std::optional<ProgramSummary> program;
    /// Echo of the options that shaped the result, in insertion order.
    std::vector<std::pair<std::string, std::string>> config;
    std::optional<std::vector<Interpretation>> answer_sets;
    std::optional<bool> verdict;
    /// Named verdicts of independent deciders (qbf --via both).
    std::vector<std::pair<std::string, bool>> verdicts;
    std::optional<double> seconds;
};

inline std::vector<std::string> literal_strings(const Interpretation& i) {
    std::vector<std::string> out;
    for (const auto& s : i) out.push_back(to_string(s));
    return out;
}

inline nlohmann::ordered_json to_json(const OutputDocument& d) {
    nlohmann::ordered_json j;
    j["command"] = d.command;
    if (d.program) {
        j["program"] = {{"components", d.program->components},
                        {"class", d.program->program_class},
                        {"herbrand_base_size", d.program->herbrand_base_size},
                        {"rules", d.program->rules}};
    }
    auto& config = j["config"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : d.config) config[k] = v;
    auto& result = j["result"] = nlohmann::ordered_json::object();
    if (d.answer_sets) {
        auto sets = nlohmann::ordered_json::array();
        for (const auto& m : *d.answer_sets) sets.push_back(literal_strings(m));
        result["count"] = d.answer_sets->size();
        result["answer_sets"] = std::move(sets);
    }
    if (d.verdict) result["verdict"] = *d.verdict;
    if (!d.verdicts.empty()) {
        auto& named = result["verdicts"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : d.verdicts) named[k] = v;
    }
    if (d.seconds) j["timing"] = {{"seconds", *d.seconds}};
    return j;
}

inline std::string render_json(const OutputDocument& d) { return to_json(d).dump(2) + "\n"; }

inline std::string render_text(const OutputDocument& d) {
    std::string out = "command: " + d.command + "\n";
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
        return s;
    };
    if (d.program) {
        out += "components: " + join(d.program->components) + "\n";
        out += "class: " + d.program->program_class + "\n";
        out += "herbrand_base_size: " + std::to_string(d.program->herbrand_base_size) + "\n";
        out += "rules: " + std::to_string(d.program->rules) + "\n";
    }
    for (const auto& [k, v] : d.config) out += "config." + k + ": " + v + "\n";
    if (d.answer_sets) {
        out += "count: " + std::to_string(d.answer_sets->size()) + "\n";
        for (const auto& m : *d.answer_sets) out += "answer_set: " + to_string(m) + "\n";
    }
    if (d.verdict) out += std::string("verdict: ") + (*d.verdict ? "true" : "false") + "\n";
    for (const auto& [k, v] : d.verdicts) out += "verdict." + k + ": " + (v ? "true" : "false") + "\n";
    if (d.seconds) out += "timing.seconds: " + std::to_string(*d.seconds) + "\n";
    return out;
}

} // namespace casp
