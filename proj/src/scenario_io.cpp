#include "specmarket/scenario_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace specmarket {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key))
            throw std::invalid_argument("scenario config: unknown key '" + key + "' in " +
                                        where);
    }
}

DistSpec parse_dist(const json& obj, const std::string& where) {
    if (!obj.is_object())
        throw std::invalid_argument("scenario config: " + where + " must be an object");
    const std::string kind = obj.at("kind").get<std::string>();
    if (kind == "exp") {
        reject_unknown_keys(obj, {"kind", "rate"}, where);
        return DistSpec::exponential(obj.at("rate").get<double>());
    }
    if (kind == "erlang2") {
        reject_unknown_keys(obj, {"kind", "rate"}, where);
        return DistSpec::erlang2(obj.at("rate").get<double>());
    }
    if (kind == "uniform") {
        reject_unknown_keys(obj, {"kind", "lo", "hi"}, where);
        return DistSpec::uniform(obj.at("lo").get<double>(), obj.at("hi").get<double>());
    }
    throw std::invalid_argument("scenario config: unknown distribution kind '" + kind +
                                "' in " + where);
}

json dist_to_json(const DistSpec& d) {
    switch (d.kind()) {
        case DistKind::Exponential: return {{"kind", "exp"}, {"rate", d.rate()}};
        case DistKind::Erlang2:     return {{"kind", "erlang2"}, {"rate", d.rate()}};
        default:                    return {{"kind", "uniform"}, {"lo", d.lo()}, {"hi", d.hi()}};
    }
}

}  // namespace

Scenario load_scenario_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("scenario config: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("scenario config: top level must be an object");
    reject_unknown_keys(doc, {"lambda", "v", "theta_max", "alpha", "epsilon",
                              "x", "y", "z", "sim"},
                        "top level");
    for (const char* key : {"lambda", "v", "theta_max", "alpha", "epsilon", "x", "y", "z"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("scenario config: missing key '") + key +
                                        "'");

    SimSettings sim;
    if (doc.contains("sim")) {
        const json& js = doc.at("sim");
        reject_unknown_keys(js, {"n_jobs", "warmup_fraction", "seed", "batches"}, "sim");
        if (js.contains("n_jobs")) sim.n_jobs = js.at("n_jobs").get<long>();
        if (js.contains("warmup_fraction"))
            sim.warmup_fraction = js.at("warmup_fraction").get<double>();
        if (js.contains("seed")) sim.seed = js.at("seed").get<std::uint64_t>();
        if (js.contains("batches")) sim.batches = js.at("batches").get<int>();
    }
    if (const char* env = std::getenv("SPECMARKET_SEED")) {
        sim.seed = std::stoull(env);
    }

    return Scenario::make(doc.at("lambda").get<double>(), doc.at("v").get<double>(),
                          doc.at("theta_max").get<double>(), doc.at("alpha").get<double>(),
                          doc.at("epsilon").get<double>(), parse_dist(doc.at("x"), "x"),
                          parse_dist(doc.at("y"), "y"), parse_dist(doc.at("z"), "z"), sim);
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    try {
        return load_scenario_json(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string scenario_to_json(const Scenario& s) {
    json doc = {{"lambda", s.lambda()},       {"v", s.reward_v()},
                {"theta_max", s.theta_max()}, {"alpha", s.alpha()},
                {"epsilon", s.epsilon()},     {"x", dist_to_json(s.x())},
                {"y", dist_to_json(s.y())},   {"z", dist_to_json(s.z())},
                {"sim",
                 {{"n_jobs", s.sim().n_jobs},
                  {"warmup_fraction", s.sim().warmup_fraction},
                  {"seed", s.sim().seed},
                  {"batches", s.sim().batches}}}};
    return doc.dump(2) + "\n";
}

Scenario resolve_scenario(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::exists(arg, ec)) return load_scenario_file(arg);
    try {
        Scenario s = preset_scenario(arg);
        if (const char* env = std::getenv("SPECMARKET_SEED")) {
            SimSettings sim = s.sim();
            sim.seed = std::stoull(env);
            return Scenario::make(s.lambda(), s.reward_v(), s.theta_max(), s.alpha(),
                                  s.epsilon(), s.x(), s.y(), s.z(), sim);
        }
        return s;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("'" + arg +
                                    "' is neither an existing scenario file nor a preset "
                                    "name (<combo>-<traffic>, combos: exp, erl, uniexp, "
                                    "erlexp, experl; traffic: light, heavy)");
    }
}

}  // namespace specmarket
