// okounkov-lab: batch runner for Okounkov-body, Chebyshev-transform and
// metric-geometry experiments, plus a report verifier.
//
// Exit codes: 0 all asserted tolerances met, 1 configuration/runtime error,
// 2 tolerance violation (report still written).
#include "oklab/cli/config.hpp"
#include "oklab/cli/pipelines.hpp"
#include "oklab/cli/verify.hpp"
#include "oklab/numeric.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

// Per-subcommand overrides collected from the command line; only values the
// user actually passed are merged over the (optional) config file.
struct Overrides {
    std::string variety, flag, flag_z0, weight;
    double shift = 0.0;
    int kmax = 0, resolution = 0, tsamples = 0;
    std::string kladder, pset;
    std::vector<std::string> pairs;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
    nlohmann::json doc = nlohmann::json::parse(in);  // throws parse_error on bad JSON
    if (!doc.is_object()) throw std::runtime_error("config file '" + path + "' is not a JSON object");
    return doc;
}

// Builds the effective experiment config: file (if given), then CLI overrides.
nlohmann::json assemble(const std::string& experiment, const std::string& config_path,
                        const CLI::App& cmd, const Overrides& ov, unsigned long long seed,
                        bool seed_given) {
    nlohmann::json doc =
        config_path.empty() ? nlohmann::json::object() : load_config_file(config_path);
    doc["experiment"] = experiment;
    if (cmd.count("--variety")) doc["variety"] = ov.variety;
    if (cmd.count("--flag")) {
        // "coord" is accepted as a shorthand for "coordinate".
        nlohmann::json flag = doc.contains("flag") && doc["flag"].is_object()
                                  ? doc["flag"]
                                  : nlohmann::json::object();
        flag["kind"] = ov.flag == "coord" ? "coordinate" : ov.flag;
        doc["flag"] = flag;
    }
    if (cmd.count("--flag-z0")) {
        nlohmann::json flag = doc.contains("flag") && doc["flag"].is_object()
                                  ? doc["flag"]
                                  : nlohmann::json::object();
        flag["z0"] = ov.flag_z0;
        doc["flag"] = flag;
    }
    if (cmd.count("--weight") || cmd.count("--shift")) {
        nlohmann::json weight = doc.contains("weight") && doc["weight"].is_object()
                                    ? doc["weight"]
                                    : nlohmann::json::object();
        if (cmd.count("--weight")) weight["kind"] = ov.weight;
        if (cmd.count("--shift")) weight["shift"] = ov.shift;
        doc["weight"] = weight;
    }
    if (cmd.count("--kmax")) doc["kmax"] = ov.kmax;
    if (cmd.count("--kladder")) {
        nlohmann::json ladder = nlohmann::json::array();
        for (const std::string& part : split(ov.kladder, ','))
            ladder.push_back(nlohmann::json::parse(part));  // keeps non-integers visible to validation
        doc["kladder"] = ladder;
    }
    if (cmd.count("--resolution")) doc["grid_resolution"] = ov.resolution;
    if (cmd.count("--tsamples")) doc["t_samples"] = ov.tsamples;
    if (cmd.count("--pset")) {
        nlohmann::json ps = nlohmann::json::array();
        for (const std::string& part : split(ov.pset, ',')) ps.push_back(nlohmann::json::parse(part));
        doc["p_set"] = ps;
    }
    if (!ov.pairs.empty()) {
        nlohmann::json pairs = nlohmann::json::array();
        for (const std::string& raw : ov.pairs) {
            const std::vector<std::string> f = split(raw, ':');
            if (f.size() != 3 && f.size() != 4)
                throw std::runtime_error("--pair expects id:u0:u1[:shift], got '" + raw + "'");
            nlohmann::json p{{"id", f[0]}, {"u0", f[1]}, {"u1", f[2]}};
            if (f.size() == 4) p["shift"] = nlohmann::json::parse(f[3]);
            pairs.push_back(std::move(p));
        }
        doc["pairs"] = pairs;
    }
    if (seed_given) doc["seed"] = seed;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "okounkov-lab: Okounkov bodies, Chebyshev transforms of invariant metrics, "
        "and the flat d_p geometry of the toric model"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    int threads = 0;
    unsigned long long seed = 0;
    bool svg = false;
    app.add_option("--config", config_path, "JSON experiment config file")->capture_default_str();
    app.add_option("--out", out_path,
                   "output: a directory, or a .json path naming the primary artifact");
    app.add_option("--threads", threads, "worker threads (0 = hardware default)");
    app.add_option("--seed", seed, "random seed (overrides the config)");
    app.add_flag("--svg", svg, "also write SVG plots");

    const std::vector<std::pair<std::string, std::string>> experiments{
        {"body", "compute an Okounkov body and its graded points"},
        {"chebyshev", "Chebyshev transform of a weight along a k-ladder"},
        {"geodesic", "Mabuchi geodesics: energy, distances, rooftop identity"},
        {"flatness", "certify the flatness criteria for catalog pairs"},
        {"busemann", "Busemann convexity between two geodesics"},
        {"d1demo", "two distinct d_1 geodesics and the bicombing check"}};
    std::map<std::string, CLI::App*> subs;
    Overrides ov;
    for (const auto& [name, blurb] : experiments) {
        CLI::App* cmd = app.add_subcommand(name, blurb);
        cmd->fallthrough();  // lets global flags (--out, --svg, ...) follow the subcommand
        cmd->add_option("--variety", ov.variety, "variety spec, e.g. p1:2, p2:1, p1xp1:1,2");
        cmd->add_option("--flag", ov.flag, "flag kind: coordinate|coord, p1-point, random-linear");
        cmd->add_option("--flag-z0", ov.flag_z0, "rational point for the p1-point flag");
        cmd->add_option("--weight", ov.weight, "weight kind (fs)");
        cmd->add_option("--shift", ov.shift, "additive weight shift");
        cmd->add_option("--kmax", ov.kmax, "max graded level for body enumeration");
        cmd->add_option("--kladder", ov.kladder, "comma-separated increasing k values");
        cmd->add_option("--resolution", ov.resolution, "model grid subintervals per axis");
        cmd->add_option("--tsamples", ov.tsamples, "uniform t-samples along paths");
        cmd->add_option("--pset", ov.pset, "comma-separated p exponents");
        cmd->add_option("--pair", ov.pairs,
                        "catalog pair id:u0:u1[:shift]; repeatable (catalog: zero, fs-dual, "
                        "half-square, linear)");
        subs[name] = cmd;
    }
    CLI::App* verify_cmd = app.add_subcommand("verify", "re-check report artifacts");
    verify_cmd->fallthrough();
    std::vector<std::string> report_paths;
    verify_cmd->add_option("reports", report_paths, "report JSON files");

    CLI11_PARSE(app, argc, argv);

    if (threads > 0) oklab::set_parallel_threads(threads);

    try {
        if (verify_cmd->parsed()) return oklab::verify_reports(report_paths, std::cout);

        std::string experiment;
        for (const auto& [name, cmd] : subs)
            if (cmd->parsed()) experiment = name;
        const CLI::App& cmd = *subs.at(experiment);
        const nlohmann::json doc = assemble(experiment, config_path, cmd, ov, seed,
                                            app.count("--seed") > 0);
        const oklab::ExperimentConfig cfg = oklab::parse_experiment_config(doc);

        // --out semantics: "<dir>" or "<dir>/name.json" (primary artifact name).
        namespace fs = std::filesystem;
        std::string out_dir = out_path.empty() ? "." : out_path;
        std::string primary = cfg.experiment + ".json";
        if (out_dir.size() > 5 && out_dir.compare(out_dir.size() - 5, 5, ".json") == 0) {
            const fs::path p(out_dir);
            primary = p.filename().string();
            out_dir = p.has_parent_path() ? p.parent_path().string() : ".";
        }

        const oklab::PipelineResult result = oklab::run_experiment(cfg, out_dir, primary, svg);
        for (const std::string& line : result.summary) std::cout << line << "\n";
        std::cout << "artifacts:\n";
        for (const std::string& path : result.artifacts) std::cout << "  " << path << "\n";
        return result.exit_code;
    } catch (const oklab::ConfigError& e) {
        std::cerr << "config error at " << e.what() << "\n";  // what() starts with the JSON pointer
        return 1;
    } catch (const nlohmann::json::parse_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
