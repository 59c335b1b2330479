// CLI layer: config validation with JSON-pointer errors, canonical config
// hashing, the tolerance table, pipeline runs with deterministic artifacts,
// and report re-verification.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "oklab/cli/config.hpp"
#include "oklab/cli/manifest.hpp"
#include "oklab/cli/pipelines.hpp"
#include "oklab/cli/verify.hpp"
#include "oklab/numeric.hpp"
#include "oklab/tolerances.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace oklab;
namespace fs = std::filesystem;

namespace {

nlohmann::json minimal(const std::string& experiment) {
    nlohmann::json doc{{"experiment", experiment}, {"variety", "p1:1"}};
    if (experiment == "geodesic" || experiment == "flatness" || experiment == "busemann")
        doc["pairs"] = {{{"id", "g"}, {"u0", "zero"}, {"u1", "fs-dual"}}};
    return doc;
}

std::string pointer_of(const nlohmann::json& doc) {
    try {
        parse_experiment_config(doc);
    } catch (const ConfigError& e) {
        return e.pointer;
    }
    return "";
}

std::string read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() / ("oklab-test-" + tag)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("config validation: defaults and JSON-pointer errors") {
    const ExperimentConfig cfg = parse_experiment_config(minimal("chebyshev"));
    CHECK(cfg.variety == "p1:1");
    CHECK(cfg.flag_kind == "coordinate");
    CHECK(cfg.weight_kind == "fs");
    CHECK(cfg.kladder == std::vector<int>{16, 32, 64, 128});
    CHECK(cfg.grid_resolution == 512);
    CHECK(cfg.t_samples == 41);
    CHECK(cfg.p_set == std::vector<double>{1.0, 2.0, 3.0});

    // Surfaces get the coarser defaults.
    nlohmann::json surf = minimal("chebyshev");
    surf["variety"] = "p2:1";
    const ExperimentConfig scfg = parse_experiment_config(surf);
    CHECK(scfg.kladder == std::vector<int>{8, 16, 32, 64});
    CHECK(scfg.grid_resolution == 96);

    CHECK(pointer_of(nlohmann::json::object()) == "/experiment");
    CHECK(pointer_of({{"experiment", "frobnicate"}}) == "/experiment");

    nlohmann::json doc = minimal("chebyshev");
    doc["kladder"] = {-3, 16};
    CHECK(pointer_of(doc) == "/kladder/0");
    doc["kladder"] = {16, 16};
    CHECK(pointer_of(doc) == "/kladder/1");  // must be strictly increasing

    doc = minimal("chebyshev");
    doc["frobnicate"] = 1;
    CHECK(pointer_of(doc) == "/frobnicate");

    doc = minimal("flatness");
    doc.erase("pairs");
    CHECK(pointer_of(doc) == "/pairs");
    doc["pairs"] = nlohmann::json::array();
    CHECK(pointer_of(doc) == "/pairs");
    doc["pairs"] = {{{"id", "g"}, {"u0", "zero"}, {"u1", "nonsense"}}};
    CHECK(pointer_of(doc) == "/pairs/0/u1");

    doc = minimal("d1demo");
    doc["grid_resolution"] = 100;  // not a multiple of 16
    CHECK(pointer_of(doc) == "/grid_resolution");

    doc = minimal("chebyshev");
    doc["variety"] = "p2:1";
    doc["flag"] = {{"kind", "p1-point"}};  // curves only
    CHECK(pointer_of(doc) == "/flag/kind");

    doc = minimal("chebyshev");
    doc["flag"] = {{"kind", "random-linear"}};  // level pipeline needs the coordinate flag
    CHECK(pointer_of(doc) == "/flag/kind");
    doc["experiment"] = "body";  // ... but the body pipeline accepts it
    CHECK(pointer_of(doc) == "");

    doc = minimal("chebyshev");
    doc["weight"] = {{"kind", "gaussian"}};
    CHECK(pointer_of(doc) == "/weight/kind");

    doc = minimal("geodesic");
    doc["t_samples"] = 1;
    CHECK(pointer_of(doc) == "/t_samples");

    doc = minimal("geodesic");
    doc["p_set"] = {0.5};
    CHECK(pointer_of(doc) == "/p_set/0");
}

TEST_CASE("config hashing is canonical") {
    // FNV-1a 64 reference vectors.
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");

    // Omitted fields materialize to defaults, so an explicit spelling of the
    // defaults hashes identically to the terse config.
    nlohmann::json terse = minimal("chebyshev");
    nlohmann::json verbose = minimal("chebyshev");
    verbose["kladder"] = {16, 32, 64, 128};
    verbose["grid_resolution"] = 512;
    verbose["t_samples"] = 41;
    verbose["p_set"] = {1.0, 2.0, 3.0};
    verbose["seed"] = 0;
    verbose["weight"] = {{"kind", "fs"}, {"shift", 0.0}};
    verbose["flag"] = {{"kind", "coordinate"}};
    const RunManifest a = make_manifest(parse_experiment_config(terse));
    const RunManifest b = make_manifest(parse_experiment_config(verbose));
    CHECK(a.config_hash == b.config_hash);
    CHECK(a.artifact_version == kArtifactVersion);

    nlohmann::json other = minimal("chebyshev");
    other["seed"] = 7;
    CHECK(make_manifest(parse_experiment_config(other)).config_hash != a.config_hash);
}

TEST_CASE("tolerance table") {
    const ToleranceRule* lin = find_tolerance("linearity");
    REQUIRE(lin != nullptr);
    CHECK(lin->op == ToleranceOp::LessEq);
    CHECK(lin->bound == 1e-12);
    CHECK(tolerance_holds(*lin, 5e-13));
    CHECK(!tolerance_holds(*lin, 5e-12));

    const ToleranceRule* bus = find_tolerance("busemann-min");
    REQUIRE(bus != nullptr);
    CHECK(bus->op == ToleranceOp::GreaterEq);
    CHECK(tolerance_holds(*bus, 0.0));
    CHECK(!tolerance_holds(*bus, -1e-6));

    const ToleranceRule* cat = find_tolerance("cat0-gap");
    REQUIRE(cat != nullptr);
    CHECK(cat->op == ToleranceOp::AbsLessEq);
    CHECK(tolerance_holds(*cat, -5e-10));
    CHECK(!tolerance_holds(*cat, -5e-9));

    CHECK(find_tolerance("no-such-criterion") == nullptr);
    CHECK(tolerance_snapshot_json().contains("separator-gap"));
}

TEST_CASE("body pipeline writes a passing, verifiable artifact") {
    TempDir tmp("body");
    nlohmann::json doc = minimal("body");
    doc["variety"] = "p2:1";
    doc["kmax"] = 3;
    const ExperimentConfig cfg = parse_experiment_config(doc);
    const PipelineResult result = run_experiment(cfg, tmp.path.string(), "body.json", false);
    CHECK(result.exit_code == 0);
    REQUIRE(!result.artifacts.empty());

    const nlohmann::json artifact = nlohmann::json::parse(read_bytes(tmp.path / "body.json"));
    CHECK(artifact["artifact"] == "body");
    CHECK(artifact["manifest"]["artifact_version"] == kArtifactVersion);
    CHECK(artifact["data"]["volume"]["holds"] == true);
    CHECK(artifact["data"]["volume"]["body"] == "1/2");
    REQUIRE(artifact["checks"].size() == 1);
    CHECK(artifact["checks"][0]["criterion"] == "body-volume-identity");

    // Companions carry the manifest header; the sidecar records timings.
    const std::string csv = read_bytes(tmp.path / "graded_points.csv");
    CHECK(csv.rfind("# artifact_version,", 0) == 0);
    CHECK(csv.find(artifact["manifest"]["config_hash"].get<std::string>()) != std::string::npos);
    const nlohmann::json sidecar = nlohmann::json::parse(read_bytes(tmp.path / "manifest.json"));
    CHECK(sidecar["config_hash"] == artifact["manifest"]["config_hash"]);
    CHECK(sidecar["stages"].is_array());

    // verify: fresh artifact passes...
    std::ostringstream log;
    CHECK(verify_reports({(tmp.path / "body.json").string()}, log) == 0);
    CHECK(log.str().find("PASS  body-volume-identity") != std::string::npos);

    // ... a hand-edited residual fails, naming the criterion ...
    nlohmann::json tampered = artifact;
    tampered["checks"][0]["value"] = 0.0;
    std::ofstream(tmp.path / "tampered.json") << tampered.dump(2) << "\n";
    std::ostringstream log2;
    CHECK(verify_reports({(tmp.path / "tampered.json").string()}, log2) == 2);
    CHECK(log2.str().find("FAIL  body-volume-identity") != std::string::npos);

    // ... an edited config is rejected by the hash ...
    nlohmann::json mismatched = artifact;
    mismatched["config"]["kmax"] = 4;
    std::ofstream(tmp.path / "mismatched.json") << mismatched.dump(2) << "\n";
    std::ostringstream log3;
    CHECK(verify_reports({(tmp.path / "mismatched.json").string()}, log3) == 2);
    CHECK(log3.str().find("config_hash mismatch") != std::string::npos);

    // ... an unknown version is rejected ...
    nlohmann::json wrong_version = artifact;
    wrong_version["manifest"]["artifact_version"] = "999";
    std::ofstream(tmp.path / "version.json") << wrong_version.dump(2) << "\n";
    std::ostringstream log4;
    CHECK(verify_reports({(tmp.path / "version.json").string()}, log4) == 2);
    CHECK(log4.str().find("artifact_version") != std::string::npos);

    // ... and missing files / empty sets are usage errors.
    std::ostringstream log5;
    CHECK(verify_reports({(tmp.path / "does-not-exist.json").string()}, log5) == 1);
    std::ostringstream log6;
    CHECK(verify_reports({}, log6) == 1);
}

TEST_CASE("artifacts are byte-identical across runs and thread counts") {
    nlohmann::json doc = minimal("chebyshev");
    doc["kladder"] = {16, 32, 64};
    doc["grid_resolution"] = 256;
    const ExperimentConfig cfg = parse_experiment_config(doc);

    auto run = [&](const std::string& tag, int threads) {
        set_parallel_threads(threads);
        TempDir tmp(tag);
        run_experiment(cfg, tmp.path.string(), "cheb.json", true);
        return std::array<std::string, 3>{read_bytes(tmp.path / "cheb.json"),
                                          read_bytes(tmp.path / "cheb.csv"),
                                          read_bytes(tmp.path / "cheb_levels.svg")};
    };
    const auto first = run("det1", 1);
    const auto second = run("det2", 1);
    const auto threaded = run("det4", 4);
    set_parallel_threads(0);
    CHECK(first == second);
    CHECK(first == threaded);
    CHECK(first[0].find("\"transform-sup-k64\"") != std::string::npos);
}

TEST_CASE("geodesic and d1demo pipelines pass end to end") {
    TempDir tmp("geo");
    nlohmann::json doc = minimal("geodesic");
    doc["grid_resolution"] = 256;
    doc["t_samples"] = 9;
    const PipelineResult geo =
        run_experiment(parse_experiment_config(doc), tmp.path.string(), "geodesic.json", false);
    CHECK(geo.exit_code == 0);
    const nlohmann::json artifact = nlohmann::json::parse(read_bytes(tmp.path / "geodesic.json"));
    CHECK(artifact["data"]["pairs"][0]["rooftop"]["gap"].get<double>() == doctest::Approx(0.0).epsilon(1e-10));

    nlohmann::json d1 = minimal("d1demo");
    d1["grid_resolution"] = 128;
    const PipelineResult demo =
        run_experiment(parse_experiment_config(d1), tmp.path.string(), "d1demo.json", false);
    CHECK(demo.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(read_bytes(tmp.path / "d1demo.json"));
    CHECK(report["data"]["hinge"]["separation_at_half"].get<double>() ==
          doctest::Approx(0.08578643762690485).epsilon(1e-3));
    CHECK(report["data"]["selectors"]["hinge_demo"]["symmetry_residual"].get<double>() > 0.5);
    std::ostringstream log;
    CHECK(verify_reports({(tmp.path / "geodesic.json").string(),
                          (tmp.path / "d1demo.json").string()},
                         log) == 0);
}
