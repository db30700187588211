#include "addcomb/errors.hpp"
#include "addcomb/experiment.hpp"
#include "addcomb/report.hpp"

#include <doctest.h>

#include <sstream>

using namespace addcomb;

namespace {

RunReport sample_report() {
    RunReport rep;
    rep.command = "energy";
    rep.seed = 7;
    rep.rng_id = "splitmix64";
    rep.version = "0.1.0";
    rep.timestamp = "2026-01-01T00:00:00Z";
    RunRecord rec;
    rec.key = "set=N=40,list:all|k=08";
    rec.add("N", rv_int(40));
    rec.add("t_k", rv_count(pow_count(BigCount(40), 15))); // far beyond 2^53
    rec.add("bound", rv_float(0.001953125));
    rec.add("ratio", rv_float(1.0 / 3.0));
    rec.add("note", rv_text("quote \" and comma , inside"));
    rec.add("pass", rv_bool(true));
    rep.records.push_back(rec);
    RunRecord rec2 = rec;
    rec2.key = "set=N=40,list:all|k=02";
    rec2.fields[5].second = rv_bool(false);
    rep.records.push_back(rec2);
    rep.sort_records();
    rep.aggregate.emplace_back("records", rv_int(2));
    return rep;
}

} // namespace

TEST_CASE("float formatting uses 15 significant digits") {
    CHECK(format_float(1.0 / 3.0) == "0.333333333333333");
    CHECK(format_float(0.001953125) == "0.001953125");
    CHECK(format_float(2.0) == "2");
    CHECK(rv_float(std::numeric_limits<double>::infinity()).text == "inf");
}

TEST_CASE("records sort by key and counts stay exact") {
    RunReport rep = sample_report();
    CHECK(rep.records[0].key == "set=N=40,list:all|k=02");
    CHECK(rep.failures() == 1);
    // 40^15 = 1073741824000000000000000 exactly
    CHECK(rep.records[0].find("t_k")->text == "1073741824000000000000000");
}

TEST_CASE("json emission is deterministic and round-trips byte-identically") {
    RunReport rep = sample_report();
    const std::string a = emit_json(rep);
    const std::string b = emit_json(rep);
    CHECK(a == b);

    RunReport parsed = parse_json_report(a);
    CHECK(emit_json(parsed) == a);
    CHECK(parsed.records.size() == 2);
    CHECK(parsed.seed == 7);
    CHECK(parsed.records[0].find("t_k")->text == "1073741824000000000000000");

    // timestamp is excluded from the determinism contract
    RunReport later = rep;
    later.timestamp = "2026-01-02T00:00:00Z";
    CHECK(emit_json(rep, false) == emit_json(later, false));
    CHECK(emit_json(rep, true) != emit_json(later, true));
}

TEST_CASE("empty sweep emits a valid document with zero records") {
    RunReport rep;
    rep.command = "spectrum";
    rep.rng_id = "splitmix64";
    rep.version = "0.1.0";
    rep.timestamp = "t";
    rep.aggregate.emplace_back("records", rv_int(0));
    const std::string json = emit_json(rep);
    RunReport parsed = parse_json_report(json);
    CHECK(parsed.records.empty());
    CHECK(emit_json(parsed) == json);
    CHECK(emit_csv(rep).empty());
}

TEST_CASE("csv carries the same numeric values as the json") {
    RunReport rep = sample_report();
    const std::string csv = emit_csv(rep);
    std::istringstream lines(csv);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(header == "instance,N,t_k,bound,ratio,note,pass");
    CHECK(row.find("1073741824000000000000000") != std::string::npos);
    CHECK(row.find("0.001953125") != std::string::npos);
    CHECK(row.find("0.333333333333333") != std::string::npos);
    // quoted cell with embedded quote and comma
    CHECK(row.find("\"quote \"\" and comma , inside\"") != std::string::npos);
}

TEST_CASE("experiment runs are deterministic and exit codes reflect verdicts") {
    ExperimentConfig cfg;
    cfg.command = "verify-main";
    cfg.moduli = {5};
    cfg.exhaustive = true;
    cfg.alphas = {"delta", "delta/2"};
    cfg.ks = {2};
    cfg.seed = 99;

    RunOutcome a = run_verify_main(cfg);
    RunOutcome b = run_verify_main(cfg);
    CHECK(a.exit_code == 0);
    CHECK(emit_json(a.report, false) == emit_json(b.report, false));
    CHECK(a.report.failures() == 0);

    // randomized sweeps: same seed, same bytes; different seed, different sets
    cfg.exhaustive = false;
    cfg.moduli = {16};
    cfg.random_instances = 5;
    RunOutcome r1 = run_verify_main(cfg);
    RunOutcome r2 = run_verify_main(cfg);
    CHECK(emit_json(r1.report, false) == emit_json(r2.report, false));
    cfg.seed = 100;
    RunOutcome r3 = run_verify_main(cfg);
    CHECK(emit_json(r1.report, false) != emit_json(r3.report, false));
}

TEST_CASE("malformed reports are rejected") {
    CHECK_THROWS_AS(parse_json_report("{"), input_error);
    CHECK_THROWS_AS(parse_json_report("{\"unknown\": 1}"), input_error);
    CHECK_THROWS_AS(parse_json_report("{\"command\": \"x\" \"version\": \"y\"}"), input_error);
    CHECK_THROWS_AS(parse_json_report("not json at all"), input_error);
}

TEST_CASE("input errors surface as input_error for the CLI to map to exit 2") {
    ExperimentConfig cfg;
    cfg.command = "spectrum";
    cfg.sets = {"N=4,list:0,2"};
    cfg.alphas = {"0"};
    CHECK_THROWS_AS(run_spectrum(cfg), input_error);

    cfg.alphas = {"3/4"}; // exceeds delta = 1/2
    CHECK_THROWS_AS(run_spectrum(cfg), input_error);

    ExperimentConfig bad;
    bad.command = "energy";
    bad.sets = {"N=10,random:delta=2,seed=1"};
    CHECK_THROWS_AS(run_energy(bad), input_error);
}

TEST_CASE("budget refusals surface as exit code 2 in systems runs") {
    ExperimentConfig cfg;
    cfg.command = "systems";
    cfg.sets = {"N=64,random:delta=0.9,seed=3"};
    cfg.ks = {2};
    cfg.ds = {3};
    cfg.mode = "enumerate";
    RunOutcome out = run_systems(cfg);
    CHECK(out.exit_code == 2);
}
