#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "mdr/jobs.hpp"

using namespace mdr;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_tmp_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

JobSpec job(const std::string& command, std::vector<std::string> inputs, bool json = true,
            long window = 8) {
    JobSpec s;
    s.command = command;
    s.inputs = std::move(inputs);
    s.json_output = json;
    s.window = window;
    return s;
}

}  // namespace

TEST_CASE("cohomology command: golden G_m output") {
    auto gm = write_temp("gm.json", R"({"label":"Gm","vars":["z"],"eqs":[],"invert":["z"]})");
    auto res = run_job(job("cohomology", {gm}, false));
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "H^0: dim 1  basis: 1  F: 1 0  W: 1\n"
          "H^1: dim 1  basis: dz/z  F: 1 1 0  W: 0 0 1\n");
    // byte-identical across repeated runs
    auto res2 = run_job(job("cohomology", {gm}, false));
    CHECK(res.output == res2.output);
    auto resj = run_job(job("cohomology", {gm}, true));
    CHECK(resj.exit_code == 0);
    CHECK(resj.output.find("\"dz/z\"") != std::string::npos);
    std::remove(gm.c_str());
}

TEST_CASE("cohomology command: P1 divisor model") {
    auto p1 = write_temp("p1.json", R"({"model":"P1","points":[]})");
    auto res = run_job(job("cohomology", {p1}, false));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("H^0: dim 1") != std::string::npos);
    CHECK(res.output.find("H^2: dim 1") != std::string::npos);
    std::remove(p1.c_str());
}

TEST_CASE("compose command: graph composite") {
    auto a = write_temp("a.json", R"({
        "source": {"label": "X", "vars": ["z"]},
        "target": {"label": "Y", "vars": ["t"]},
        "components": [{"ideal": ["t-z^2"], "mult": 1}]})");
    auto b = write_temp("b.json", R"({
        "source": {"label": "Y", "vars": ["t"]},
        "target": {"label": "Z", "vars": ["u"]},
        "components": [{"ideal": ["u-t^3"], "mult": 1}]})");
    auto res = run_job(job("compose", {a, b}, false));
    CHECK(res.exit_code == 0);
    CHECK(res.output == "1 * [z^6-u] (degree 1)\n");
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("transfer command: trace of t dt along the double cover") {
    auto c = write_temp("c.json", R"({
        "source": {"label": "A1s", "vars": ["s"]},
        "target": {"label": "A1t", "vars": ["t"]},
        "components": [{"ideal": ["t^2-s"], "mult": 1}]})");
    auto f = write_temp("f.json", R"({"degree":1,"terms":[{"coeff":"t","wedge":["dt"]}]})");
    auto res = run_job(job("transfer", {c, f}, false));
    CHECK(res.exit_code == 0);
    CHECK(res.output == "ds\n");
    auto f0 = write_temp("f0.json", R"({"degree":1,"terms":[{"coeff":"1","wedge":["dt"]}]})");
    auto res0 = run_job(job("transfer", {c, f0}, false));
    CHECK(res0.output == "0\n");
    std::remove(c.c_str());
    std::remove(f.c_str());
    std::remove(f0.c_str());
}

TEST_CASE("localize and godement commands") {
    auto cat = write_temp("cat.json", R"({
        "objects": ["a", "b"],
        "arrows": [{"name":"ia","src":"a","dst":"a"},
                   {"name":"ib","src":"b","dst":"b"},
                   {"name":"s","src":"a","dst":"b"}],
        "identities": ["ia", "ib"],
        "comp": {"ia,ia":"ia","ib,ib":"ib","s,ia":"s","ib,s":"s"}})");
    auto sset = write_temp("s.json", R"({"arrows":["ia","ib","s"]})");
    auto res = run_job(job("localize", {cat, sset, "b", "a"}, false));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("1 classes") != std::string::npos);

    auto site = write_temp("site.json",
                           R"({"points":["a","b","c","d"],
                               "leq":[["c","a"],["c","b"],["d","a"],["d","b"]]})");
    auto sheaf = write_temp("sheaf.json", R"({"constant":1})");
    auto res2 = run_job(job("godement", {site, sheaf}, false));
    CHECK(res2.exit_code == 0);
    CHECK(res2.output.find("H^0: dim 1") != std::string::npos);
    CHECK(res2.output.find("H^1: dim 1") != std::string::npos);
    std::remove(cat.c_str());
    std::remove(sset.c_str());
    std::remove(site.c_str());
    std::remove(sheaf.c_str());
}

TEST_CASE("error taxonomy and exit codes") {
    // missing file: precondition fault, exit 2
    auto res = run_job(job("cohomology", {"no_such_file.json"}));
    CHECK(res.exit_code == 2);
    CHECK(res.error.find("precondition") != std::string::npos);

    // malformed json: parse fault, exit 2, no crash
    auto badj = write_temp("bad.json", "{ not json");
    auto res2 = run_job(job("cohomology", {badj}));
    CHECK(res2.exit_code == 2);
    CHECK(res2.error.find("parse") != std::string::npos);
    std::remove(badj.c_str());

    // bad polynomial grammar carries a column
    auto badp = write_temp("badp.json", R"({"label":"X","vars":["z"],"eqs":[],"invert":["z+"]})");
    auto res3 = run_job(job("cohomology", {badp}));
    CHECK(res3.exit_code == 2);
    CHECK(res3.error.find("column") != std::string::npos);
    std::remove(badp.c_str());

    // reducible correspondence generator: user fault
    auto badc = write_temp("badc.json", R"({
        "source": {"label": "X", "vars": ["z"]},
        "target": {"label": "Y", "vars": ["t"]},
        "components": [{"ideal": ["t^2-z^2"], "mult": 1}]})");
    auto dummy = write_temp("dummy.json", R"({"degree":0,"terms":[]})");
    auto res4 = run_job(job("transfer", {badc, dummy}));
    CHECK(res4.exit_code == 2);
    std::remove(badc.c_str());
    std::remove(dummy.c_str());

    // unknown command
    auto res5 = run_job(job("frobnicate", {}));
    CHECK(res5.exit_code == 2);
}

TEST_CASE("selftest battery passes and filters") {
    auto lines = run_selftest("resultant");
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].passed);
    auto res = run_job(job("selftest", {}));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("selftest passed") != std::string::npos);
}

TEST_CASE("realize command on the Tate motive") {
    auto motive = write_temp("tate.json", R"({
        "schemes": {"pt": {"label": "pt", "vars": []}},
        "terms": {"2": [{"kind": "p1"}], "3": [{"kind": "affine", "scheme": "pt"}]},
        "d": {"2": [[{"kind": "to_point"}]]},
        "twist": 0, "shift": 0})");
    auto res = run_job(job("realize", {motive}, false));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("H^0: dim 1") != std::string::npos);
    CHECK(res.output.find("W: 0 0 1") != std::string::npos);
    auto res2 = run_job(job("realize", {motive}, false));
    CHECK(res.output == res2.output);
    std::remove(motive.c_str());
}
