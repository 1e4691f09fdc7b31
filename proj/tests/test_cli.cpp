#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "sqdisc/errors.hpp"
#include "sqdisc/families.hpp"
#include "sqdisc/verify.hpp"

using namespace sqdisc;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    const std::string cmd = std::string(SQDISC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

const Verdict& verdict(const Report& r, const std::string& name) {
    for (const auto& v : r.verdicts()) {
        if (v.name == name) return v;
    }
    FAIL("no verdict " << name);
    static Verdict none;
    return none;
}

}  // namespace

TEST_CASE("Report: counterexamples iff a verdict fails") {
    Report r("verify", {{"suite", "x"}});
    r.add("a", true, 1);
    CHECK(r.ok());
    CHECK(r.counterexamples().empty());
    r.add("b", false, nullptr, json{{"t", "3"}});
    CHECK_FALSE(r.ok());
    REQUIRE(r.counterexamples().size() == 1);
    CHECK(r.counterexamples()[0]["verdict"] == "b");
    const json j = r.to_json();
    CHECK(j["ok"] == false);
    CHECK_FALSE(j.contains("timing"));
    r.set_timing(0.5);
    CHECK(r.to_json()["timing"]["seconds"] == 0.5);
    CHECK(r.human().find("FAIL  b") != std::string::npos);
}

TEST_CASE("cmd_classify") {
    Report r = cmd_classify("[-1, 0]");
    CHECK(verdict(r, "discriminant").value == "64");
    CHECK(verdict(r, "square_disc_direct").value == true);
    CHECK(verdict(r, "cm").value == true);
    CHECK(verdict(r, "j").value == "1728");
    CHECK(r.ok());

    r = cmd_classify("[0, 1]");
    CHECK(verdict(r, "discriminant").value == "-432");
    CHECK(verdict(r, "square_disc_direct").value == false);
    CHECK(verdict(r, "cm").value == true);

    r = cmd_classify("[0,-1,1,0,0]");
    CHECK(verdict(r, "discriminant").value == "-11");
    CHECK(verdict(r, "square_disc_direct").value == false);
    CHECK(verdict(r, "cm").value == false);

    CHECK_THROWS_AS(cmd_classify("[0, 0]"), SingularModelError);
    CHECK_THROWS_AS(cmd_classify("[1, 2, 3]"), ParseError);
}

TEST_CASE("cmd_family") {
    Report r = cmd_family(2, "3");
    CHECK(verdict(r, "j").value == theorem1_j(2, 3).str());
    CHECK(verdict(r, "j").value == "35152/9");
    CHECK(verdict(r, "sqrt discriminant certificate").ok);
    CHECK(r.ok());

    r = cmd_family(7, "1");
    CHECK(verdict(r, "j").value == theorem1_j(7, 1).str());
    CHECK(verdict(r, "sqrt discriminant certificate").ok);
    CHECK(r.ok());

    // t = 1 at level 2 lands on j = 1728; the certificate comes from y^2 = x^3 - x.
    r = cmd_family(2, "1");
    CHECK(verdict(r, "j").value == "1728");
    CHECK(verdict(r, "model").value == R"(["-1","0"])");
    CHECK(r.ok());

    for (int N : kTheorem1Levels) CHECK_MESSAGE(cmd_family(N, "5/3").ok(), "N = ", N);

    CHECK_THROWS_WITH_AS(cmd_family(5, "1"), doctest::Contains("N not in Theorem 1 set"), DomainError);
    CHECK_THROWS_AS(cmd_family(2, "0"), PoleError);
}

TEST_CASE("cmd_search and cmd_verify") {
    CHECK(verdict(cmd_search(10, "C", 30), "count").value == 4);
    CHECK(verdict(cmd_search(6, "X", 12), "count").value == 6);
    CHECK_THROWS_AS(cmd_search(10, "Z", 30), DomainError);

    const Report c = cmd_verify("congruences");
    CHECK(c.verdicts().size() == 28);
    CHECK(c.ok());
    CHECK(cmd_verify("finite-cases").ok());
    CHECK(cmd_verify("tables-C", {.height = 50}).ok());
    CHECK_THROWS_AS(cmd_verify("nope"), DomainError);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
    SuiteOptions one{.height = 30, .samples = 20, .threads = 1};
    SuiteOptions four = one;
    four.threads = 4;
    CHECK(cmd_verify("tables-C", one).to_json().dump() == cmd_verify("tables-C", four).to_json().dump());
    CHECK(cmd_verify("thm1", one).to_json().dump() == cmd_verify("thm1", one).to_json().dump());
    CHECK(cmd_verify("prop-equivalence", one).to_json().dump() ==
          cmd_verify("prop-equivalence", one).to_json().dump());
}

TEST_CASE("command-line binary") {
    Run r = run_cli("classify '[-1,0]'");
    CHECK(r.status == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "classify");
    CHECK(j["ok"] == true);
    CHECK(j["verdicts"][0]["value"] == "64");

    CHECK(run_cli("verify --suite congruences").status == 0);
    const Run a = run_cli("verify --suite prop-equivalence --samples 200 --seed 5");
    const Run b = run_cli("verify --suite prop-equivalence --samples 200 --seed 5");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(run_cli("search --N 12 --curve C --height 10 --threads 3").out ==
          run_cli("search --N 12 --curve C --height 10").out);

    CHECK(run_cli("family --N 2 --t 3 --human").out.find("35152/9") != std::string::npos);
    CHECK(run_cli("family --N 5 --t 1").status == 2);
    CHECK(run_cli("family --N 2 --t 0").status == 2);
    CHECK(run_cli("classify '[0,0]'").status == 2);
    CHECK(run_cli("verify --suite unknown").status == 2);
    CHECK(run_cli("verify --suite congruences --data-dir /nonexistent").status == 2);
}

TEST_CASE("a report with counterexamples exits 1") {
    // Data directory whose C_10 point list lacks (-1,-5): the search finds an extra point.
    const auto dir = std::filesystem::temp_directory_path() / "sqdisc_cli_data";
    std::filesystem::create_directories(dir);
    std::filesystem::copy_file(data_dir() / "modular_polynomials.txt", dir / "modular_polynomials.txt",
                               std::filesystem::copy_options::overwrite_existing);
    std::ifstream in(data_dir() / "tables.txt");
    std::ofstream out(dir / "tables.txt");
    bool changed = false;
    for (std::string line; std::getline(in, line);) {
        if (line == "pointsC = (4,0) (0,0) (-1,5) (-1,-5)") {
            line = "pointsC = (4,0) (0,0) (-1,5)";
            changed = true;
        }
        out << line << "\n";
    }
    out.close();
    REQUIRE(changed);
    const Run r = run_cli("verify --suite tables-C --height 20 --data-dir " + dir.string());
    CHECK(r.status == 1);
    const json j = json::parse(r.out);
    CHECK(j["ok"] == false);
    REQUIRE(j["counterexamples"].size() == 1);
    CHECK(j["counterexamples"][0]["verdict"] == "points C_10 up to height 20");
}
