#include <catch2/catch.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "mz/mz.hpp"

#ifndef MZ_CLI_PATH
#error "MZ_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct CmdResult {
    int status = -1;
    std::string output;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(MZ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof(buffer), pipe)) {
        result.output.append(buffer, got);
    }
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::filesystem::path write_temp(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace

TEST_CASE("cli bounds") {
    SECTION("text output reports the bound pair") {
        const auto r = run_cli("bounds --degrees 3,3,3,3,2,2,2,2,2,1,1,1,1");
        CHECK(r.status == 0);
        CHECK(r.output.find("lower=64 upper=74") != std::string::npos);
        CHECK(r.output.find("das_gutman=182") != std::string::npos);
    }
    SECTION("out-of-class sequences exit 1 and cite the violated condition") {
        const auto r = run_cli("bounds --degrees 5,1,1,1,1,1");
        CHECK(r.status == 1);
        CHECK(r.output.find("1+d_1") != std::string::npos);
    }
    SECTION("non-graphical sequences exit 1") {
        const auto r = run_cli("bounds --degrees 3,3,3,1");
        CHECK(r.status == 1);
    }
    SECTION("malformed degrees exit 2") {
        CHECK(run_cli("bounds --degrees 3,x,1").status == 2);
        CHECK(run_cli("bounds").status == 2);
    }
    SECTION("unsorted input is accepted with a notice") {
        const auto r = run_cli("bounds --degrees 1,2,2,3");
        CHECK(r.status == 0);
        CHECK(r.output.find("reordered") != std::string::npos);
        CHECK(r.output.find("lower=19 upper=20") != std::string::npos);
    }
    SECTION("degree files are accepted") {
        const auto path = write_temp("mz_degrees.txt", "3 3 3 3\n2 1 1\n");
        const auto r = run_cli("bounds --degree-file " + path.string());
        CHECK(r.status == 0);
        CHECK(r.output.find("lower=54 upper=58") != std::string::npos);
    }
    SECTION("giving both input sources is a usage error") {
        const auto path = write_temp("mz_degrees.txt", "3 3 3 3\n2 1 1\n");
        CHECK(run_cli("bounds --degrees 3,2,2,1 --degree-file " + path.string()).status == 2);
    }
}

TEST_CASE("cli bounds json round-trips") {
    const auto r = run_cli("bounds --degrees 3,3,3,3,2,2,2,2,2,1,1,1,1 --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.output);

    const mz::DegreeSequence seq({3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1, 1});
    const auto report = mz::zagreb_bounds(seq);

    CHECK(j.at("n").get<long long>() == 13);
    CHECK(j.at("m").get<long long>() == 13);
    CHECK(j.at("a").get<long long>() == 60);
    CHECK(j.at("h").get<long long>() == 4);
    CHECK(j.at("m1").get<long long>() == 4);
    CHECK(j.at("m2").get<long long>() == 3);
    CHECK(j.at("M1").get<long long>() == 6);
    CHECK(j.at("M2").get<long long>() == 4);
    CHECK(j.at("lower").get<long long>() == report.lower);
    CHECK(j.at("upper").get<long long>() == report.upper);
    CHECK(j.at("das_gutman").get<long long>() == report.das_gutman.value());

    const auto& lower_vec = j.at("lower_vector");
    REQUIRE(lower_vec.size() == report.lower_vector.size());
    for (std::size_t i = 0; i < lower_vec.size(); ++i) {
        CHECK(lower_vec[i].get<double>() == Approx(report.lower_vector[i]));
    }
    const auto& upper_vec = j.at("upper_vector");
    REQUIRE(upper_vec.size() == report.upper_vector.size());
    for (std::size_t i = 0; i < upper_vec.size(); ++i) {
        CHECK(upper_vec[i].get<double>() == Approx(report.upper_vector[i]));
    }

    const auto& branches = j.at("branches");
    CHECK(branches.at("upper").at("branch").get<std::string>() == report.upper_trace.branch);
    CHECK(branches.at("lower").at("branch").get<std::string>() == report.lower_trace.branch);
    CHECK(branches.at("upper").at("k").get<std::size_t>() == report.upper_trace.k);
    CHECK(branches.at("upper").at("theta").get<double>() ==
          Approx(report.upper_trace.theta.value()));
    CHECK(branches.at("lower").at("rho").get<double>() == Approx(report.lower_trace.rho.value()));
    const auto& fractional = branches.at("lower").at("vector");
    REQUIRE(fractional.size() == report.lower_trace.vector.size());
    for (std::size_t i = 0; i < fractional.size(); ++i) {
        CHECK(fractional[i].get<double>() == Approx(report.lower_trace.vector[i]));
    }

    // Text and JSON must agree on the numbers.
    const auto text = run_cli("bounds --degrees 3,3,3,3,2,2,2,2,2,1,1,1,1");
    const std::string expected = "lower=" + std::to_string(j.at("lower").get<long long>()) +
                                 " upper=" + std::to_string(j.at("upper").get<long long>());
    CHECK(text.output.find(expected) != std::string::npos);
}

TEST_CASE("cli exact") {
    const auto path = write_temp("mz_triangle_pendant.txt",
                                 "# triangle plus one pendant vertex\n"
                                 "0 1\n0 2\n1 2\n\n0 3\n");
    SECTION("text") {
        const auto r = run_cli("exact --edges " + path.string());
        CHECK(r.status == 0);
        CHECK(r.output.find("S(G)=19") != std::string::npos);
    }
    SECTION("json") {
        const auto r = run_cli("exact --edges " + path.string() + " --format json");
        REQUIRE(r.status == 0);
        const auto j = nlohmann::json::parse(r.output);
        CHECK(j.at("S").get<long long>() == 19);
        CHECK(j.at("n").get<long long>() == 4);
        CHECK(j.at("m").get<long long>() == 4);
    }
    SECTION("malformed edge files exit 2") {
        const auto bad = write_temp("mz_bad_edges.txt", "0 1\n2\n");
        CHECK(run_cli("exact --edges " + bad.string()).status == 2);
        CHECK(run_cli("exact --edges /nonexistent/file.txt").status == 2);
        CHECK(run_cli("exact").status == 2);
    }
    SECTION("disconnected graphs are a domain error") {
        const auto split = write_temp("mz_split_edges.txt", "0 1\n2 3\n");
        CHECK(run_cli("exact --edges " + split.string()).status == 1);
    }
}

TEST_CASE("cli closed-form") {
    const auto r = run_cli("closed-form --family tree_i --params 3,2");
    CHECK(r.status == 0);
    CHECK(r.output.find("lower=21 upper=24") != std::string::npos);

    CHECK(run_cli("closed-form --family tree_iv --params 3").status == 2);
    CHECK(run_cli("closed-form --family tree_i --params 2,2").status == 1);
}

TEST_CASE("cli verify") {
    SECTION("small sequences verify by enumeration") {
        const auto r = run_cli("verify --degrees 3,2,2,1");
        CHECK(r.status == 0);
        CHECK(r.output.find("enumeration") != std::string::npos);
        CHECK(r.output.find("PASS") != std::string::npos);
    }
    SECTION("large sequences verify by sampling with the given seed") {
        const auto r = run_cli("verify --degrees 3,3,3,3,2,2,2,2,2,1,1,1,1 --seed 7");
        CHECK(r.status == 0);
        CHECK(r.output.find("sampling") != std::string::npos);
        CHECK(r.output.find("seed=7") != std::string::npos);
        CHECK(r.output.find("PASS") != std::string::npos);
    }
}

TEST_CASE("cli graphical") {
    const auto yes = run_cli("graphical --degrees 3,2,2,1");
    CHECK(yes.status == 0);
    CHECK(yes.output.find("graphical") != std::string::npos);

    const auto no = run_cli("graphical --degrees 3,3,3,1");
    CHECK(no.status == 1);
    CHECK(no.output.find("not graphical") != std::string::npos);
}
