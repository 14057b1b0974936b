// End-to-end checks of the command-line tool; argv[1] carries the binary
// path (wired up by CMake).

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "lelek/json_io.hpp"

using namespace lelek;

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = g_cli_path + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/lelek_cli_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("validate-params") {
    auto ok = run_cli("validate-params --r 1/2 --rho 3");
    CHECK(ok.exit_code == 0);
    CHECK(Json::parse(ok.output).at("nc") == true);

    auto bad = run_cli("validate-params --r 1/2 --rho 2");
    CHECK(bad.exit_code == 1);
    const Json j = Json::parse(bad.output);
    CHECK(j.at("nc") == false);
    CHECK(j.at("witness").at("k") == 1);
    CHECK(j.at("witness").at("l") == -1);
}

TEST_CASE("find-monomial matches the frozen example and is deterministic") {
    const std::string args = "find-monomial --r 1/2 --rho 3 --lo 2/5 --hi 1/2 --kfloor 1 --lfloor 1";
    auto first = run_cli(args);
    CHECK(first.exit_code == 0);
    const Json j = Json::parse(first.output);
    CHECK(j.at("m") == 6);
    CHECK(j.at("n") == 3);
    CHECK(j.at("value") == "27/64");
    CHECK(run_cli(args).output == first.output);
}

TEST_CASE("search exhaustion exits with code 3") {
    auto res = run_cli("find-monomial --r 1/2 --rho 3 --lo 49/100 --hi 499/1000 --budget 3");
    CHECK(res.exit_code == 3);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("find-monomial --r 1/2 --rho 3").exit_code == 2);  // missing --lo/--hi
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("validate-params --r banana --rho 3").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("orbit pipeline over files") {
    const std::string cyls = write_temp(
        "cyls.json", R"({"cylinders":[{"depth":3,"u1":["2/5","11/25"],"word":["R","P"]}]})");

    auto synth = run_cli("synthesize-orbit --r 1/2 --rho 3 --cylinders " + cyls);
    REQUIRE(synth.exit_code == 0);
    const std::string program = write_temp("program.json", synth.output);

    auto verified = run_cli("verify-orbit --r 1/2 --rho 3 --program " + program +
                            " --cylinders " + cyls);
    CHECK(verified.exit_code == 0);
    const Json certs = Json::parse(verified.output);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].at("pass") == true);
    CHECK(certs[0].at("offset") == 8);

    // Tamper with the visit offset: verification must fail with exit 1.
    Json tampered = Json::parse(synth.output);
    tampered["visits"][0][1] = 9;
    const std::string bad = write_temp("tampered.json", tampered.dump());
    auto failed =
        run_cli("verify-orbit --r 1/2 --rho 3 --program " + bad + " --cylinders " + cyls);
    CHECK(failed.exit_code == 1);
    CHECK(Json::parse(failed.output)[0].at("pass") == false);
}

TEST_CASE("witness and endpoint subcommands produce verifiable JSON") {
    const std::string cyl =
        write_temp("cyl.json", R"({"depth":3,"u1":["2/5","11/25"],"word":["R","P"]})");
    auto wit = run_cli("witness-transitivity --r 1/2 --rho 3 --u " + cyl + " --v " + cyl);
    REQUIRE(wit.exit_code == 0);
    const Json wj = Json::parse(wit.output);
    CHECK(wj.at("n").get<std::size_t>() >= 2);

    auto ep = run_cli("make-endpoint --r 1/2 --rho 3 --lo 2/5 --hi 1/2");
    REQUIRE(ep.exit_code == 0);
    CHECK(Json::parse(ep.output).at("x") == "27/64");

    const std::string point = write_temp("point.json", ep.output);
    auto cls = run_cli("classify-endpoint --r 1/2 --rho 3 --point " + point);
    CHECK(cls.exit_code == 0);
    CHECK(Json::parse(cls.output).at("class") == "endpoint");

    auto shifted = run_cli("shift --r 1/2 --rho 3 --point " + point);
    CHECK(shifted.exit_code == 0);
    CHECK(Json::parse(shifted.output).at("x") == "27/128");
}

TEST_CASE("inverse-limit subcommands") {
    const std::string vertex = write_temp("vertex.json", R"({"kind":"vertex"})");
    auto near = run_cli("invlim-endpoint-near --r 1/2 --rho 3 --point " + vertex + " --eps 1/4");
    REQUIRE(near.exit_code == 0);
    const std::string near_path = write_temp("near.json", near.output);
    auto cls = run_cli("invlim-classify --r 1/2 --rho 3 --point " + near_path);
    CHECK(Json::parse(cls.output).at("class") == "endpoint");

    const std::string reg = write_temp(
        "reg.json", R"({"kind":"regular","x":"27/64",
                        "a":{"prefix":["R","P"],"tail":{"kind":"const-r"}},
                        "c":{"prefix":[],"tail":{"kind":"const-p"}}})");
    auto fwd = run_cli("invlim-shift --r 1/2 --rho 3 --point " + reg);
    REQUIRE(fwd.exit_code == 0);
    CHECK(Json::parse(fwd.output).at("x") == "9/64");
    const std::string fwd_path = write_temp("fwd.json", fwd.output);
    auto back = run_cli("invlim-unshift --r 1/2 --rho 3 --point " + fwd_path);
    REQUIRE(back.exit_code == 0);
    CHECK(Json::parse(back.output).at("x") == "27/64");
}

TEST_CASE("rendering to a file is byte-stable") {
    auto direct = run_cli("render-fan --r 1/2 --rho 3 --depth 5 --word-budget 64");
    REQUIRE(direct.exit_code == 0);
    CHECK(direct.output.find("<svg") != std::string::npos);
    CHECK(run_cli("render-fan --r 1/2 --rho 3 --depth 5 --word-budget 64").output ==
          direct.output);
}

TEST_CASE("json config files mirror flags") {
    const std::string cfg = write_temp("cfg.json", R"({"r":"1/2","rho":"3"})");
    auto res = run_cli("validate-params --config " + cfg);
    CHECK(res.exit_code == 0);
    CHECK(Json::parse(res.output).at("nc") == true);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-lelekfan> [doctest args]\n");
        return 2;
    }
    g_cli_path = argv[1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    return context.run();
}
