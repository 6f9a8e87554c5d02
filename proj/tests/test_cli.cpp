// End-to-end checks of the command-line tool: dispatch, flags, output
// shapes, and exit codes beyond the acceptance goldens.

#include <catch2/catch.hpp>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {
struct CliResult {
    int exit_code;
    std::string output;
};
CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(FOLIA_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return CliResult{WEXITSTATUS(status), out};
}
}  // namespace

TEST_CASE("degree and pullback commands") {
    CliResult deg = run_cli("degree --form \"y*dx - x*dy\"");
    REQUIRE(deg.exit_code == 0);
    REQUIRE(deg.output.find("degree 0") != std::string::npos);
    CliResult pb = run_cli("pullback --map \"[x^2:y^2:z^2]\" --form \"y*dx - x*dy\"");
    REQUIRE(pb.exit_code == 0);
    REQUIRE(pb.output.find("content: 2*x*y") != std::string::npos);
}

TEST_CASE("jacobian and critical commands") {
    CliResult j = run_cli("jacobian --map \"[x^3:y^3:z^3]\"");
    REQUIRE(j.exit_code == 0);
    REQUIRE(j.output.find("27*x^2*y^2*z^2") != std::string::npos);
    CliResult c = run_cli("critical --map \"[x^3:y^3:z^3]\"");
    REQUIRE(c.exit_code == 0);
    REQUIRE(c.output.find("2*(z) + 2*(y) + 2*(x)") != std::string::npos);
}

TEST_CASE("constraint flag feeds invariance") {
    CliResult r = run_cli(
        "invariant --map \"(lambda*x, x*y^2)\" --form \"dy/y + dx/x + mu*x*dx\" "
        "--params lambda,mu --constraint \"lambda^2 - 2\"");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("cofactor 2") != std::string::npos);
    CliResult r2 = run_cli(
        "invariant --map \"(lambda*x, x*y^2)\" --form \"dy/y + dx/x + mu*x*dx\" --params lambda,mu");
    REQUIRE(r2.exit_code == 1);
}

TEST_CASE("singular locus command") {
    CliResult r = run_cli("singular --form \"lambda*y*z*dx+x*z*dy-(1+lambda)*x*y*dz\" --params lambda");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("[0:0:1]") != std::string::npos);
    REQUIRE(r.output.find("[0:1:0]") != std::string::npos);
    REQUIRE(r.output.find("[1:0:0]") != std::string::npos);
}

TEST_CASE("blowup and seidenberg commands") {
    CliResult b = run_cli("blowup --form \"y*dx - x*dy\" --point 0,0");
    REQUIRE(b.exit_code == 0);
    REQUIRE(b.output.find("m=2") != std::string::npos);
    REQUIRE(b.output.find("E transverse") != std::string::npos);
    CliResult s = run_cli("seidenberg --form \"2*y*dy - 3*x^2*dx\" --point 0,0 --depth-cap 8");
    REQUIRE(s.exit_code == 0);
    REQUIRE(s.output.find("blowups: 3") != std::string::npos);
    REQUIRE(s.output.find("fully reduced") != std::string::npos);
}

TEST_CASE("catalog command constructs and certifies") {
    CliResult r = run_cli("catalog --case 4 --d 3 --p 1 --q 2 --l 1");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("invariant") != std::string::npos);
    CliResult grid = run_cli("catalog --case all --jobs 2");
    REQUIRE(grid.exit_code == 0);
    REQUIRE(grid.output.find("all pairs certified invariant") != std::string::npos);
    CliResult r1 = run_cli("catalog --case k1-1 --k 2 --m 1 --n 1");
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r1.output.find("cofactor 2") != std::string::npos);
    CliResult bad = run_cli("catalog --case 4 --d 2 --p 1 --q 1");
    REQUIRE(bad.exit_code == 2);
    REQUIRE(bad.output.find("p != q") != std::string::npos);
}

TEST_CASE("second-foliation command") {
    CliResult r = run_cli("second-foliation --matrix 2,1,1,2");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("cofactor 3") != std::string::npos);
    REQUIRE(r.output.find("cofactor 1") != std::string::npos);
    CliResult nd = run_cli("second-foliation --matrix 2,0,1,2");
    REQUIRE(nd.exit_code == 0);
    REQUIRE(nd.output.find("non-diagonalizable") != std::string::npos);
}

TEST_CASE("certify command") {
    CliResult r = run_cli(
        "certify --map \"[x^2:y^2:z^2]\" --form \"lambda*y*z*dx+x*z*dy-(1+lambda)*x*y*dz\" "
        "--params lambda");
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.output.find("matched case 2") != std::string::npos);
    CliResult swapped = run_cli(
        "certify --map \"[y^3:x^3:z*(z^2 + c*x*y)]\" --form \"y*z*dx + x*z*dy - 2*x*y*dz\" --params c");
    REQUIRE(swapped.exit_code == 0);
    REQUIRE(swapped.output.find("matched case 5") != std::string::npos);
}

TEST_CASE("json outputs parse and carry the command fields") {
    CliResult r = run_cli("degree --json --form \"y*dx - x*dy\"");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.output);
    REQUIRE(j["command"] == "degree");
    REQUIRE(j["result"]["degree"] == 0);
    REQUIRE(j["inputs"]["form"] == "y*dx - x*dy");
    CliResult err = run_cli("degree --json --form \"dx + dy\"");
    REQUIRE(err.exit_code == 2);
    json je = json::parse(err.output);
    REQUIRE(je.contains("error"));
}

TEST_CASE("unknown command and missing flags give usage errors") {
    REQUIRE(run_cli("frobnicate").exit_code != 0);
    REQUIRE(run_cli("invariant").exit_code != 0);
}
