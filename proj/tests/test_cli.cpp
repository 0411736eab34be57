#include "isochron/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace isochron;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli_run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        path = std::string("cli_test_field_") + std::to_string(counter++) + ".vf";
        std::ofstream f(path);
        f << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
    static int counter;
};
int TempFile::counter = 0;

}  // namespace

TEST_CASE("mould subcommand") {
    auto r = run({"mould", "--word", "(1,0).(0,1)"});
    CHECK(r.code == 0);
    CHECK(r.out == "i\n");
    auto r2 = run({"mould", "--word", "(-1,2).(-1,2).(2,-1).(2,-1)"});
    CHECK(r2.out == "-1/54*i\n");
}

TEST_CASE("alphabet subcommand") {
    auto r = run({"alphabet", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "(-1,3)\n(0,2)\n(1,1)\n(2,0)\n(3,-1)\n");
    auto bad = run({"alphabet", "1"});
    CHECK(bad.code == 1);  // computation error
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"mould"}).code == 2);
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("check subcommand") {
    TempFile field(
        "hamiltonian: true\n"
        "component 2:\n"
        "p[0,1] = 2\n");
    auto r = run({"check", "--max-depth", "6", field.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("depth 2: 6*i") != std::string::npos);
    CHECK(r.out.find("verdict: nonisochronous at depth 2 (witness 6*i)") != std::string::npos);
}

TEST_CASE("correction subcommand") {
    TempFile field("hamiltonian: true\ncomponent 2 symbolic\n");
    auto r = run({"correction", "--depth", "2", field.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("part length 2:") != std::string::npos);
    CHECK(r.out.find("total: (2/3*i)*p[-1,2]*~p[-1,2] + (3/2*i)*p[0,1]*~p[0,1]") !=
          std::string::npos);
    auto odd = run({"correction", "--depth", "3", field.path});
    CHECK(odd.code == 1);
}

TEST_CASE("bracket subcommand") {
    TempFile field("hamiltonian: true\ncomponent 2 symbolic\n");
    auto r = run({"bracket", "--word", "(1,0).(0,1)", field.path});
    CHECK(r.code == 0);
    CHECK(r.out.find("P = ") != std::string::npos);
    CHECK(r.out.find("letter sum = (1,1)") != std::string::npos);
    auto unknown = run({"bracket", "--word", "(9,9)", field.path});
    CHECK(unknown.code == 1);
}

TEST_CASE("variety subcommand") {
    auto r = run({"variety", "--degree", "2", "--max-depth", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("coordinates: p[-1,2] p[0,1]") != std::string::npos);
    CHECK(r.out.find("generator 2:") != std::string::npos);

    auto s = run({"variety", "--degree", "2", "--max-depth", "2", "--format", "structured"});
    CHECK(s.code == 0);
    CHECK(s.out.find("\"generators\"") != std::string::npos);

    auto split = run({"variety", "--degree", "2", "--max-depth", "2", "--real-split"});
    CHECK(split.out.find("real generator 2 im:") != std::string::npos);

    auto bad = run({"variety", "--degree", "2", "--max-depth", "3"});
    CHECK(bad.code == 1);
}

TEST_CASE("variety --out writes the file") {
    std::string path = "cli_test_variety_out.txt";
    auto r = run({"variety", "--degree", "2", "--max-depth", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str().find("generator 2:") != std::string::npos);
    in.close();
    std::remove(path.c_str());
}

TEST_CASE("missing field file") {
    auto r = run({"check", "--max-depth", "4", "does_not_exist.vf"});
    CHECK(r.code == 1);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("byte-deterministic output") {
    auto a = run({"variety", "--degree", "3", "--max-depth", "4"});
    auto b = run({"variety", "--degree", "3", "--max-depth", "4"});
    CHECK(a.out == b.out);
}
