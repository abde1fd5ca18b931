#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

namespace {

struct Invocation {
    int code = 0;
    std::string out, err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"reesgb"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = reesgb::cli::run(static_cast<int>(argv.size()), argv.data(),
                                out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_test_" + name + ".graph";
    std::ofstream f(path);
    f << content;
    return path;
}

}  // namespace

TEST_CASE("cli info") {
    std::string path =
        write_temp("example", reesgb::testing::kExampleGraphText);
    Invocation r = invoke({"info", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("match=3") != std::string::npos);
    CHECK(r.out.find("dim=7") != std::string::npos);

    Invocation j = invoke({"info", path, "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"schema\": \"1\"") != std::string::npos);

    Invocation ugb = invoke({"ugb", path});
    CHECK(ugb.code == 0);
    CHECK(ugb.out.find("7 binomials (0 cycles, 2 paths, 5 pairs)") !=
          std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli exit codes") {
    CHECK(invoke({"info", "does_not_exist.graph"}).code == 2);

    std::string odd = write_temp("odd", "a b\nb c\nc a\n");
    Invocation r = invoke({"info", odd});
    CHECK(r.code == 2);
    CHECK(r.err.find("odd cycle") != std::string::npos);
    std::remove(odd.c_str());

    std::string k23 = write_temp("k23", reesgb::complete_bipartite(2, 3).to_edge_list());
    CHECK(invoke({"betti", k23, "--power", "40"}).code == 3);
    CHECK(invoke({"betti", k23}).code == 2);  // needs --rees or --power
    std::remove(k23.c_str());

    CHECK(invoke({"nonsense"}).code == 2);
}

TEST_CASE("cli verify and mutation harness") {
    std::string path =
        write_temp("verify", reesgb::testing::kExampleGraphText);
    Invocation pass = invoke({"verify", path, "--samples", "10"});
    CHECK(pass.code == 0);
    CHECK(pass.out.find("verify: pass") != std::string::npos);

    // dropping the low-degree path generator breaks reduction to zero
    Invocation fail =
        invoke({"verify", path, "--samples", "5", "--drop-ugb-index", "0"});
    CHECK(fail.code == 1);
    std::remove(path.c_str());
}

TEST_CASE("cli json output is deterministic") {
    std::string path = write_temp("det", reesgb::testing::kExampleGraphText);
    std::vector<std::string> args{"verify", path,        "--samples", "8",
                                  "--seed", "3",         "--format",  "json"};
    Invocation a = invoke(args);
    Invocation b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    Invocation c = invoke({"report", path, "--max-s", "2", "--format", "json"});
    Invocation d = invoke({"report", path, "--max-s", "2", "--format", "json"});
    CHECK(c.out == d.out);
    std::remove(path.c_str());
}

TEST_CASE("cli gb and betti") {
    std::string path = write_temp("gb", reesgb::testing::kExampleGraphText);
    Invocation gb = invoke({"gb", path, "--order", "match:T1,T3"});
    CHECK(gb.code == 0);
    CHECK(gb.out.find("match:T1,T3") != std::string::npos);
    CHECK(invoke({"gb", path}).code == 2);  // --order required

    Invocation betti = invoke({"betti", path, "--rees"});
    CHECK(betti.code == 0);
    CHECK(betti.out.find("pass reg(Rees) == match") != std::string::npos);

    Invocation power = invoke({"betti", path, "--power", "1"});
    CHECK(power.code == 0);
    CHECK(power.out.find("reg(I^1)=") != std::string::npos);

    Invocation narrow = invoke({"betti", path, "--rees", "--window", "1,1"});
    CHECK(narrow.code == 0);
    CHECK(narrow.out.find("window does not certify completeness") !=
          std::string::npos);
    CHECK(invoke({"betti", path, "--rees", "--window", "oops"}).code == 2);

    Invocation modp =
        invoke({"betti", path, "--rees", "--mod-p", "2147483629"});
    CHECK(modp.code == 0);
    CHECK(modp.out.find("pass reg(Rees) == match") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli report flags the single-edge discrepancy without failing") {
    std::string path = write_temp("k11", "x1 y1\n");
    Invocation r = invoke({"report", path, "--max-s", "4", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("known-discrepancy") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("installed binary runs end to end") {
    const char* bin = std::getenv("REESGB_BIN");
    if (!bin) return;  // only meaningful under ctest
    std::string path = write_temp("bin", reesgb::testing::kExampleGraphText);
    std::string cmd = std::string(bin) + " verify " + path + " >/dev/null 2>&1";
    CHECK(std::system(cmd.c_str()) == 0);
    std::remove(path.c_str());
}
