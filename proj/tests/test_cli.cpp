#include "gammalgo/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

using namespace gammalgo;

namespace {

struct CmdResult
{
    int code;
    std::string out;
};

CmdResult run_cli(const std::string &args)
{
    const char *bin = std::getenv("GAMMALGO_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string first_line(const std::string &text)
{
    return text.substr(0, text.find('\n'));
}

} // namespace

TEST_CASE("gamma command text output")
{
    CmdResult r = run_cli("gamma --a 2 --b 2 --digits 12");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "interior 0.914803044196");
    CHECK(r.out.find("witness:") != std::string::npos);

    CmdResult one = run_cli("gamma --a 24 --b 6");
    CHECK(one.code == 0);
    CHECK(first_line(one.out) == "one (exact, abZ-classification)");

    CmdResult bad = run_cli("gamma --a 1 --b 2");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("a >= b") != std::string::npos);
}

TEST_CASE("gamma json output round-trips byte for byte")
{
    CmdResult r = run_cli("gamma --a 2 --b 2 --digits 12 --json");
    REQUIRE(r.code == 0);
    std::string line = first_line(r.out);
    Json doc = Json::parse(line);
    CHECK(doc.dump() == line);
    CHECK(doc["a"] == 2);
    CHECK(doc["b"] == 2);
    CHECK(doc["classification"] == "interior");
    CHECK(doc["gamma_lo"] == "0.914803044196");
    CHECK(doc["gamma_hi"] == "0.914803044196");
    CHECK(doc["digits"] == 12);
    CHECK(doc["witness_prefix"].get<std::string>().size() == doc["depth"].get<std::size_t>());
    // Canonical key order.
    std::vector<std::string> keys;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        keys.push_back(it.key());
    }
    CHECK(keys == std::vector<std::string>{"a", "b", "classification", "method", "gamma_lo",
                                           "gamma_hi", "digits", "depth", "witness_prefix"});
}

TEST_CASE("gamma depth cap and environment override")
{
    CmdResult r = run_cli("gamma --a 2 --b 2 --max-depth 4");
    CHECK(r.code == 3);
    CHECK(first_line(r.out).find("undecided") == 0);

    setenv("GAMMALGO_MAX_DEPTH", "4", 1);
    CmdResult env = run_cli("gamma --a 2 --b 2");
    unsetenv("GAMMALGO_MAX_DEPTH");
    CHECK(env.code == 3);
    CHECK(first_line(env.out).find("undecided") == 0);
}

TEST_CASE("gamma positive-norm family")
{
    CmdResult r = run_cli("gamma --a 5 --b 2 --minus-b");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "zero (exact, positive-norm)");
    CHECK(r.out.find("Akiyama") != std::string::npos);

    CmdResult bad = run_cli("gamma --a 3 --b 2 --minus-b");
    CHECK(bad.code == 2);
}

TEST_CASE("expand command")
{
    CmdResult r = run_cli("expand --a 4 --b 4 --x0 4 --n 4");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "0013");

    CmdResult r2 = run_cli("expand --a 3 --b 3 --x0 21 --n 12");
    CHECK(first_line(r2.out) == "001200020201");

    CmdResult r3 = run_cli("expand --a 2 --b 2 --x0 0 --n 5");
    CHECK(first_line(r3.out) == "00000");

    // --minus-beta expands x0 - beta, i.e. the state (x0, -1).
    CmdResult r4 = run_cli("expand --a 6 --b 4 --x0 0 --n 6 --minus-beta");
    DigitWord expected = expand_prefix(make_base(6, 4), ZBetaElem(0, -1), 6);
    CHECK(first_line(r4.out) == expected.str());

    CmdResult bad = run_cli("expand --a 1 --b 2 --x0 1 --n 3");
    CHECK(bad.code == 2);
}

TEST_CASE("check command")
{
    CmdResult r = run_cli("check --a 1 --b 1 --num 1 --den 2");
    CHECK(r.code == 0);
    CHECK(first_line(r.out).find("purely periodic") == 0);

    CmdResult r2 = run_cli("check --a 2 --b 2 --num 1 --den 2");
    CHECK(r2.code == 0);
    CHECK(first_line(r2.out).find("not purely periodic") == 0);
    CHECK(r2.out.find("q not coprime to b") != std::string::npos);

    CmdResult r3 = run_cli("check --a 2 --b 2 --num 1 --den 3");
    CHECK(r3.code == 0);
    CHECK(first_line(r3.out).find("purely periodic") == 0);

    CmdResult bad = run_cli("check --a 2 --b 2 --num 3 --den 2");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("[0, 1)") != std::string::npos);
}

TEST_CASE("scan command")
{
    CmdResult r = run_cli("scan --a 2 --b 2 --qmax 20 --lo 0 --hi 0.9");
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    CmdResult j = run_cli("scan --a 2 --b 2 --qmax 20 --lo 0 --hi 0.9 --json");
    Json doc = Json::parse(first_line(j.out));
    CHECK(doc["count"] == 0);
    CHECK(doc.dump() == first_line(j.out));

    CmdResult bad = run_cli("scan --a 2 --b 2 --qmax 20 --lo 0.9 --hi 0.2");
    CHECK(bad.code == 2);
}

TEST_CASE("table command")
{
    CmdResult r = run_cli("table --bmax 3 --ratio-max 2");
    REQUIRE(r.code == 0);
    // rows: b=1 -> 1 1; b=2 -> * 1; b=3 -> 0 *.
    CHECK(r.out.find("1   1  1") != std::string::npos);
    CHECK(r.out.find("2   *  1") != std::string::npos);
    CHECK(r.out.find("3   0  *") != std::string::npos);

    CmdResult j = run_cli("table --bmax 3 --ratio-max 2 --json");
    Json doc = Json::parse(first_line(j.out));
    CHECK(doc.dump() == first_line(j.out));
    CHECK(doc["rows"][1]["cells"] == Json::array({"*", "1"}));
    CHECK(doc["rows"][2]["cells"] == Json::array({"0", "*"}));
}

TEST_CASE("table reference diff")
{
    CmdResult r = run_cli("table --bmax 12 --ratio-max 15 --reference");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "reference: match");
}
