#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "picd/cli.hpp"

using namespace picd;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream o, e;
    int code = run_cli(args, o, e);
    return {code, o.str(), e.str()};
}

std::string write_tmp(const std::string& name, const std::string& body)
{
    std::ofstream f(name);
    f << body;
    return name;
}

}  // namespace

TEST_CASE("parse_real")
{
    CHECK(parse_real("10/7") == doctest::Approx(10.0 / 7));
    CHECK(parse_real("inf") == std::numeric_limits<double>::infinity());
    CHECK(parse_real("0.25") == 0.25);
    CHECK_THROWS(parse_real("x"));
    CHECK_THROWS(parse_real("1/0"));
}

TEST_CASE("gamma command")
{
    auto x = write_tmp("cli_x.txt", "0.2\n0.45\n");
    auto y = write_tmp("cli_y.txt", "0,1\n");
    auto r = run({"gamma", "--x", x, "--y", y, "--r", "2", "--c", "0.5", "--witness"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gamma=1") != std::string::npos);
    CHECK(r.out.find("witness=0.45") != std::string::npos);

    auto e = write_tmp("cli_empty.txt", "");
    CHECK(run({"gamma", "--x", e, "--y", y, "--r", "2", "--c", "0.5"}).out.find("gamma=0") != std::string::npos);

    auto bad = run({"gamma", "--x", x, "--y", y, "--r", "0.5", "--c", "0.5"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("r must be >= 1") != std::string::npos);

    auto j = run({"gamma", "--x", x, "--y", y, "--r", "2", "--c", "0.5", "--json"});
    CHECK(j.out.find("\"gamma\"") != std::string::npos);
    for (const char* f : {"cli_x.txt", "cli_y.txt", "cli_empty.txt"}) std::remove(f);
}

TEST_CASE("prob and pmf commands")
{
    auto a = run({"prob", "--n", "2", "--r", "2", "--c", "0.5"});
    CHECK(a.code == 0);
    CHECK(a.out.find("0.333333") != std::string::npos);
    auto b = run({"prob", "--asymptotic", "--r", "10/7", "--c", "0.3"});
    CHECK(b.out.find("0.588235") != std::string::npos);
    auto c = run({"prob", "--n", "1", "--r", "2", "--c", "0.5"});
    CHECK(c.out.find("p_u=0 ") != std::string::npos);
    auto d = run({"pmf", "--n", "2", "--m", "1", "--r", "2", "--c", "0.5"});
    CHECK(d.out.find("1:0.666667 2:0.333333") != std::string::npos);
}

TEST_CASE("test command")
{
    std::string body;
    for (int i = 0; i < 50; ++i) body += std::to_string((i + 0.5) / 50.0) + "\n";
    auto f = write_tmp("cli_data.txt", body);
    auto a = run({"test", "--data", f, "--method", "dom-bin", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out.find("\"p_value\"") != std::string::npos);
    auto b = run({"test", "--data", f, "--method", "dom-asy", "--r", "2", "--c", "0.4"});
    CHECK(b.code == 2);
    auto c = run({"test", "--data", f, "--method", "nope"});
    CHECK(c.code == 2);
    auto k = run({"test", "--data", f, "--method", "ks"});
    CHECK(k.code == 0);
    std::remove("cli_data.txt");
}

TEST_CASE("study commands")
{
    auto p = run({"power", "--alt", "f4:eps=0.2,k=7", "--n", "50", "--method", "dom-bin", "--reps", "200",
                  "--seed", "1", "--r", "2", "--c", "0.5"});
    CHECK(p.code == 0);
    CHECK(p.out.rfind("method,r,c,n,k,alt,param,estimate,se,reps,seed", 0) == 0);
    auto s = run({"size", "--grid", "r=1.0:0.5:2.0,c=0.25;0.5", "--n", "20", "--reps", "200", "--method", "ks"});
    CHECK(s.code == 0);
    CHECK(s.out.find(",flag") != std::string::npos);
    auto low = run({"size", "--r", "2", "--c", "0.5", "--n", "20", "--reps", "10"});
    CHECK(low.code == 2);
    auto e = run({"estimate", "--n", "5", "--r", "2", "--c", "0.5", "--reps", "2000", "--seed", "3"});
    CHECK(e.code == 0);
    CHECK(run({"nosuch"}).code == 2);
}
