#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "maxcurve/io.hpp"
#include "maxcurve_cli/cli.hpp"

namespace fs = std::filesystem;
using namespace maxcurve;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle)
{
    std::size_t c = 0;
    for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
    return c;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() /
              ("maxcurve_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }

    fs::path dir;
};

}  // namespace

TEST_F(Cli, ConstructPrincipal)
{
    auto r = run({"construct", "principal", "--degree", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(io::parse_nodeset(r.out).nodes.size(), 10u);
}

TEST_F(Cli, ConstructChungYaoWithCompanions)
{
    auto r = run({"construct", "chung-yao", "--degree", "4", "--seed", "7", "--out", path("cy.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto f = io::parse_nodeset(io::read_file(path("cy.json")));
    EXPECT_EQ(f.nodes.size(), 15u);
    EXPECT_EQ(f.degree, 4);
    ASSERT_TRUE(fs::exists(path("cy.cert.json")));
    ASSERT_TRUE(fs::exists(path("cy.curves.json")));
    auto cert = io::parse_certificate(io::read_file(path("cy.cert.json")), 15);
    EXPECT_EQ(cert.node_lines.size(), 15u);
    EXPECT_EQ(io::parse_curves(io::read_file(path("cy.curves.json"))).size(), 6u);
    auto gc = run({"check", "gc", path("cy.json"), "--cert", path("cy.cert.json")});
    EXPECT_EQ(gc.code, 0);
    EXPECT_NE(gc.out.find("certified"), std::string::npos);
}

TEST_F(Cli, ConstructTwoCurve)
{
    auto r = run({"construct", "two-curve", "--m", "2", "--k", "2", "--delta", "0", "--out", path("tc.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(io::parse_nodeset(io::read_file(path("tc.json"))).nodes.size(), 6u);
    auto m = run({"check", "maximal-curve", path("tc.json"), "--curves", path("tc.curves.json")});
    EXPECT_EQ(m.code, 0) << m.out;
    EXPECT_EQ(count(m.out, "not maximal"), 0u);
}

TEST_F(Cli, CheckCommands)
{
    run({"construct", "principal", "--degree", "3", "--out", path("p.json")});
    EXPECT_EQ(run({"check", "correct", path("p.json")}).code, 0);
    EXPECT_EQ(run({"check", "independent", path("p.json")}).code, 0);
    EXPECT_EQ(run({"check", "correct", path("p.json"), "--degree", "2"}).code, 1);
    auto ind = run({"check", "independent", path("p.json"), "--degree", "2", "--format", "json"});
    EXPECT_EQ(ind.code, 1);
    EXPECT_NE(ind.out.find("\"witnesses\""), std::string::npos);

    run({"construct", "chung-yao", "--degree", "3", "--out", path("c.json")});
    auto ml = run({"check", "maximal-lines", path("c.json")});
    EXPECT_EQ(ml.code, 0);
    EXPECT_NE(ml.out.find("maximal lines: 5"), std::string::npos);
    auto js = run({"check", "maximal-lines", path("c.json"), "--format", "json"});
    EXPECT_NE(js.out.find("\"count\": 5"), std::string::npos);
    EXPECT_EQ(run({"check", "gc", path("c.json")}).code, 0);
}

TEST_F(Cli, DuplicateAndMalformedInput)
{
    io::write_file(path("dup.json"), R"({"degree":1,"nodes":[["0","0"],["1","0"],["0","0"]]})");
    auto d = run({"check", "correct", path("dup.json")});
    EXPECT_EQ(d.code, 2);
    EXPECT_NE(d.err.find("duplicate node"), std::string::npos);

    io::write_file(path("bad.json"), R"({"degree":1,"nodes":[["0","0"],)");
    auto b = run({"check", "correct", path("bad.json")});
    EXPECT_EQ(b.code, 2);
    EXPECT_NE(b.err.find("byte"), std::string::npos);

    EXPECT_EQ(run({"check", "correct", path("missing.json")}).code, 2);
}

TEST_F(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"construct", "principal"}).code, 2);
    EXPECT_EQ(run({"construct", "hexagon", "--degree", "2"}).code, 2);
    EXPECT_EQ(run({"verify", "everything"}).code, 2);
    EXPECT_EQ(run({"check", "correct"}).code, 2);
    EXPECT_EQ(run({"construct", "two-curve", "--delta", "3"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    ::setenv("MAXCURVE_BUDGET", "lots", 1);
    EXPECT_EQ(run({"construct", "chung-yao", "--degree", "2"}).code, 2);
    ::unsetenv("MAXCURVE_BUDGET");
}

TEST_F(Cli, BudgetExhaustionIsMathFailure)
{
    ::setenv("MAXCURVE_BUDGET", "1", 1);
    auto r = run({"construct", "two-curve", "--m", "3", "--k", "3", "--delta", "1"});
    ::unsetenv("MAXCURVE_BUDGET");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("construction failed"), std::string::npos);
}

TEST_F(Cli, RoundTripAndDeterminism)
{
    for (int i = 0; i < 2; ++i)
        ASSERT_EQ(run({"construct", "chung-yao", "--degree", "5", "--seed", "3", "--out",
                       path("r" + std::to_string(i) + ".json")})
                      .code,
                  0);
    const auto a = io::read_file(path("r0.json")), b = io::read_file(path("r1.json"));
    EXPECT_EQ(a, b);
    EXPECT_EQ(io::read_file(path("r0.cert.json")), io::read_file(path("r1.cert.json")));
    // Negative and non-integer coordinates survive the trip.
    auto nodes = io::parse_nodeset(a);
    bool negative = false, fractional = false;
    for (const auto& p : nodes.nodes) {
        negative = negative || sgn(p.x) < 0 || sgn(p.y) < 0;
        fractional = fractional || p.x.get_den() != 1 || p.y.get_den() != 1;
    }
    EXPECT_TRUE(negative);
    EXPECT_TRUE(fractional);
    EXPECT_EQ(io::nodeset_to_json(nodes.nodes, nodes.degree), a);

    auto v1 = run({"verify", "gc", "--max-degree", "3", "--seeds", "2", "--format", "json"});
    auto v2 = run({"verify", "gc", "--max-degree", "3", "--seeds", "2", "--format", "json", "--jobs", "1"});
    EXPECT_EQ(v1.code, 0);
    EXPECT_EQ(v1.out, v2.out);
}

TEST_F(Cli, Fundamental)
{
    run({"construct", "principal", "--degree", "2", "--out", path("p.json")});
    auto r = run({"fundamental", path("p.json"), "--node", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("p*_0"), std::string::npos);
    auto j = run({"fundamental", path("p.json"), "--node", "3", "--format", "json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_NE(j.out.find("\"unique\": true"), std::string::npos);
    EXPECT_EQ(run({"fundamental", path("p.json"), "--node", "6"}).code, 2);
    io::write_file(path("line.json"), R"({"degree":1,"nodes":[["0","0"],["1","0"],["2","0"]]})");
    EXPECT_EQ(run({"fundamental", path("line.json"), "--node", "1"}).code, 1);
}

TEST_F(Cli, Verify)
{
    auto r = run({"verify", "identities"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
    auto t = run({"verify", "triple", "--degree", "3", "--format", "json"});
    EXPECT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("\"sigma\""), std::string::npos);
    EXPECT_NE(t.err.find("triple-intersection"), std::string::npos);
}

TEST_F(Cli, Render)
{
    run({"construct", "principal", "--degree", "2", "--out", path("p.json")});
    auto p = run({"render", path("p.json")});
    EXPECT_EQ(p.code, 0);
    EXPECT_EQ(count(p.out, "<circle"), 6u);
    EXPECT_NE(p.out.find("width=\"800\""), std::string::npos);

    run({"construct", "chung-yao", "--degree", "3", "--out", path("c.json")});
    auto c = run({"render", path("c.json"), "--curves", path("c.curves.json")});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(count(c.out, "<circle"), 10u);
    EXPECT_EQ(count(c.out, "<line"), 5u);
    EXPECT_EQ(count(c.out, "line maximal"), 0u);
    auto h = run({"render", path("c.json"), "--curves", path("c.curves.json"), "--highlight-maximal"});
    EXPECT_EQ(count(h.out, "class=\"line maximal\""), 5u);
    EXPECT_EQ(h.out, run({"render", path("c.json"), "--curves", path("c.curves.json"), "--highlight-maximal"}).out);

    io::write_file(path("conic.json"),
                   R"({"factors":[{"degree_bound":2,"coeffs":["0","0","1","-1","0","0"]}],"squarefree":true})");
    auto a = run({"render", path("p.json"), "--curves", path("conic.json"), "--out", path("a.svg")});
    EXPECT_EQ(a.code, 2);
    EXPECT_NE(a.err.find("sampled polylines"), std::string::npos);
    const auto svg = io::read_file(path("a.svg"));
    EXPECT_NE(svg.find("approximate"), std::string::npos);
    EXPECT_NE(svg.find("<path"), std::string::npos);
}

#ifdef MAXCURVE_CLI_PATH
TEST_F(Cli, ProcessExitCodes)
{
    const std::string bin = MAXCURVE_CLI_PATH;
    auto status = [](const std::string& cmd) {
        int s = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    EXPECT_EQ(status(bin + " construct principal --degree 2 --out " + path("p.json")), 0);
    EXPECT_EQ(status(bin + " check correct " + path("p.json")), 0);
    EXPECT_EQ(status(bin + " check correct " + path("p.json") + " --degree 1"), 1);
    EXPECT_EQ(status(bin + " check correct --bogus"), 2);
}
#endif
