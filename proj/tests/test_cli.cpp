#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef WEBFOAM_CLI
#error "WEBFOAM_CLI must name the command-line binary"
#endif

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + std::string(WEBFOAM_CLI) + " " + args + " 2>&1";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST(Cli, LinkUnknot) {
    const Result r = run("link --pd U --n 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "q^-2 + 1 + q^2\n");
}

TEST(Cli, LinkTrefoilMatchesEuler) {
    const std::string pd = "'X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]'";
    const Result a = run("link --n 2 --pd " + pd), b = run("link --euler --n 2 --pd " + pd);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run("link --n 2 " + pd).out, a.out);  // positional form
}

TEST(Cli, LinkRejectsInvalidPd) {
    const Result r = run("link --n 3 --pd 'X[1,1,2,2]'");
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.out.empty());
}

TEST(Cli, LinkFromFile) {
    const std::string path = testing::TempDir() + "/hopf.pd";
    std::ofstream(path) << "X[4,1,3,2],X[2,3,1,4]\n";
    const Result r = run("link --n 2 --file " + path);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "q^-6 + q^-4 + q^-2 + 1\n");
}

TEST(Cli, EnvironmentAndFlags) {
    EXPECT_EQ(run("link", "WEBFOAM_PD=U WEBFOAM_N=3").out, "q^-2 + 1 + q^2\n");
    EXPECT_EQ(run("link --n 2", "WEBFOAM_PD=U WEBFOAM_N=3").out, "q^-1 + q\n");  // flag wins
}

TEST(Cli, Web) {
    const Result r = run("web --builtin theta --n 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "q^-3 + 2q^-1 + 2q + q^3\n");

    const std::string path = testing::TempDir() + "/circle.json";
    std::ofstream(path) << R"({"circles": [{"label": 1}], "vertices": [], "edges": []})";
    EXPECT_EQ(run("web --n 4 " + path).out, "q^-3 + q^-1 + q + q^3\n");

    const std::string bad = testing::TempDir() + "/bad.json";
    std::ofstream(bad) << R"({"circles": [{"label": 5}], "vertices": [], "edges": []})";
    EXPECT_EQ(run("web --n 4 " + bad).code, 2);
}

TEST(Cli, Theta) {
    EXPECT_EQ(run("theta 123 --n 4 0 0 0 2 2 1").out, "-1\n");
    EXPECT_EQ(run("theta 123 --n 4 --direct 0 0 0 2 2 1").out, "-1\n");
    EXPECT_EQ(run("theta 112 --n 3 1 2 0 0").out, "-1\n");
    const Result table = run("theta 123 --n 4 --machine");
    EXPECT_EQ(table.code, 0);
    EXPECT_EQ(table.out.find("0 0 0 2 2 1 -1\n") != std::string::npos, true);
    EXPECT_NE(run("theta 123 --n 3 0 0 0 0 0 0").code, 0);
}

TEST(Cli, Ring) {
    const Result r = run("ring 2 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(count_lines(r.out), 3);
    EXPECT_NE(r.out.find("dual -pi(1,1)"), std::string::npos);
}

TEST(Cli, Verify) {
    const Result ok = run("verify --n 3 --suite links");
    EXPECT_EQ(ok.code, 0);
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
    const Result one = run("verify --n 3 --suite S1");
    EXPECT_EQ(one.code, 0);
    // the DR1 pairing matrix is not the identity, so the relation suite fails
    const Result dr1 = run("verify --n 3 --suite DR1");
    EXPECT_EQ(dr1.code, 1);
    EXPECT_NE(dr1.out.find("FAIL"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("link --n 1 --pd U").code, 2);
    EXPECT_EQ(run("verify --n 3 --suite nope").code, 2);
}

TEST(Cli, Deterministic) {
    const std::string args = "link --n 3 --jobs 4 --pd 'X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]'";
    EXPECT_EQ(run(args).out, run(args).out);
}
