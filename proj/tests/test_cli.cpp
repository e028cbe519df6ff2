#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

namespace {

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = std::string(RINGS_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path.string();
}

/// CSV with the elapsed_ms column blanked.
std::string without_timings(const std::string& csv) {
    std::string out, line;
    std::istringstream in(csv);
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i)
            if (i == line.size() || line[i] == ',') {
                cells.push_back(line.substr(start, i - start));
                start = i + 1;
            }
        if (cells.size() > 5) cells[5].clear();
        for (const auto& c : cells) out += c + ",";
        out += "\n";
    }
    return out;
}

}  // namespace

TEST(Cli, Gcd) {
    auto r = run("gcd --ring 'Poly(Zp[17]; x,y; GREVLEX)' 'x*y+x' 'y+1'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "y + 1\n");
    EXPECT_EQ(run("gcd --ring Z -- 12 18 -8").out, "2\n");
}

TEST(Cli, Factor) {
    auto r = run("factor --ring 'Poly(Z; x)' 'x^4 - 1'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(-1+x)*(1+x)*(1+x^2)\n");
    EXPECT_EQ(run("factor --ring Z -- 360 -7").out, "2^3*3^2*5\n-7\n");
    EXPECT_EQ(run("factor --ring 'Poly(Z; x,y)' '2*x^2 - 2*y^2'").out, "2*(x - y)*(x + y)\n");
    EXPECT_EQ(run("factor --ring Z 0").code, 1);
}

TEST(Cli, Apart) {
    auto q = run("apart --ring Q 1234213/2341352");
    EXPECT_EQ(q.code, 0);
    EXPECT_EQ(q.out, "(-10)/13\n(-10)/47\n184/479\n1/8\n1\n");
    auto p = run("apart --ring 'Frac(Poly(Zp[17]; x))' '1/(3 - 3*x^2 - x^3 + x^5)'");
    EXPECT_EQ(p.out, "15/(1+x)\n1/(10+x)\n(14*x)/(15+7*x+x^2)\n4/(16+x)\n");
    EXPECT_EQ(run("apart --ring 'Frac(Poly(Q; x,y))' 'x/y'").code, 3);
}

TEST(Cli, GroebnerAndReduce) {
    auto g = run("groebner --ring 'Poly(Q; x,y,z; LEX)' 'x + y + z' 'x - y - z'");
    EXPECT_EQ(g.code, 0);
    EXPECT_EQ(g.out, "x\ny + z\n");
    EXPECT_EQ(run("groebner --ring 'Poly(Q; x,y)' --no-criteria --selection sugar 'x*y - 1' 'x^2'").out, "1\n");
    auto r = run("reduce --ring 'Poly(Q; x,y)' --ideal 'x^2 - y' --ideal 'y^2 - 1' 'x^4 + x^3' 'x*y'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x*y + 1\nx*y\n");
    EXPECT_EQ(run("groebner --ring 'Poly(Z; x,y)' x").code, 3);
    EXPECT_EQ(run("groebner --ring Q 1").code, 3);
}

TEST(Cli, Solve) {
    auto m = temp_file("rings_cli_m1.txt", "# 2x2\n2\n1 2 5\n3 4 6\n");
    EXPECT_EQ(run("solve --ring Q " + m).out, "-4\n9/2\n");
    auto s = temp_file("rings_cli_m2.txt", "2\n1 2 5\n2 4 10\n");
    EXPECT_EQ(run("solve --ring 'Zp[7]' --in " + s).out, "underdetermined rank=1\n5\n0\n");
    auto i = temp_file("rings_cli_m3.txt", "2\n1 2 5\n2 4 11\n");
    EXPECT_EQ(run("solve --ring Q " + i).out, "inconsistent\n");
    auto bad = temp_file("rings_cli_m4.txt", "2\n1 2 5\n2 4\n");
    EXPECT_EQ(run("solve --ring Q " + bad).code, 2);
    EXPECT_EQ(run("solve --ring Z " + m).code, 3);
}

TEST(Cli, InputFiles) {
    auto f = temp_file("rings_cli_in.txt", "x^2 - 1  # first\n\n# skipped\nx^2 + 2*x + 1\n");
    auto r = run("gcd --ring 'Poly(Q; x)' --in " + f);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1+x\n");
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("gcd --ring 'Poly(Z; x)' 'x y'").code, 2);
    EXPECT_EQ(run("gcd --ring 'Poly(Z; x)' 'x + w'").code, 2);
    EXPECT_EQ(run("gcd --ring 'W' 1").code, 2);
    EXPECT_EQ(run("gcd --ring Z").code, 2);
    EXPECT_EQ(run("gcd 1").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("gcd --ring 'Poly(Poly(Z; x); y)' y").code, 3);
    EXPECT_EQ(run("factor --ring 'Frac(Poly(Z; x))' x").code, 0);
    EXPECT_EQ(run("bench --family nope").code, 2);
    EXPECT_EQ(run("bench --family gcd-sparse --ring 'GF[5,2]' --trials 1").code, 3);
    EXPECT_EQ(run("groebner --ring 'Poly(Zp[1000003]; a,b,c,d,e,f)' --timeout 0.001 "
                  "'a+b+c+d+e+f' 'a*b+b*c+c*d+d*e+e*f+f*a' 'a*b*c+b*c*d+c*d*e+d*e*f+e*f*a+f*a*b' "
                  "'a*b*c*d+b*c*d*e+c*d*e*f+d*e*f*a+e*f*a*b+f*a*b*c' "
                  "'a*b*c*d*e+b*c*d*e*f+c*d*e*f*a+d*e*f*a*b+e*f*a*b*c+f*a*b*c*d' 'a*b*c*d*e*f-1'")
                  .code,
              1);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, BenchIsDeterministic) {
    std::string args = "bench --family gcd-sparse --ring 'Zp[524287]' --nvars 3 --size 10 --dist 'sharp(12)' "
                       "--trials 3 --seed 9";
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(without_timings(a.out), without_timings(b.out));
    EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "family,ring,n_vars,size,trial,elapsed_ms,result_kind,verified");
    EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 7);
    EXPECT_EQ(a.out.find(",false"), std::string::npos);
}
