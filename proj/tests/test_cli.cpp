#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bistar/sat.hpp"
#include "bistar/witness.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(BISTAR_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("bistar-cli-" + std::to_string(::getpid()) + "-" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_F(CliTest, ConstructAndVerify) {
    const auto c5 = cli("construct c5c5 -o " + path("c5.w"));
    ASSERT_EQ(c5.status, 0);
    const auto w = bistar::read_witness(slurp(path("c5.w")));
    EXPECT_EQ(w.provenance, "Fig2");
    EXPECT_EQ(cli("verify " + path("c5.w")).out, "VALID\n");
    EXPECT_EQ(cli("verify " + path("c5.w") + " --red bistar:3,3 --blue star:3").status, 0);

    const auto turan = cli("construct turan --k 2 --m 2 --n 4");
    EXPECT_EQ(turan.status, 0);
    EXPECT_NE(turan.out.find("# host complete 9\n"), std::string::npos);
    EXPECT_NE(turan.out.find("# provenance Thm8\n"), std::string::npos);

    EXPECT_EQ(cli("construct star-bistar --k 3 --m 3 --n 3").status, 2);
    EXPECT_EQ(cli("construct star-bistar --k 4 --m 4 --n 5").status, 4);
    EXPECT_EQ(cli("construct star-bistar --k 4 --m 7 --n 4").status, 4);
    EXPECT_EQ(cli("construct nonsense").status, 2);
    EXPECT_EQ(cli("construct cyclic --n 8 --residues 2,3,5,6 --red bistar:4,4 --blue star:4").status, 0);
    EXPECT_EQ(cli("construct cyclic --n 5 --residues 1").status, 2);
    EXPECT_EQ(cli("construct cyclic --n 5 --residues 1 --symmetrize").status, 0);
}

TEST_F(CliTest, VerifyInvalidAndTruncated) {
    std::ofstream(path("red6.w")) << bistar::write_witness(
        {bistar::EdgeColoring::monochrome(6, 2, bistar::kRed), {bistar::Pattern::bistar(3, 3), bistar::Pattern::star(3)}});
    const auto bad = cli("verify " + path("red6.w"));
    EXPECT_EQ(bad.status, 1);
    EXPECT_EQ(first_line(bad.out), "INVALID");
    EXPECT_NE(bad.out.find("bistar:3,3"), std::string::npos);

    ASSERT_EQ(cli("construct c5c5 -o " + path("c5.w")).status, 0);
    const auto text = slurp(path("c5.w"));
    std::ofstream(path("cut.w")) << text.substr(0, text.size() - 8);
    EXPECT_EQ(cli("verify " + path("cut.w")).status, 2);
    EXPECT_EQ(cli("verify " + path("missing.w")).status, 2);
    EXPECT_EQ(cli("verify " + path("c5.w") + " --red 'bistar:3;3' --blue star:3").status, 2);
}

TEST_F(CliTest, Product) {
    ASSERT_EQ(cli("construct c5c5 --red clique:3 --blue clique:3 -o " + path("outer.w")).status, 0);
    std::ofstream(path("inner.w")) << bistar::write_witness(
        {bistar::EdgeColoring::monochrome(3, 1, bistar::ColorId{0}), {bistar::Pattern::bistar(2, 2)}, "K3"});
    const auto p = cli("construct product --outer " + path("outer.w") + " --inner " + path("inner.w") + " -o " +
                       path("p.w"));
    ASSERT_EQ(p.status, 0);
    const auto w = bistar::read_witness(slurp(path("p.w")));
    EXPECT_EQ(w.targets.size(), 3u);
    EXPECT_EQ(cli("verify " + path("p.w")).out, "VALID\n");
}

TEST_F(CliTest, ArrowsAndRamsey) {
    EXPECT_EQ(cli("arrows --n 7 --red bistar:2,2 --blue clique:3").out, "ARROWS\n");
    const auto ce = cli("arrows --n 6 --red bistar:2,2 --blue clique:3 -o " + path("ce.w"));
    EXPECT_EQ(ce.out, "COUNTEREXAMPLE\n");
    EXPECT_EQ(cli("verify " + path("ce.w")).out, "VALID\n");
    EXPECT_EQ(cli("arrows --n 3 --bipartite --red bistar:2,2 --blue bistar:2,2 --threads 2").out, "ARROWS\n");
    EXPECT_EQ(cli("arrows --n 6 --red bistar:3,3 --blue star:3 --budget 5").status, 3);

    const auto r = cli("ramsey --red bistar:3,3 --blue star:3 --max 8 -o " + path("r.w"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(first_line(r.out), "6");
    EXPECT_NE(r.out.find("arrowing N: 6"), std::string::npos);
    const auto w = bistar::read_witness(slurp(path("r.w")));
    EXPECT_FALSE(bistar::violates(w.coloring, w.targets));

    EXPECT_EQ(first_line(cli("ramsey --red bistar:2,2 --blue clique:3 --max 8").out), "7");
    EXPECT_EQ(cli("ramsey --red bistar:2,2 --blue clique:3 --max 6 --no-seed").status, 1);
    EXPECT_EQ(cli("ramsey --red bistar:2,2 --blue clique:3 --max 3").status, 2);
}

TEST_F(CliTest, CnfAndDecode) {
    ASSERT_EQ(cli("cnf --n 9 --red bistar:4,4 --blue star:4 -o " + path("k9.cnf")).status, 0);
    const auto k9 = bistar::read_dimacs(slurp(path("k9.cnf")));
    EXPECT_EQ(k9.num_vars, 36u);
    EXPECT_EQ(k9.clauses.size(), 5670u);

    ASSERT_EQ(cli("cnf --n 2 --red star:1 --blue star:1 -o " + path("k2.cnf")).status, 0);
    std::ofstream(path("unsat.txt")) << "s UNSATISFIABLE\n";
    EXPECT_EQ(first_line(cli("decode " + path("k2.cnf") + " " + path("unsat.txt")).out), "UNSAT");

    ASSERT_EQ(cli("cnf --n 2 --red star:2 --blue star:2 -o " + path("k2b.cnf")).status, 0);
    std::ofstream(path("sat.txt")) << "s SATISFIABLE\nv -1 0\n";
    const auto d = cli("decode " + path("k2b.cnf") + " " + path("sat.txt") + " -o " + path("k2.w"));
    EXPECT_EQ(d.status, 0);
    const auto w = bistar::read_witness(slurp(path("k2.w")));
    EXPECT_EQ(std::get<bistar::EdgeColoring>(w.coloring).color(0, 1), bistar::kBlue);

    std::ofstream(path("junk.txt")) << "nothing\n";
    EXPECT_EQ(cli("decode " + path("k2b.cnf") + " " + path("junk.txt")).status, 2);
}

TEST_F(CliTest, TableAndDot) {
    const auto t = cli("table thm8 --k 2..3 --m 2..3 --n 3");
    EXPECT_EQ(t.status, 0);
    EXPECT_NE(t.out.find("2  2  3  7"), std::string::npos) << t.out;
    const auto k = cli("table thm15 --colors 3 --m 3");
    EXPECT_NE(k.out.find(">6     11"), std::string::npos) << k.out;
    EXPECT_EQ(cli("table thm99").status, 2);
    EXPECT_EQ(cli("table thm8 --k 3..2").status, 2);

    ASSERT_EQ(cli("construct c5c5 -o " + path("c5.w")).status, 0);
    const auto dot = cli("dot " + path("c5.w"));
    EXPECT_EQ(dot.status, 0);
    EXPECT_EQ(dot.out.rfind("graph witness {", 0), 0u);
    std::ofstream(path("red6.w")) << bistar::write_witness(
        {bistar::EdgeColoring::monochrome(6, 2, bistar::kRed), {bistar::Pattern::bistar(3, 3), bistar::Pattern::star(3)}});
    EXPECT_NE(cli("dot --overlay " + path("red6.w")).out.find("spine"), std::string::npos);
}

TEST_F(CliTest, Usage) {
    EXPECT_EQ(cli("").status, 2);
    EXPECT_EQ(cli("--help").status, 0);
    EXPECT_EQ(cli("arrows --red star:2").status, 2);
    EXPECT_EQ(cli("arrows --n 3 --red star:2").status, 2);
    EXPECT_EQ(cli("arrows --n 3 --red star:2 --blue star:2 --sat --solver /nonexistent/solver").status, 2);
}
