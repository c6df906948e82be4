#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "bistar/sat.hpp"
#include "oracle.hpp"

using namespace bistar;

namespace {

std::vector<Pattern> pair_of(Pattern a, Pattern b) { return {std::move(a), std::move(b)}; }

std::map<std::size_t, std::size_t> width_histogram(const CnfFormula& f) {
    std::map<std::size_t, std::size_t> h;
    for (const auto& c : f.clauses) ++h[c.size()];
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<bool> from_mask(std::size_t vars, std::uint64_t mask) {
    std::vector<bool> a(vars + 1, false);
    for (std::size_t v = 1; v <= vars; ++v) a[v] = mask >> (v - 1) & 1;
    return a;
}

std::uint64_t choose(std::uint64_t n, std::uint64_t r) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

}  // namespace

TEST(EncodeArrow, StarBistarK9Counts) {
    const auto f = encode_arrow(ArrowInstance::complete(9, pair_of(Pattern::bistar(4, 4), Pattern::star(4))));
    EXPECT_EQ(f.num_vars, 36u);
    EXPECT_EQ(f.clauses.size(), 630u + 5040u);
    const auto h = width_histogram(f);
    EXPECT_EQ(h.at(4), 9 * choose(8, 4));
    EXPECT_EQ(h.at(7), 36 * choose(7, 3) * choose(4, 3));
    EXPECT_EQ(h.size(), 2u);
}

TEST(EncodeArrow, TriangleTriangleK5) {
    const auto f = encode_arrow(ArrowInstance::complete(5, pair_of(Pattern::clique(3), Pattern::clique(3))));
    EXPECT_EQ(f.num_vars, 10u);
    EXPECT_EQ(f.clauses.size(), 20u);
    EXPECT_EQ(width_histogram(f), (std::map<std::size_t, std::size_t>{{3, 20}}));
}

TEST(EncodeArrow, SingleEdgeIsUnsat) {
    const auto f = encode_arrow(ArrowInstance::complete(2, pair_of(Pattern::star(1), Pattern::star(1))));
    EXPECT_EQ(f.num_vars, 1u);
    EXPECT_EQ(f.clauses, (std::vector<std::vector<int>>{{-1}, {1}}));
    EXPECT_FALSE(satisfies(f, {false, true}));
    EXPECT_FALSE(satisfies(f, {false, false}));
}

TEST(EncodeArrow, ClauseWidthsMatchEdgeCounts) {
    for (const auto& p : oracle::small_patterns(6)) {
        const auto inst = ArrowInstance::complete(6, pair_of(p, Pattern::clique(2)));
        const auto f = encode_arrow(inst);
        for (const auto& c : f.clauses)
            if (c.size() != 1) {
                ASSERT_EQ(c.size(), p.edge_count()) << p.to_string();
            }
    }
    const auto f3 = encode_arrow(ArrowInstance::complete(4, {Pattern::star(2), Pattern::clique(3), Pattern::bistar(2, 1)}));
    EXPECT_EQ(f3.num_vars, 18u);
    const auto h = width_histogram(f3);
    EXPECT_EQ(h.at(3), 6u + 4u);  // one ALO clause per edge plus the clique placements
    EXPECT_GE(h.at(2), 18u);      // three pairwise AMO clauses per edge, plus S2 / B21 placements
}

TEST(EncodeArrow, BipartiteOneHot) {
    const auto f = encode_arrow(ArrowInstance::bipartite(2, {Pattern::star(2), Pattern::star(2), Pattern::star(2)}));
    EXPECT_EQ(f.num_vars, 12u);
    // 4 ALO + 12 AMO + per color: 4 vertices with a 2-subset of their 2 neighbors.
    EXPECT_EQ(f.clauses.size(), 4u + 12u + 3u * 4u);
    EXPECT_EQ(f.var_map[0], (VarInfo{0, 2, ColorId{0}}));
    EXPECT_EQ(f.var_map[11], (VarInfo{1, 3, ColorId{2}}));
}

TEST(WriteDimacs, Trivial) {
    EXPECT_EQ(write_dimacs(CnfFormula{}), "p cnf 0 0\n");
    CnfFormula one;
    one.num_vars = 1;
    one.clauses = {{1}};
    EXPECT_EQ(write_dimacs(one), "p cnf 1 1\n1 0\n");
}

TEST(WriteDimacs, Golden) {
    const auto f = encode_arrow(ArrowInstance::complete(5, pair_of(Pattern::clique(3), Pattern::clique(3))));
    EXPECT_EQ(write_dimacs(f), read_file(std::string(BISTAR_GOLDEN_DIR) + "/r33_n5.cnf"));
}

TEST(ReadDimacs, RoundTrip) {
    for (const auto& inst : {ArrowInstance::complete(5, pair_of(Pattern::clique(3), Pattern::clique(3))),
                             ArrowInstance::bipartite(2, {Pattern::star(2), Pattern::star(2), Pattern::star(2)}),
                             ArrowInstance::complete(6, pair_of(Pattern::bistar(3, 2), Pattern::star(3)))}) {
        const auto f = encode_arrow(inst);
        const auto g = read_dimacs(write_dimacs(f));
        EXPECT_EQ(g.num_vars, f.num_vars);
        EXPECT_EQ(g.clauses, f.clauses);
        EXPECT_EQ(g.var_map, f.var_map);
        ASSERT_TRUE(g.instance);
        EXPECT_EQ(g.instance->host, inst.host);
        EXPECT_EQ(g.instance->order, inst.order);
        EXPECT_EQ(g.instance->targets, inst.targets);
    }
}

TEST(ReadDimacs, Errors) {
    EXPECT_THROW(read_dimacs("1 0\n"), ParseError);
    EXPECT_THROW(read_dimacs("p cnf 1 1\n2 0\n"), ParseError);
    EXPECT_THROW(read_dimacs("p cnf 1 2\n1 0\n"), ParseError);
    EXPECT_THROW(read_dimacs("p cnf 1 1\n1\n"), ParseError);
    EXPECT_THROW(read_dimacs("p dnf 1 1\n1 0\n"), ParseError);
    EXPECT_THROW(read_dimacs("c host complete 2\np cnf 1 0\n"), ParseError);
    EXPECT_EQ(read_dimacs("c hello\np cnf 2 1\n1 -2 0\n").clauses, (std::vector<std::vector<int>>{{1, -2}}));
}

TEST(ParseSolverOutput, Examples) {
    CnfFormula two;
    two.num_vars = 2;
    EXPECT_FALSE(parse_solver_output("s UNSATISFIABLE\n", two).satisfiable);
    const auto r = parse_solver_output("s SATISFIABLE\nv 1 -2 0", two);
    ASSERT_TRUE(r.satisfiable);
    EXPECT_EQ(r.assignment, (std::vector<bool>{false, true, false}));
    const auto split = parse_solver_output("c comment\ns SATISFIABLE\nv -1\nv 2 0\n", two);
    EXPECT_EQ(split.assignment, (std::vector<bool>{false, false, true}));
}

TEST(ParseSolverOutput, Errors) {
    CnfFormula two;
    two.num_vars = 2;
    EXPECT_THROW(parse_solver_output("", two), ParseError);
    EXPECT_THROW(parse_solver_output("v 1 2 0\n", two), ParseError);
    EXPECT_THROW(parse_solver_output("s UNKNOWN\n", two), ParseError);
    EXPECT_THROW(parse_solver_output("s SATISFIABLE\nv 1 0\n", two), ParseError);
    EXPECT_THROW(parse_solver_output("s SATISFIABLE\nv 1 3 0\n", two), ParseError);
    EXPECT_THROW(parse_solver_output("s SATISFIABLE\nv 1 x 0\n", two), ParseError);
}

TEST(DecodeModel, SingleEdgePolarity) {
    const auto inst = ArrowInstance::complete(2, pair_of(Pattern::star(2), Pattern::star(2)));
    const auto f = encode_arrow(inst);
    const auto red = std::get<EdgeColoring>(decode_model({false, true}, f));
    EXPECT_EQ(red.color(0, 1), kRed);
    const auto blue = std::get<EdgeColoring>(decode_model({false, false}, f, inst));
    EXPECT_EQ(blue.color(0, 1), kBlue);
    EXPECT_THROW(decode_model({false}, f), DecodeError);
    EXPECT_THROW(decode_model({false, true}, CnfFormula{1, {}, {}, std::nullopt}), DecodeError);
}

TEST(DecodeModel, ThreeColorBipartite) {
    const auto inst = ArrowInstance::bipartite(2, {Pattern::star(2), Pattern::star(2), Pattern::star(2)});
    const auto f = encode_arrow(inst);
    // Edges v0w0, v0w1, v1w0, v1w1 get colors 2, 0, 1, 2; variable = 3 * edge + color + 1.
    std::vector<bool> a(13, false);
    for (int v : {3, 4, 8, 12}) a[v] = true;
    const auto g = std::get<BipartiteColoring>(decode_model(a, f));
    EXPECT_EQ(g.color_lr(0, 0), ColorId{2});
    EXPECT_EQ(g.color_lr(0, 1), ColorId{0});
    EXPECT_EQ(g.color_lr(1, 0), ColorId{1});
    EXPECT_EQ(g.color_lr(1, 1), ColorId{2});
    EXPECT_TRUE(satisfies(f, a));

    auto two_hot = a;
    two_hot[1] = true;
    EXPECT_THROW(decode_model(two_hot, f), DecodeError);
    auto none = a;
    none[3] = false;
    EXPECT_THROW(decode_model(none, f), DecodeError);
}

// Satisfying assignments are exactly the encodings of counterexample colorings.
TEST(SatProperties, FaithfulOnSmallHosts) {
    const auto patterns = oracle::small_patterns(5);
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& a : patterns)
            for (const auto& b : patterns) {
                const auto inst = ArrowInstance::complete(n, pair_of(a, b));
                const auto f = encode_arrow(inst);
                ASSERT_LE(f.num_vars, 10u);
                std::size_t models = 0;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
                    const auto assignment = from_mask(f.num_vars, mask);
                    const auto g = std::get<EdgeColoring>(decode_model(assignment, f));
                    const bool sat = satisfies(f, assignment);
                    ASSERT_EQ(sat, oracle::avoids_all(g, inst.targets))
                        << "K" << n << " " << a.to_string() << " " << b.to_string() << " mask " << mask;
                    models += sat;
                    // decode then re-encode recovers the assignment
                    for (std::size_t i = 0; i < f.var_map.size(); ++i)
                        ASSERT_EQ(assignment[i + 1], g.color(f.var_map[i].u, f.var_map[i].v) == kRed);
                }
                ASSERT_EQ(models > 0, !oracle::brute_force_arrows(EdgeColoring(n, 2), inst.targets));
            }
}

TEST(SatProperties, FaithfulThreeColors) {
    const auto inst = ArrowInstance::complete(3, {Pattern::star(2), Pattern::star(2), Pattern::clique(2)});
    const auto f = encode_arrow(inst);
    ASSERT_EQ(f.num_vars, 9u);
    std::size_t models = 0;
    for (std::uint64_t mask = 0; mask < 512; ++mask) {
        const auto a = from_mask(9, mask);
        bool one_hot = true;
        for (std::size_t e = 0; e < 3; ++e) one_hot = one_hot && a[3 * e + 1] + a[3 * e + 2] + a[3 * e + 3] == 1;
        if (!one_hot) {
            ASSERT_FALSE(satisfies(f, a));
            continue;
        }
        const auto g = std::get<EdgeColoring>(decode_model(a, f));
        ASSERT_EQ(satisfies(f, a), oracle::avoids_all(g, inst.targets));
        models += satisfies(f, a);
    }
    // Color 2 is unusable and colors 0, 1 must be matchings, which cannot cover a triangle.
    EXPECT_EQ(models, 0u);
}

TEST(SolverRoundTrip, TriangleTriangle) {
    const auto solver = solver_from_env();
    if (!solver) GTEST_SKIP() << "BISTAR_SAT_SOLVER not set";
    const auto inst5 = ArrowInstance::complete(5, pair_of(Pattern::clique(3), Pattern::clique(3)));
    const auto v5 = sat_decide<EdgeColoring>(inst5, *solver, 60);
    ASSERT_EQ(v5.outcome, Outcome::counterexample);
    EXPECT_TRUE(oracle::avoids_all(*v5.counterexample, inst5.targets));
    for (Vertex x = 0; x < 5; ++x) EXPECT_EQ(degree_in_color(*v5.counterexample, x, kRed), 2u);

    const auto inst6 = ArrowInstance::complete(6, pair_of(Pattern::clique(3), Pattern::clique(3)));
    EXPECT_EQ(sat_decide<EdgeColoring>(inst6, *solver, 60).outcome, Outcome::arrows);
    EXPECT_EQ(sat_decide<EdgeColoring>(ArrowInstance::complete(2, pair_of(Pattern::star(1), Pattern::star(1))),
                                       *solver, 60)
                  .outcome,
              Outcome::arrows);
}

TEST(SolverRoundTrip, Bipartite) {
    const auto solver = solver_from_env();
    if (!solver) GTEST_SKIP() << "BISTAR_SAT_SOLVER not set";
    const auto targets = pair_of(Pattern::bistar(2, 2), Pattern::bistar(2, 2));
    EXPECT_EQ(sat_decide<BipartiteColoring>(ArrowInstance::bipartite(3, targets), *solver, 60).outcome,
              Outcome::arrows);
    const auto v = sat_decide<BipartiteColoring>(ArrowInstance::bipartite(2, targets), *solver, 60);
    ASSERT_EQ(v.outcome, Outcome::counterexample);
    EXPECT_TRUE(oracle::avoids_all(*v.counterexample, targets));
}
