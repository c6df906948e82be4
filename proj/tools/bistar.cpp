#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bistar/bistar.hpp"

using namespace bistar;

namespace {

enum Exit : int { kOk = 0, kInvalid = 1, kUsage = 2, kExhausted = 3, kConstructionFailed = 4 };

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ArgumentError("cannot write '" + path + "'");
    out << text;
}

struct TargetArgs {
    std::string red, blue;
    std::vector<std::string> extra;

    void add_to(CLI::App* app) {
        app->add_option("--red", red, "pattern avoided in color 0");
        app->add_option("--blue", blue, "pattern avoided in color 1");
        app->add_option("--target", extra, "pattern for the next color (repeatable)");
    }

    std::vector<Pattern> patterns() const {
        std::vector<Pattern> out;
        if (!red.empty()) out.push_back(parse_pattern(red));
        if (!blue.empty()) out.push_back(parse_pattern(blue));
        for (const auto& s : extra) out.push_back(parse_pattern(s));
        return out;
    }
};

struct SolverArgs {
    bool sat = false;
    std::string solver;
    unsigned timeout = 0;

    void add_to(CLI::App* app) {
        app->add_flag("--sat", sat, "decide with an external DIMACS solver");
        app->add_option("--solver", solver, "solver command (default: $BISTAR_SAT_SOLVER)");
        app->add_option("--timeout", timeout, "solver timeout in seconds (0 = none)");
    }

    std::string command() const {
        if (!solver.empty()) return solver;
        if (auto s = solver_from_env()) return *s;
        throw ArgumentError("--sat needs --solver or BISTAR_SAT_SOLVER");
    }
};

int report_embedding(const Embedding& e) {
    std::cout << "INVALID\n" << e.to_string() << "\n";
    return kInvalid;
}

std::string describe(const AnyColoring& g) {
    return std::visit(
        [](const auto& c) {
            using G = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<G, BipartiteColoring>)
                return "K" + std::to_string(c.left_size()) + "," + std::to_string(c.right_size());
            else return "K" + std::to_string(c.order());
        },
        g);
}

// construct ---------------------------------------------------------------

struct ConstructArgs {
    std::string name;
    unsigned k = 0, m = 0, n = 0, l = 2, colors = 0;
    std::string residues;
    bool symmetrize = false;
    std::string outer, inner, output;
    TargetArgs targets;
};

std::vector<long long> parse_residues(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::logic_error&) {
            throw ParseError("bad residue '" + tok + "'");
        }
    }
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw ArgumentError(what);
}

int run_construct(const ConstructArgs& a) {
    WitnessFile w{EdgeColoring(1, 2), a.targets.patterns(), a.name};
    const auto& name = a.name;
    if (name == "c5c5") {
        w.coloring = c5c5_coloring();
        w.provenance = "Fig2";
        if (w.targets.empty()) w.targets = {Pattern::bistar(3, 3), Pattern::star(3)};
    } else if (name == "cyclic") {
        require(a.n >= 2, "cyclic needs --n >= 2");
        w.coloring = cyclic_coloring(a.n, ResidueSet(a.n, parse_residues(a.residues)),
                                     a.symmetrize ? Symmetrize::yes : Symmetrize::no);
    } else if (name == "star-bistar") {
        require(a.k && a.m && a.n, "star-bistar needs --k, --m, --n");
        w.coloring = star_bistar_witness(a.k, a.m, a.n);
        w.provenance = star_bistar_case(a.k, a.m);
        w.targets = {Pattern::bistar(a.k, a.m), Pattern::star(a.n)};
    } else if (name == "two-cliques") {
        require(a.k && a.m, "two-cliques needs --k, --m");
        w.coloring = two_cliques_witness(a.k, a.m);
        w.provenance = "Thm7";
        w.targets = {Pattern::bistar(a.k, a.m), Pattern::clique(3)};
    } else if (name == "turan") {
        require(a.k && a.m && a.n, "turan needs --k, --m, --n");
        w.coloring = turan_blowup_witness(a.k, a.m, a.n);
        w.provenance = "Thm8";
        w.targets = {Pattern::bistar(a.k, a.m), Pattern::clique(a.n)};
    } else if (name == "product") {
        require(!a.outer.empty() && !a.inner.empty(), "product needs --outer and --inner witness files");
        const auto outer = read_witness(slurp(a.outer));
        const auto inner = read_witness(slurp(a.inner));
        const auto* o = std::get_if<EdgeColoring>(&outer.coloring);
        const auto* i = std::get_if<EdgeColoring>(&inner.coloring);
        require(o && i, "product needs complete-host witnesses");
        w.coloring = product_construction(*o, *i);
        w.provenance = "Thm10";
        if (w.targets.empty() && !outer.targets.empty() && !inner.targets.empty()) {
            w.targets = inner.targets;
            w.targets.insert(w.targets.end(), outer.targets.begin(), outer.targets.end());
        }
    } else if (name == "bipartite-interval") {
        require(a.k && a.n, "bipartite-interval needs --k, --n");
        const unsigned m = a.m ? a.m : 2;
        w.coloring = bipartite_interval_witness(a.k, a.n);
        w.provenance = a.k == m && a.n == a.l ? "Thm11" : "Thm13";
        w.targets = {Pattern::bistar(a.k, m), Pattern::bistar(a.n, a.l)};
    } else if (name == "bipartite-kcolor") {
        require(a.colors && a.m, "bipartite-kcolor needs --colors, --m");
        w.coloring = bipartite_kcolor_witness(a.colors, a.m);
        w.provenance = "Thm16";
        w.targets = std::vector<Pattern>(a.colors, Pattern::bistar(a.m, a.m));
    } else {
        throw ArgumentError("unknown construction '" + name + "'");
    }
    if (!w.targets.empty()) {
        if (w.targets.size() != colors_of(w.coloring))
            throw ArgumentError("construction has " + std::to_string(colors_of(w.coloring)) + " colors but " +
                                std::to_string(w.targets.size()) + " targets were given");
        if (auto e = violates(w.coloring, w.targets)) {
            std::cerr << "construction failed verification: " << e->to_string() << "\n";
            return kConstructionFailed;
        }
    }
    emit(write_witness(w), a.output);
    std::cerr << "witness on " << describe(w.coloring) << ", provenance " << w.provenance << "\n";
    return kOk;
}

// verify / dot ------------------------------------------------------------

int run_verify(const std::string& path, const TargetArgs& targets) {
    const auto w = read_witness(slurp(path));
    auto ts = targets.patterns();
    if (ts.empty()) ts = w.targets;
    if (ts.empty()) throw ArgumentError("witness lists no targets; pass --red/--blue/--target");
    if (ts.size() != colors_of(w.coloring)) throw ArgumentError("one target per color required");
    if (auto e = violates(w.coloring, ts)) return report_embedding(*e);
    std::cout << "VALID\n";
    return kOk;
}

int run_dot(const std::string& path, bool overlay, const TargetArgs& targets, const std::string& output) {
    const auto w = read_witness(slurp(path));
    DotOptions opts;
    if (overlay) {
        auto ts = targets.patterns();
        if (ts.empty()) ts = w.targets;
        if (ts.size() != colors_of(w.coloring)) throw ArgumentError("--overlay needs one target per color");
        opts.overlay = violates(w.coloring, ts);
    }
    emit(export_dot(w.coloring, opts), output);
    return kOk;
}

// arrows / ramsey ---------------------------------------------------------

struct SearchArgs {
    std::uint64_t budget = 0;
    unsigned threads = 1;

    void add_to(CLI::App* app) {
        app->add_option("--budget", budget, "DFS node limit (0 = unlimited)");
        app->add_option("--threads", threads, "DFS worker threads")->check(CLI::PositiveNumber);
    }

    SearchOptions options() const {
        SearchOptions o;
        if (budget) o.budget = budget;
        o.threads = threads;
        return o;
    }
};

template <class G>
int print_verdict(const Verdict<G>& v, const std::vector<Pattern>& targets, const std::string& output) {
    std::cout << to_string(v.outcome) << "\n";
    if (v.outcome == Outcome::exhausted) {
        std::cerr << "budget exhausted after " << v.nodes << " nodes\n";
        return kExhausted;
    }
    if (v.nodes) std::cerr << v.nodes << " nodes\n";
    if (v.counterexample && !output.empty())
        emit(write_witness({*v.counterexample, targets, "search"}), output);
    return kOk;
}

int run_arrows(std::size_t n, bool bipartite, const TargetArgs& ta, const SearchArgs& sa, const SolverArgs& so,
               const std::string& output) {
    const auto targets = ta.patterns();
    const auto inst = bipartite ? ArrowInstance::bipartite(n, targets) : ArrowInstance::complete(n, targets);
    if (bipartite) {
        const auto v = so.sat ? sat_decide<BipartiteColoring>(inst, so.command(), so.timeout)
                              : arrows_bipartite(inst, sa.options());
        return print_verdict(v, targets, output);
    }
    const auto v = so.sat ? sat_decide<EdgeColoring>(inst, so.command(), so.timeout) : arrows(inst, sa.options());
    return print_verdict(v, targets, output);
}

/// A verified construction on K_{R-1} for target pairs covered by the constructions module.
std::optional<std::pair<EdgeColoring, std::string>> seed_witness(const std::vector<Pattern>& targets) {
    if (targets.size() != 2 || !targets[0].is<Bistar>()) return std::nullopt;
    const auto b = targets[0].as<Bistar>();
    try {
        if (targets[1].is<Star>() && b.k >= 4 && b.m >= 4) {
            const auto n = targets[1].as<Star>().leaves;
            return std::pair{star_bistar_witness(b.k, b.m, n), star_bistar_case(b.k, b.m)};
        }
        if (targets[1].is<Clique>()) {
            const auto n = targets[1].as<Clique>().n;
            return std::pair{turan_blowup_witness(b.k, b.m, n), std::string(n == 3 ? "Thm7" : "Thm8")};
        }
    } catch (const std::exception& e) {
        std::cerr << "no seed witness: " << e.what() << "\n";
    }
    return std::nullopt;
}

int run_ramsey(std::size_t max_n, bool use_seed, const TargetArgs& ta, const SearchArgs& sa, const SolverArgs& so,
               const std::string& output) {
    const auto targets = ta.patterns();
    std::optional<EdgeColoring> seed;
    std::string provenance = "search";
    if (use_seed) {
        if (auto s = seed_witness(targets); s && s->first.order() < max_n) {
            std::cerr << "seed: " << s->second << " witness on K" << s->first.order() << "\n";
            seed = std::move(s->first);
            provenance = s->second;
        }
    }
    const auto start_time = std::chrono::steady_clock::now();
    std::size_t last_search = 0;
    auto decide = [&](std::size_t n) {
        const auto inst = ArrowInstance::complete(n, targets);
        last_search = n;
        return so.sat ? sat_decide<EdgeColoring>(inst, so.command(), so.timeout) : arrows(inst, sa.options());
    };
    const auto r = ramsey_search(targets, max_n, decide, seed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_time).count();
    for (const auto& [n, o] : r.log) std::cerr << "K" << n << ": " << to_string(o) << "\n";
    std::cerr << "elapsed " << secs << " s\n";
    if (r.status == RamseyResult::Status::exhausted) {
        std::cout << "unknown\nbudget exhausted at N=" << last_search << "\n";
        return kExhausted;
    }
    if (r.status == RamseyResult::Status::ceiling || !r.value) {
        std::cout << "unknown\nno arrowing N <= " << max_n << "\n";
        return kInvalid;
    }
    std::cout << *r.value << "\n";
    std::cout << "arrowing N: " << *r.value << "\n";
    if (r.witness) {
        // The witness came from a seed unless the scan itself produced the order value-1 coloring.
        const bool from_seed = seed && r.log.front().first == *r.value;
        const std::string text = write_witness({*r.witness, targets, from_seed ? provenance : "search"});
        if (output.empty()) {
            std::cout << "counterexample on K" << r.witness->order() << ":\n" << text;
        } else {
            emit(text, output);
            std::cout << "counterexample on K" << r.witness->order() << " written to " << output << "\n";
        }
    }
    return kOk;
}

// cnf / decode ------------------------------------------------------------

int run_cnf(std::size_t n, bool bipartite, const TargetArgs& ta, const std::string& output) {
    const auto targets = ta.patterns();
    const auto inst = bipartite ? ArrowInstance::bipartite(n, targets) : ArrowInstance::complete(n, targets);
    const auto f = encode_arrow(inst);
    emit(write_dimacs(f), output);
    std::cerr << f.num_vars << " variables, " << f.clauses.size() << " clauses\n";
    return kOk;
}

int run_decode(const std::string& cnf_path, const std::string& model_path, const std::string& output) {
    const auto f = read_dimacs(slurp(cnf_path));
    if (!f.instance) throw ParseError("CNF file has no 'c host' comment; cannot decode");
    const auto r = parse_solver_output(slurp(model_path), f);
    if (!r.satisfiable) {
        std::cout << "UNSAT\nARROWS\n";
        return kOk;
    }
    if (!satisfies(f, r.assignment)) throw DecodeError("model does not satisfy the formula");
    const auto g = decode_model(r.assignment, f);
    if (auto e = violates(g, f.instance->targets)) return report_embedding(*e);
    std::cout << "SAT\nCOUNTEREXAMPLE\n";
    emit(write_witness({g, f.instance->targets, "sat"}), output);
    return kOk;
}

// table -------------------------------------------------------------------

int run_table(TableRequest req, const std::map<std::string, std::string>& ranges) {
    for (const auto& [key, text] : ranges)
        if (!text.empty()) req.ranges[key] = parse_range(text);
    std::cout << render_table(table_rows(req));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ramsey workbench for bistars versus stars, cliques and bistars"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a witness coloring");
    construct->add_option("name", ca.name,
                          "cyclic | star-bistar | two-cliques | turan | product | bipartite-interval | "
                          "bipartite-kcolor | c5c5")
        ->required();
    construct->add_option("--k", ca.k);
    construct->add_option("--m", ca.m);
    construct->add_option("--n", ca.n, "clique/star size, or the modulus for cyclic");
    construct->add_option("--l", ca.l, "second bistar's small end (bipartite-interval)");
    construct->add_option("--colors", ca.colors);
    construct->add_option("--residues", ca.residues, "comma-separated red residues for cyclic");
    construct->add_flag("--symmetrize", ca.symmetrize, "close the residue set under negation");
    construct->add_option("--outer", ca.outer, "outer witness file (product)");
    construct->add_option("--inner", ca.inner, "inner witness file (product)");
    construct->add_option("-o,--output", ca.output);
    ca.targets.add_to(construct);

    std::string verify_path;
    TargetArgs verify_targets;
    auto* verify = app.add_subcommand("verify", "check a witness against its targets");
    verify->add_option("witness", verify_path)->required();
    verify_targets.add_to(verify);

    std::size_t arrows_n = 0;
    bool arrows_bip = false;
    std::string arrows_out;
    TargetArgs arrows_targets;
    SearchArgs arrows_search;
    SolverArgs arrows_solver;
    auto* arrows_cmd = app.add_subcommand("arrows", "decide whether K_N (or K_{N,N}) arrows the targets");
    arrows_cmd->add_option("--n", arrows_n)->required();
    arrows_cmd->add_flag("--bipartite", arrows_bip);
    arrows_cmd->add_option("-o,--output", arrows_out, "write a counterexample witness here");
    arrows_targets.add_to(arrows_cmd);
    arrows_search.add_to(arrows_cmd);
    arrows_solver.add_to(arrows_cmd);

    std::size_t ramsey_max = 0;
    bool no_seed = false;
    std::string ramsey_out;
    TargetArgs ramsey_targets;
    SearchArgs ramsey_search_args;
    SolverArgs ramsey_solver;
    auto* ramsey_cmd = app.add_subcommand("ramsey", "least arrowing N up to a ceiling");
    ramsey_cmd->add_option("--max", ramsey_max, "search ceiling (default: 16)")->default_val(16);
    ramsey_cmd->add_flag("--no-seed", no_seed, "do not start from a constructed witness");
    ramsey_cmd->add_option("-o,--output", ramsey_out, "write the N-1 counterexample here");
    ramsey_targets.add_to(ramsey_cmd);
    ramsey_search_args.add_to(ramsey_cmd);
    ramsey_solver.add_to(ramsey_cmd);

    std::size_t cnf_n = 0;
    bool cnf_bip = false;
    std::string cnf_out;
    TargetArgs cnf_targets;
    auto* cnf = app.add_subcommand("cnf", "write the DIMACS encoding of an arrowing instance");
    cnf->add_option("--n", cnf_n)->required();
    cnf->add_flag("--bipartite", cnf_bip);
    cnf->add_option("-o,--output", cnf_out);
    cnf_targets.add_to(cnf);

    std::string decode_cnf, decode_model_path, decode_out;
    auto* decode = app.add_subcommand("decode", "turn a solver transcript into a verified witness");
    decode->add_option("cnf", decode_cnf)->required();
    decode->add_option("model", decode_model_path, "solver output")->required();
    decode->add_option("-o,--output", decode_out);

    TableRequest table_req;
    std::map<std::string, std::string> table_ranges{{"k", ""}, {"m", ""}, {"n", ""},
                                                    {"l", ""}, {"r", ""}, {"colors", ""}};
    auto* table = app.add_subcommand("table", "tabulate bounds for a parameter grid");
    table->add_option("tag", table_req.tag, "thm1 | thm2 | thm3 | thm7 | thm8 | thm10 | thm11 | thm13 | thm15 | thm16")
        ->required();
    for (auto& [key, text] : table_ranges) table->add_option("--" + key, text, "a..b or a single value");
    table->add_flag("--searched", table_req.searched, "add a column confirmed by exhaustive search");
    table->add_option("--budget", table_req.budget, "node limit per search");

    std::string dot_path, dot_out;
    bool dot_overlay = false;
    TargetArgs dot_targets;
    auto* dot = app.add_subcommand("dot", "export a witness as Graphviz");
    dot->add_option("witness", dot_path)->required();
    dot->add_flag("--overlay", dot_overlay, "highlight the first target embedding found");
    dot->add_option("-o,--output", dot_out);
    dot_targets.add_to(dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*construct) return run_construct(ca);
        if (*verify) return run_verify(verify_path, verify_targets);
        if (*arrows_cmd) return run_arrows(arrows_n, arrows_bip, arrows_targets, arrows_search, arrows_solver, arrows_out);
        if (*ramsey_cmd)
            return run_ramsey(ramsey_max, !no_seed, ramsey_targets, ramsey_search_args, ramsey_solver, ramsey_out);
        if (*cnf) return run_cnf(cnf_n, cnf_bip, cnf_targets, cnf_out);
        if (*decode) return run_decode(decode_cnf, decode_model_path, decode_out);
        if (*table) return run_table(table_req, table_ranges);
        if (*dot) return run_dot(dot_path, dot_overlay, dot_targets, dot_out);
    } catch (const ConstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstructionFailed;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConstructionFailed;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DecodeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kUsage;
}
