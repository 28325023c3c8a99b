// afc: anagram-free colouring toolkit.
//
// Exit codes: 0 success, 1 verification failure (an anagram was found where
// none should be, or a budget ran out), 2 usage or input format errors.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "afc/adversary.hpp"
#include "afc/checker.hpp"
#include "afc/colourers.hpp"
#include "afc/colouring.hpp"
#include "afc/graph.hpp"
#include "afc/pathwidth.hpp"
#include "afc/solver.hpp"
#include "afc/words.hpp"

namespace {

using namespace afc;

std::string join_csv(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot open for writing: " + path);
    out << text;
}

void maybe_dot(const std::string& path, const Graph& g,
               const Colouring* col = nullptr) {
    if (!path.empty()) write_text_file(path, to_dot(g, col));
}

Mode family_mode(Family f) {
    return f == Family::edge_binary_tree ? Mode::edge : Mode::vertex;
}

Colouring random_colouring(const Graph& g, Mode mode, int c,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = mode == Mode::vertex ? g.n() : g.m();
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = static_cast<int>(rng() % c);
    return mode == Mode::vertex ? vertex_colouring(g, std::move(ids))
                                : edge_colouring(g, std::move(ids));
}

struct WordArgs {
    std::string family;
    int len = 0;
    int alphabet = 3;
    int k = 2;
    int cap = 20;
};

int run_word(const WordArgs& a) {
    if (a.family == "max") {
        SearchResult r = max_anagram_free_length(a.alphabet, a.k, a.cap);
        std::cout << "length=" << r.length << " word=" << r.word.str()
                  << (r.capped ? " capped=yes" : "") << "\n";
        return 0;
    }
    if (a.len <= 0) throw std::invalid_argument("--len must be positive");
    Word w;
    if (a.family == "keranen")
        w = keranen_prefix(a.len);
    else if (a.family == "dekking3")
        w = dekking_prefix(3, a.len);
    else if (a.family == "dekking4")
        w = dekking_prefix(4, a.len);
    else
        throw std::invalid_argument("unknown word family: " + a.family);
    std::cout << w.str() << "\n";
    return 0;
}

struct CheckArgs {
    std::string graph_file, colouring_file, dot;
    std::string mode = "vertex";
    int k = 2;
    long long path_cap = 10'000'000;
    bool serial = false;
};

int run_check(const CheckArgs& a) {
    Graph g = load_graph(a.graph_file);
    Colouring col = load_colouring(a.colouring_file);
    maybe_dot(a.dot, g, &col);
    if (mode_from_name(a.mode) != col.mode)
        throw FormatError("colouring file mode does not match --mode");
    CheckOptions opts;
    opts.path_cap = a.path_cap;
    opts.parallel = !a.serial;
    auto w = contains_k_anagram(g, col, a.k, opts);
    if (w) {
        std::cout << w->to_line() << "\n";
        return 1;
    }
    std::cout << "anagram-free\n";
    return 0;
}

struct ColourArgs {
    std::string scheme, graph_file, out, graph_out, dot;
    std::string mode = "vertex";
    int h = -1;
    int n = 0;
    int k = 4;
};

int run_colour(const ColourArgs& a) {
    Graph g;
    Colouring col;
    int bound = 0;
    if (a.scheme == "binary") {
        if (a.h < 0) throw std::invalid_argument("binary needs --h");
        g = make_complete_dary_tree(2, a.h);
        col = colour_binary_tree(a.h);
        bound = col.c;  // the scheme's promised budget is exactly its count
    } else if (a.scheme == "cycle") {
        if (a.n < 3) throw std::invalid_argument("cycle needs --n at least 3");
        g = make_cycle(a.n);
        col = colour_cycle(a.n, mode_from_name(a.mode));
        bound = 5;
    } else {
        if (a.graph_file.empty())
            throw std::invalid_argument(a.scheme + " needs a graph file");
        g = load_graph(a.graph_file);
        if (a.scheme == "centred") {
            col = colour_centred(g);
            bound = g.radius() + 1;
        } else if (a.scheme == "pw") {
            col = colour_pathwidth_vertex(g);
            bound = 4 * pathwidth(g) + 1;
        } else if (a.scheme == "pw-edge3") {
            col = colour_pathwidth_edge3(g);
            bound = 4 * pathwidth(g);
        } else if (a.scheme == "ktier") {
            col = colour_tree_k_anagram(g, a.k, mode_from_name(a.mode));
            bound = a.k >= 8 ? 2 : a.k >= 6 ? 3 : 4;
        } else {
            throw std::invalid_argument("unknown scheme: " + a.scheme);
        }
    }

    std::string pw_str = "-";
    if (g.n() > 0 && g.m() == g.n() - static_cast<int>(g.components().size()))
        pw_str = std::to_string(pathwidth(g));
    std::string rad_str = g.connected() ? std::to_string(g.radius()) : "-";
    std::ostringstream cert;
    cert << "colours=" << col.c << " bound=" << bound << " pw=" << pw_str
         << " radius=" << rad_str << "\n";

    if (!a.graph_out.empty()) write_text_file(a.graph_out, graph_to_string(g));
    maybe_dot(a.dot, g, &col);
    if (!a.out.empty()) {
        write_text_file(a.out, colouring_to_string(col));
        std::cout << cert.str();
    } else {
        std::cerr << cert.str();
        std::cout << colouring_to_string(col);
    }
    return 0;
}

int run_pw(const std::string& graph_file) {
    Graph g = load_graph(graph_file);
    int w = pathwidth(g);
    if (g.is_tree() && g.m() > 0) {
        PathwidthCert cert = main_path(g);
        std::cout << "width=" << cert.width
                  << " path=" << join_csv(cert.main_path.verts) << "\n";
    } else if (g.n() == 1) {
        std::cout << "width=0 path=0\n";
    } else {
        std::cout << "width=" << w << "\n";
    }
    return 0;
}

GadgetSpec spec_from(const std::string& family, int h, int d, int k, int t) {
    GadgetSpec spec;
    spec.family = family_from_name(family);
    spec.h = h;
    spec.d = d;
    spec.k = k;
    spec.t = t;
    spec.validate();
    return spec;
}

struct BuildArgs {
    std::string family, out, dot;
    int h = 0, d = 0, k = 0, t = 0;
};

int run_build(const BuildArgs& a) {
    Gadget gd = build(spec_from(a.family, a.h, a.d, a.k, a.t));
    maybe_dot(a.dot, gd.g);
    if (!a.out.empty()) {
        write_text_file(a.out, graph_to_string(gd.g));
        std::cout << "n=" << gd.g.n() << " m=" << gd.g.m() << "\n";
    } else {
        std::cout << graph_to_string(gd.g);
    }
    return 0;
}

struct AttackArgs {
    std::string family, colouring_file;
    int h = 0, d = 0, k = 0, t = 0;
    int c = 2;
    int random = 0;
    std::uint64_t seed = 0;
};

int attack_once(const Gadget& gd, const Colouring& col) {
    if (gd.spec.family == Family::kpower_gadget) {
        auto res = find_kanagram_gadget(gd, col);
        if (auto* w = std::get_if<AnagramWitness>(&res)) {
            if (!w->verify(gd.g, col))
                throw std::logic_error("internal error: witness failed");
            std::cout << w->to_line() << "\n";
        } else {
            const auto& fam = std::get<MultisetFamily>(res);
            std::cout << "family k=" << fam.k << " t=" << fam.t
                      << " size=" << fam.size() << "\n";
        }
        return 0;
    }
    AnagramWitness w = gd.spec.family == Family::edge_binary_tree
                           ? find_anagram_edge_tree(gd, col)
                       : gd.spec.family == Family::sibling_graph
                           ? find_anagram_vertex_graph(gd, col)
                           : find_anagram_dary(gd, col);
    if (!w.verify(gd.g, col))
        throw std::logic_error("internal error: witness failed");
    std::cout << w.to_line() << "\n";
    return 0;
}

int run_attack(const AttackArgs& a) {
    Gadget gd = build(spec_from(a.family, a.h, a.d, a.k, a.t));
    Mode mode = family_mode(gd.spec.family);
    if (!a.colouring_file.empty()) {
        Colouring col = load_colouring(a.colouring_file);
        return attack_once(gd, col);
    }
    if (a.random <= 0)
        throw std::invalid_argument("attack needs --colouring or --random");
    if (a.c < 1) throw std::invalid_argument("--c must be at least 1");
    for (int run = 0; run < a.random; ++run) {
        Colouring col = random_colouring(gd.g, mode, a.c, a.seed + run);
        attack_once(gd, col);
    }
    return 0;
}

struct SolveArgs {
    std::string graph_file;
    std::string mode = "vertex";
    int k = 2;
    int max_c = 6;
    long long budget = 100'000'000;
};

int run_solve(const SolveArgs& a) {
    Graph g = load_graph(a.graph_file);
    auto v = exact_chromatic(g, mode_from_name(a.mode), a.k, a.max_c, a.budget);
    if (v)
        std::cout << *v << "\n";
    else
        std::cout << "exceeds\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anagram-free graph colouring toolkit"};
    app.require_subcommand(1);
    // single-letter long options (--h, --k, ...) need the short help flag gone
    app.set_help_flag("--help", "print help and exit");

    auto add_sub = [&app](const std::string& name, const std::string& desc) {
        auto* s = app.add_subcommand(name, desc);
        s->set_help_flag("--help", "print help and exit");
        return s;
    };

    WordArgs wa;
    auto* word = add_sub("word", "generate anagram-free words");
    word->add_option("family", wa.family, "keranen | dekking3 | dekking4 | max")
        ->required();
    word->add_option("--len", wa.len, "prefix length");
    word->add_option("--alphabet", wa.alphabet, "alphabet size (max)");
    word->add_option("--k", wa.k, "block count (max)");
    word->add_option("--cap", wa.cap, "search length cap (max)");

    CheckArgs ca;
    auto* check = add_sub("check", "search a colouring for k-anagrams");
    check->add_option("graph", ca.graph_file, "graph file")->required();
    check->add_option("colouring", ca.colouring_file, "colouring file")
        ->required();
    check->add_option("--k", ca.k, "block count");
    check->add_option("--mode", ca.mode, "vertex | edge");
    check->add_option("--path-cap", ca.path_cap, "general graph path cap");
    check->add_flag("--serial", ca.serial, "disable the parallel kernel");
    check->add_option("--dot", ca.dot, "write DOT with colour labels");

    ColourArgs la;
    auto* colour = add_sub("colour", "construct certified colourings");
    colour->add_option("scheme", la.scheme,
                       "centred | pw | pw-edge3 | ktier | binary | cycle")
        ->required();
    colour->add_option("graph", la.graph_file, "graph file (tree schemes)");
    colour->add_option("--mode", la.mode, "vertex | edge (ktier, cycle)");
    colour->add_option("--h", la.h, "binary tree height");
    colour->add_option("--n", la.n, "cycle order");
    colour->add_option("--k", la.k, "anagram block count (ktier)");
    colour->add_option("--out", la.out, "colouring file destination");
    colour->add_option("--graph-out", la.graph_out,
                       "graph file destination (binary, cycle)");
    colour->add_option("--dot", la.dot, "write DOT with colour labels");

    std::string pw_graph;
    auto* pw = add_sub("pw", "exact pathwidth and a main path");
    pw->add_option("graph", pw_graph, "graph file")->required();

    BuildArgs ba;
    auto* build_cmd = add_sub("build", "emit a lower-bound gadget");
    build_cmd
        ->add_option("family", ba.family,
                     "edge_binary_tree | sibling_graph | complete_dary | "
                     "kpower_gadget")
        ->required();
    build_cmd->add_option("--h", ba.h, "tree height");
    build_cmd->add_option("--d", ba.d, "arity (complete_dary)");
    build_cmd->add_option("--k", ba.k, "block count (kpower_gadget)");
    build_cmd->add_option("--t", ba.t, "induction depth (kpower_gadget)");
    build_cmd->add_option("--out", ba.out, "graph file destination");
    build_cmd->add_option("--dot", ba.dot, "write DOT");

    AttackArgs aa;
    auto* attack = add_sub("attack", "find anagrams in gadget colourings");
    attack
        ->add_option("family", aa.family,
                     "edge_binary_tree | sibling_graph | complete_dary | "
                     "kpower_gadget")
        ->required();
    attack->add_option("--h", aa.h, "tree height");
    attack->add_option("--d", aa.d, "arity (complete_dary)");
    attack->add_option("--k", aa.k, "block count (kpower_gadget)");
    attack->add_option("--t", aa.t, "induction depth (kpower_gadget)");
    attack->add_option("--c", aa.c, "colours for random colourings");
    attack->add_option("--random", aa.random, "number of random colourings");
    attack->add_option("--seed", aa.seed, "base seed, run i uses seed + i");
    attack->add_option("--colouring", aa.colouring_file,
                       "attack one colouring file instead");

    SolveArgs sa;
    auto* solve = add_sub("solve", "exact minimum colour count");
    solve->add_option("graph", sa.graph_file, "graph file")->required();
    solve->add_option("--mode", sa.mode, "vertex | edge");
    solve->add_option("--k", sa.k, "block count");
    solve->add_option("--max-c", sa.max_c, "largest colour count to try");
    solve->add_option("--budget", sa.budget, "path check budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (word->parsed()) return run_word(wa);
        if (check->parsed()) return run_check(ca);
        if (colour->parsed()) return run_colour(la);
        if (pw->parsed()) return run_pw(pw_graph);
        if (build_cmd->parsed()) return run_build(ba);
        if (attack->parsed()) return run_attack(aa);
        if (solve->parsed()) return run_solve(sa);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const PremiseViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
