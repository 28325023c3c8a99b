// Times the two parallel kernels against their serial references: the tree
// scan over all path pairs and the word factor scan. Anagram-free inputs keep
// both kernels from exiting early, so the timings cover the full quadratic
// work; a seeded sweep of colourings with anagrams then checks that both
// kernels return identical witnesses.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "afc/checker.hpp"
#include "afc/colourers.hpp"
#include "afc/colouring.hpp"
#include "afc/graph.hpp"
#include "afc/words.hpp"

namespace {

using namespace afc;
using clock_type = std::chrono::steady_clock;

template <typename F>
double seconds(F&& f) {
    auto t0 = clock_type::now();
    f();
    auto t1 = clock_type::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& label, double serial, double parallel,
            bool agree) {
    std::cout << label << ": serial " << serial << "s, parallel " << parallel
              << "s, speedup " << (parallel > 0 ? serial / parallel : 0.0)
              << "x, agree=" << (agree ? "yes" : "NO") << "\n";
}

bool same_witness(const std::optional<AnagramWitness>& a,
                  const std::optional<AnagramWitness>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->path.verts == b->path.verts && a->k == b->k;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel kernel timings"};
    app.set_help_flag("--help", "print help and exit");
    int h = 12;
    int word_len = 20000;
    int sweeps = 10;
    app.add_option("--h", h, "binary tree height for the tree scan");
    app.add_option("--len", word_len, "word length for the factor scan");
    app.add_option("--sweeps", sweeps, "seeded agreement colourings");
    CLI11_PARSE(app, argc, argv);

    bool all_agree = true;

    Graph t = make_complete_dary_tree(2, h);
    Colouring centred = colour_centred(t);
    std::optional<AnagramWitness> ws, wp;
    double ts = seconds([&] { ws = contains_k_anagram_serial(t, centred, 2); });
    double tp = seconds([&] { wp = contains_k_anagram(t, centred, 2); });
    bool agree = same_witness(ws, wp) && !ws;
    all_agree = all_agree && agree;
    report("tree scan n=" + std::to_string(t.n()) +
               " c=" + std::to_string(centred.c),
           ts, tp, agree);

    for (int seed = 1; seed <= sweeps; ++seed) {
        std::mt19937_64 rng(seed);
        std::vector<int> ids(t.n());
        for (auto& id : ids) id = static_cast<int>(rng() % 4);
        Colouring col = vertex_colouring(t, std::move(ids));
        auto a = contains_k_anagram_serial(t, col, 2);
        auto b = contains_k_anagram(t, col, 2);
        if (!same_witness(a, b)) {
            std::cout << "tree sweep seed " << seed << ": kernels disagree\n";
            all_agree = false;
        }
    }

    Word w = keranen_prefix(word_len);
    std::optional<Factor> fs, fp;
    double us = seconds([&] { fs = find_k_anagram_serial(w, 2); });
    double up = seconds([&] { fp = find_k_anagram(w, 2); });
    bool fs_eq = fs.has_value() == fp.has_value() && !fs;
    all_agree = all_agree && fs_eq;
    report("word scan len=" + std::to_string(word_len), us, up, fs_eq);

    for (int seed = 1; seed <= sweeps; ++seed) {
        std::mt19937_64 rng(seed);
        Word r;
        r.alphabet = 3;
        r.syms.resize(2000);
        for (auto& s : r.syms) s = static_cast<int>(rng() % 3);
        auto a = find_k_anagram_serial(r, 2);
        auto b = find_k_anagram(r, 2);
        bool eq = a.has_value() == b.has_value() &&
                  (!a || (a->start == b->start && a->len == b->len));
        if (!eq) {
            std::cout << "word sweep seed " << seed << ": kernels disagree\n";
            all_agree = false;
        }
    }

    if (!all_agree) {
        std::cout << "kernel disagreement detected\n";
        return 1;
    }
    std::cout << "all kernels agree\n";
    return 0;
}
