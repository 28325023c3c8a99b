#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace afc {

// A word over the alphabet {0, .., alphabet-1}. ASCII form maps symbol i to
// the letter 'a' + i.
struct Word {
    int alphabet = 0;
    std::vector<int> syms;

    int size() const { return static_cast<int>(syms.size()); }
    void validate() const;
    std::string str() const;
    static Word from_string(const std::string& s, int alphabet = 0);
};

// Substitution on symbols; every symbol needs a nonempty image over the same
// alphabet.
struct Morphism {
    int alphabet = 0;
    std::vector<std::vector<int>> images;

    void validate() const;
    Word apply(const Word& w) const;
};

// Repeatedly applies m starting from the single-symbol word [seed] until the
// result reaches len symbols, then truncates. Throws if an iteration stops
// growing before that.
Word iterate_morphism(const Morphism& m, int seed, int len);

Morphism keranen_morphism();
Morphism dekking_morphism(int k);  // k == 3 or 4

// prefix of the fixed point, anagram-free for k = 2 on 4 letters
Word keranen_prefix(int len);

// k == 3: 3 letters, free of 3-anagrams;  k == 4: 2 letters, free of 4-anagrams
Word dekking_prefix(int k, int len);

// factor w[start, start + len)
struct Factor {
    int start = 0;
    int len = 0;
};

// Finds a factor that splits into k consecutive blocks with equal colour
// multisets. Deterministic order: leftmost start first, then shortest length.
// The parallel and serial kernels return identical results.
std::optional<Factor> find_k_anagram(const Word& w, int k, bool parallel = true);
std::optional<Factor> find_k_anagram_serial(const Word& w, int k);

bool is_k_anagram_free(const Word& w, int k);

struct SearchResult {
    int length = 0;   // longest k-anagram-free word found
    Word word;        // lexicographically least witness of that length
    bool capped = false;  // true when the search hit the length cap
};

// Exhaustive backtracking over all words, symbols tried in ascending order.
// Stops at the cap: a capped result means words of that length exist but
// longer ones were not explored.
SearchResult max_anagram_free_length(int alphabet, int k, int cap);

}  // namespace afc
