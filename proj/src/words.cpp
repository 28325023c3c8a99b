#include "afc/words.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace afc {

void Word::validate() const {
    if (alphabet < 1) throw std::invalid_argument("word alphabet must be positive");
    for (int s : syms)
        if (s < 0 || s >= alphabet)
            throw std::invalid_argument("word symbol out of range");
}

std::string Word::str() const {
    std::string out;
    out.reserve(syms.size());
    for (int s : syms) out.push_back(static_cast<char>('a' + s));
    return out;
}

Word Word::from_string(const std::string& s, int alphabet) {
    Word w;
    w.syms.reserve(s.size());
    int top = -1;
    for (char ch : s) {
        if (ch < 'a' || ch > 'z')
            throw std::invalid_argument("word letters must be a..z");
        int sym = ch - 'a';
        top = std::max(top, sym);
        w.syms.push_back(sym);
    }
    w.alphabet = alphabet > 0 ? alphabet : top + 1;
    if (w.alphabet < 1) w.alphabet = 1;
    w.validate();
    return w;
}

void Morphism::validate() const {
    if (alphabet < 1) throw std::invalid_argument("morphism alphabet must be positive");
    if (static_cast<int>(images.size()) != alphabet)
        throw std::invalid_argument("morphism needs one image per symbol");
    for (const auto& im : images) {
        if (im.empty()) throw std::invalid_argument("morphism image must be nonempty");
        for (int s : im)
            if (s < 0 || s >= alphabet)
                throw std::invalid_argument("morphism image symbol out of range");
    }
}

Word Morphism::apply(const Word& w) const {
    validate();
    if (w.alphabet != alphabet)
        throw std::invalid_argument("morphism alphabet mismatch");
    Word out;
    out.alphabet = alphabet;
    size_t total = 0;
    for (int s : w.syms) total += images[s].size();
    out.syms.reserve(total);
    for (int s : w.syms)
        out.syms.insert(out.syms.end(), images[s].begin(), images[s].end());
    return out;
}

Word iterate_morphism(const Morphism& m, int seed, int len) {
    m.validate();
    if (len < 0) throw std::invalid_argument("length must be nonnegative");
    if (seed < 0 || seed >= m.alphabet)
        throw std::invalid_argument("seed symbol out of range");
    Word w;
    w.alphabet = m.alphabet;
    w.syms = {seed};
    while (w.size() < len) {
        Word next = m.apply(w);
        if (next.size() <= w.size())
            throw std::runtime_error("morphism iteration stopped growing");
        w = std::move(next);
    }
    w.syms.resize(len);
    return w;
}

namespace {

// 85-uniform image of the first letter; the other three images are the
// letter-wise rotations a->b->c->d->a.
constexpr const char* kKer85 =
    "abcacdcbcdcadcdbdabacabadbabcbdbcbacbcdcacbabdabacadcbcdcacdbcbacbcdcacd"
    "cbdcdadbdcbca";

}  // namespace

Morphism keranen_morphism() {
    Morphism m;
    m.alphabet = 4;
    m.images.assign(4, {});
    const std::string base = kKer85;
    for (int r = 0; r < 4; ++r) {
        m.images[r].reserve(base.size());
        for (char ch : base) m.images[r].push_back(((ch - 'a') + r) % 4);
    }
    m.validate();
    return m;
}

Morphism dekking_morphism(int k) {
    Morphism m;
    if (k == 3) {
        m.alphabet = 3;
        m.images = {{0, 0, 1, 2}, {1, 1, 2}, {0, 2, 2}};
    } else if (k == 4) {
        m.alphabet = 2;
        m.images = {{0, 1, 1}, {0, 0, 0, 1}};
    } else {
        throw std::invalid_argument("dekking morphism exists for k = 3 and k = 4");
    }
    m.validate();
    return m;
}

Word keranen_prefix(int len) { return iterate_morphism(keranen_morphism(), 0, len); }

Word dekking_prefix(int k, int len) {
    return iterate_morphism(dekking_morphism(k), 0, len);
}

namespace {

// prefix counts: row i holds symbol counts of w[0, i)
std::vector<int> prefix_counts(const Word& w) {
    const int a = w.alphabet;
    std::vector<int> rows(static_cast<size_t>(w.size() + 1) * a, 0);
    for (int i = 0; i < w.size(); ++i) {
        const int* prev = rows.data() + static_cast<size_t>(i) * a;
        int* cur = rows.data() + static_cast<size_t>(i + 1) * a;
        std::copy(prev, prev + a, cur);
        cur[w.syms[i]] += 1;
    }
    return rows;
}

bool factor_is_k_anagram(const std::vector<int>& rows, int a, int start, int len,
                         int k) {
    int b = len / k;
    for (int j = 1; j < k; ++j) {
        const int* lo = rows.data() + static_cast<size_t>(start + (j - 1) * b) * a;
        const int* mid = rows.data() + static_cast<size_t>(start + j * b) * a;
        const int* hi = rows.data() + static_cast<size_t>(start + (j + 1) * b) * a;
        for (int t = 0; t < a; ++t)
            if (mid[t] - lo[t] != hi[t] - mid[t]) return false;
    }
    return true;
}

// shortest hit at one start, or -1
int shortest_at(const std::vector<int>& rows, int a, int n, int start, int k) {
    for (int len = k; start + len <= n; len += k)
        if (factor_is_k_anagram(rows, a, start, len, k)) return len;
    return -1;
}

}  // namespace

std::optional<Factor> find_k_anagram(const Word& w, int k, bool parallel) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    w.validate();
    const int n = w.size();
    const int a = w.alphabet;
    if (n < k) return std::nullopt;
    const std::vector<int> rows = prefix_counts(w);

#ifdef _OPENMP
    if (parallel && n > 256) {
        std::atomic<int> upper{INT_MAX};
        int best_start = INT_MAX, best_len = 0;
#pragma omp parallel
        {
            int loc_start = INT_MAX, loc_len = 0;
#pragma omp for schedule(dynamic, 64) nowait
            for (int s = 0; s < n; ++s) {
                if (s > upper.load(std::memory_order_relaxed)) continue;
                int len = shortest_at(rows, a, n, s, k);
                if (len > 0 && s < loc_start) {
                    loc_start = s;
                    loc_len = len;
                    int cur = upper.load(std::memory_order_relaxed);
                    while (s < cur && !upper.compare_exchange_weak(
                                          cur, s, std::memory_order_relaxed)) {
                    }
                }
            }
#pragma omp critical(afc_word_merge)
            if (loc_start < best_start) {
                best_start = loc_start;
                best_len = loc_len;
            }
        }
        if (best_start == INT_MAX) return std::nullopt;
        return Factor{best_start, best_len};
    }
#endif
    (void)parallel;
    for (int s = 0; s < n; ++s) {
        int len = shortest_at(rows, a, n, s, k);
        if (len > 0) return Factor{s, len};
    }
    return std::nullopt;
}

std::optional<Factor> find_k_anagram_serial(const Word& w, int k) {
    return find_k_anagram(w, k, false);
}

bool is_k_anagram_free(const Word& w, int k) {
    return !find_k_anagram(w, k).has_value();
}

namespace {

// Appending a symbol only creates factors that end at the new position, so
// the incremental check walks suffix lengths k, 2k, ..
bool suffix_clean(const std::vector<int>& rows, int a, int n, int k) {
    for (int len = k; len <= n; len += k)
        if (factor_is_k_anagram(rows, a, n - len, len, k)) return false;
    return true;
}

struct Search {
    int alphabet, k, cap;
    std::vector<int> rows;  // (cap + 1) prefix rows
    std::vector<int> cur;
    SearchResult best;

    bool dfs(int depth) {
        if (depth > best.length) {
            best.length = depth;
            best.word.alphabet = alphabet;
            best.word.syms = cur;
        }
        if (depth == cap) {
            best.capped = true;
            return true;  // nothing longer is reachable under the cap
        }
        for (int s = 0; s < alphabet; ++s) {
            const int* prev = rows.data() + static_cast<size_t>(depth) * alphabet;
            int* next = rows.data() + static_cast<size_t>(depth + 1) * alphabet;
            std::copy(prev, prev + alphabet, next);
            next[s] += 1;
            cur.push_back(s);
            bool done = suffix_clean(rows, alphabet, depth + 1, k) && dfs(depth + 1);
            cur.pop_back();
            if (done) return true;
        }
        return false;
    }
};

}  // namespace

SearchResult max_anagram_free_length(int alphabet, int k, int cap) {
    if (alphabet < 1) throw std::invalid_argument("alphabet must be positive");
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (cap < 0) throw std::invalid_argument("cap must be nonnegative");
    Search se;
    se.alphabet = alphabet;
    se.k = k;
    se.cap = cap;
    se.rows.assign(static_cast<size_t>(cap + 1) * alphabet, 0);
    se.best.word.alphabet = alphabet;
    se.dfs(0);
    return se.best;
}

}  // namespace afc
