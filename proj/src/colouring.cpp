#include "afc/colouring.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace afc {

const char* mode_name(Mode m) { return m == Mode::vertex ? "vertex" : "edge"; }

Mode mode_from_name(const std::string& s) {
    if (s == "vertex") return Mode::vertex;
    if (s == "edge") return Mode::edge;
    throw FormatError("unknown mode: " + s);
}

void Colouring::validate(const Graph& g) const {
    int want = mode == Mode::vertex ? g.n() : g.m();
    if (size() != want)
        throw FormatError("colouring size does not match the graph");
    for (int id : ids)
        if (id < 0 || id >= c) throw FormatError("colour id out of range");
}

bool Colouring::dense() const {
    std::vector<char> seen(c, 0);
    for (int id : ids) {
        if (id < 0 || id >= c) return false;
        seen[id] = 1;
    }
    return std::all_of(seen.begin(), seen.end(), [](char x) { return x != 0; });
}

Colouring Colouring::compacted() const {
    std::map<int, int> remap;
    for (int id : ids) remap[id] = 0;
    int next = 0;
    for (auto& [id, slot] : remap) slot = next++;
    Colouring out;
    out.mode = mode;
    out.c = next;
    out.ids.reserve(ids.size());
    for (int id : ids) out.ids.push_back(remap[id]);
    return out;
}

Colouring vertex_colouring(const Graph& g, std::vector<int> ids) {
    Colouring col;
    col.mode = Mode::vertex;
    col.ids = std::move(ids);
    col = col.compacted();
    col.validate(g);
    return col;
}

Colouring edge_colouring(const Graph& g, std::vector<int> ids) {
    Colouring col;
    col.mode = Mode::edge;
    col.ids = std::move(ids);
    col = col.compacted();
    col.validate(g);
    return col;
}

int ColourMultiset::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

bool is_k_anagram(const std::vector<int>& seq, int k) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    int len = static_cast<int>(seq.size());
    if (len < k || len % k != 0) return false;
    int block = len / k;
    int top = *std::max_element(seq.begin(), seq.end());
    std::vector<int> first(top + 1, 0), other(top + 1, 0);
    for (int i = 0; i < block; ++i) first[seq[i]] += 1;
    for (int j = 1; j < k; ++j) {
        std::fill(other.begin(), other.end(), 0);
        for (int i = j * block; i < (j + 1) * block; ++i) other[seq[i]] += 1;
        if (other != first) return false;
    }
    return true;
}

std::vector<int> colour_sequence(const Graph& g, const Colouring& col,
                                 const std::vector<int>& path) {
    col.validate(g);
    std::vector<int> seq;
    if (col.mode == Mode::vertex) {
        seq.reserve(path.size());
        for (int v : path) {
            if (v < 0 || v >= g.n()) throw std::invalid_argument("bad path vertex");
            seq.push_back(col.ids[v]);
        }
    } else {
        if (path.empty()) throw std::invalid_argument("empty path");
        seq.reserve(path.size() - 1);
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            int e = g.edge_id(path[i], path[i + 1]);
            if (e < 0) throw std::invalid_argument("path vertices not adjacent");
            seq.push_back(col.ids[e]);
        }
    }
    return seq;
}

ColourMultiset multiset_of_path(const Graph& g, const Colouring& col,
                                const std::vector<int>& path) {
    ColourMultiset ms(col.c);
    for (int id : colour_sequence(g, col, path)) ms.add(id);
    return ms;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("overflow");
    return r;
}

}  // namespace

std::uint64_t count_colour_multisets(int n, int c) {
    if (n < 0 || c < 0) throw std::invalid_argument("negative arguments");
    if (c == 0) return n == 0 ? 1 : 0;
    // C(n + c - 1, c - 1)
    std::uint64_t num = 1, den = 1;
    int k = c - 1;
    for (int i = 1; i <= k; ++i) {
        num = checked_mul(num, static_cast<std::uint64_t>(n + i));
        den = checked_mul(den, static_cast<std::uint64_t>(i));
        std::uint64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

std::uint64_t colour_multiset_weak_bound(int n, int c) {
    if (n < 0 || c < 0) throw std::invalid_argument("negative arguments");
    std::uint64_t r = 1;
    for (int i = 0; i < c; ++i) r = checked_mul(r, static_cast<std::uint64_t>(n) + 1);
    return r;
}

Colouring parse_colouring(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty colouring file");
    std::istringstream head(line);
    std::string mkv, ckv;
    if (!(head >> mkv >> ckv)) throw FormatError("bad colouring header");
    if (mkv.rfind("mode=", 0) != 0 || ckv.rfind("c=", 0) != 0)
        throw FormatError("colouring header must be \"mode=<m> c=<int>\"");
    Colouring col;
    col.mode = mode_from_name(mkv.substr(5));
    try {
        col.c = std::stoi(ckv.substr(2));
    } catch (const std::exception&) {
        throw FormatError("bad colour count: " + ckv);
    }
    if (col.c < 0) throw FormatError("negative colour count");
    if (!std::getline(in, line)) line.clear();
    std::istringstream body(line);
    int id;
    while (body >> id) col.ids.push_back(id);
    for (int x : col.ids)
        if (x < 0 || x >= col.c) throw FormatError("colour id out of range");
    return col;
}

Colouring load_colouring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    return parse_colouring(in);
}

void write_colouring(std::ostream& out, const Colouring& col) {
    out << "mode=" << mode_name(col.mode) << " c=" << col.c << '\n';
    for (int i = 0; i < col.size(); ++i)
        out << col.ids[i] << (i + 1 == col.size() ? '\n' : ' ');
    if (col.ids.empty()) out << '\n';
}

std::string colouring_to_string(const Colouring& col) {
    std::ostringstream os;
    write_colouring(os, col);
    return os.str();
}

std::string to_dot(const Graph& g, const Colouring* col) {
    if (col) col->validate(g);
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 0; v < g.n(); ++v) {
        os << "  " << v;
        if (col && col->mode == Mode::vertex)
            os << " [label=\"" << v << ":" << col->ids[v] << "\"]";
        os << ";\n";
    }
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges()[e];
        os << "  " << u << " -- " << v;
        if (col && col->mode == Mode::edge)
            os << " [label=\"" << col->ids[e] << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace afc
