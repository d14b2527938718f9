#ifndef FISHBURN_ORACLE_HPP
#define FISHBURN_ORACLE_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fishburn/rational.hpp"

namespace fishburn {

// Explicit upper-triangular matrix, cells in row-major order:
// (1,1)..(1,m), (2,2)..(2,m), ..., (m,m).
struct FishburnMatrix {
    int dim = 0;
    std::vector<int> cells;

    static int cell_count(int m) { return m * (m + 1) / 2; }
    int index(int i, int j) const { // 1-based, i <= j
        return (i - 1) * dim - (i - 1) * i / 2 + (j - 1);
    }
    int entry(int i, int j) const { return cells[static_cast<size_t>(index(i, j))]; }
    int size() const {
        int s = 0;
        for (int c : cells) s += c;
        return s;
    }
    bool is_fishburn() const;
    bool is_self_dual() const; // entry(i,j) == entry(m+1-j, m+1-i)
};

struct AscentSequence {
    std::vector<int> values; // s_1..s_n, s_1 = 0
    int ascents() const;
    bool is_primitive() const;
};

struct Matching {
    int n = 0;
    std::vector<std::pair<int, int>> arcs; // (opener, closer), opener < closer
    bool is_regular() const;
    bool is_connected() const; // crossing graph connected
};

// Allowed entry values: either every integer in [0, size] or an explicit
// finite set containing 0.
struct EntrySet {
    bool all = false;
    std::vector<int> values;

    static EntrySet parse(const std::string& text); // "all" | "0,1,2"
    std::string describe() const;
};

// Exhaustive counts of Lambda-FMs of size n, keyed by dimension.
std::map<int, Int> brute_by_size(const EntrySet& entries, int n, int workers = 1);

// Exhaustive counts of Lambda-FMs of dimension m, keyed by size.
std::map<int, Int> brute_by_dim(const EntrySet& entries, int m, int workers = 1);

// The actual support, for uniformity tests.
std::vector<FishburnMatrix> enumerate_by_dim(const EntrySet& entries, int m);

// Ascent sequences of length n keyed by number of ascents.
std::map<int, Int> brute_ascent(int n, bool primitive, int workers = 1);

// (regular LCD count, connected regular LCD count) for matchings of [2n].
std::pair<Int, Int> brute_lcds(int n, int workers = 1);

// Self-dual (persymmetric) Lambda-FMs of size n keyed by dimension.
std::map<int, Int> brute_self_dual(const EntrySet& entries, int n, int workers = 1);

} // namespace fishburn

#endif
