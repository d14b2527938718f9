#include "fishburn/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

namespace fishburn {

bool FishburnMatrix::is_fishburn() const {
    for (int i = 1; i <= dim; ++i) {
        bool row = false;
        for (int j = i; j <= dim && !row; ++j) row = entry(i, j) > 0;
        if (!row) return false;
    }
    for (int j = 1; j <= dim; ++j) {
        bool col = false;
        for (int i = 1; i <= j && !col; ++i) col = entry(i, j) > 0;
        if (!col) return false;
    }
    return true;
}

bool FishburnMatrix::is_self_dual() const {
    for (int i = 1; i <= dim; ++i)
        for (int j = i; j <= dim; ++j)
            if (entry(i, j) != entry(dim + 1 - j, dim + 1 - i)) return false;
    return true;
}

int AscentSequence::ascents() const {
    int a = 0;
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i - 1] < values[i]) ++a;
    return a;
}

bool AscentSequence::is_primitive() const {
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i - 1] == values[i]) return false;
    return true;
}

bool Matching::is_regular() const {
    // Forbidden: nested arcs (a,d) > (b,c) with adjacent openers (b = a+1)
    // or adjacent closers (d = c+1), positions read in [2n].
    for (const auto& [a, d] : arcs)
        for (const auto& [b, c] : arcs) {
            if (a == b) continue;
            if (a < b && c < d && (b == a + 1 || d == c + 1)) return false;
        }
    return true;
}

bool Matching::is_connected() const {
    if (n <= 1) return n == 1;
    std::vector<int> parent(arcs.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<size_t>(x)] == x ? x : parent[static_cast<size_t>(x)] = find(parent[static_cast<size_t>(x)]); };
    for (size_t i = 0; i < arcs.size(); ++i)
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            auto [a, b] = arcs[i];
            auto [c, d] = arcs[j];
            bool cross = (a < c && c < b && b < d) || (c < a && a < d && d < b);
            if (cross) parent[static_cast<size_t>(find(static_cast<int>(i)))] = find(static_cast<int>(j));
        }
    int root = find(0);
    for (size_t i = 1; i < arcs.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

EntrySet EntrySet::parse(const std::string& text) {
    EntrySet s;
    if (text == "all") {
        s.all = true;
        return s;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) s.values.push_back(std::stoi(item));
    std::sort(s.values.begin(), s.values.end());
    s.values.erase(std::unique(s.values.begin(), s.values.end()), s.values.end());
    if (s.values.empty() || s.values.front() != 0)
        raise(errc::invalid_argument, "entry set must contain 0");
    return s;
}

std::string EntrySet::describe() const {
    if (all) return "all";
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

namespace {

// Depth-first enumeration of upper-triangular fillings with entry sum n,
// visiting complete Fishburn fillings only.  Cells go row-major; column j
// completes at cell (j,j), row i at cell (i,dim).  Pruning: entry budget,
// completed zero rows/columns, and a lower bound of one unit per
// still-empty future row.
class SizeEnumerator {
public:
    SizeEnumerator(const EntrySet& entries, int target, int dim)
        : entries_(entries), target_(target), dim_(dim) {
        mat_.dim = dim;
        mat_.cells.assign(static_cast<size_t>(FishburnMatrix::cell_count(dim)), 0);
    }

    void run(const std::function<void(const FishburnMatrix&)>& visit) {
        visit_ = &visit;
        descend(1, 1, target_);
    }

    // Same search restricted to a fixed first-cell value (work partition).
    void run_first(int first_value, const std::function<void(const FishburnMatrix&)>& visit) {
        visit_ = &visit;
        if (first_value > target_ || first_value == 0) return; // column 1 = {(1,1)} must be nonzero
        mat_.cells[0] = first_value;
        if (dim_ == 1) {
            if (first_value == target_) (*visit_)(mat_);
        } else {
            descend(1, 2, target_ - first_value);
        }
        mat_.cells[0] = 0;
    }

    std::vector<int> options(int budget) const {
        std::vector<int> opts;
        if (entries_.all) {
            for (int v = 0; v <= budget; ++v) opts.push_back(v);
        } else {
            for (int v : entries_.values)
                if (v <= budget) opts.push_back(v);
        }
        return opts;
    }

private:
    void descend(int i, int j, int budget) {
        // lower bound: every row below i still needs a positive entry
        int rows_needing = dim_ - i;
        if (row_zero_so_far(i, j)) ++rows_needing;
        int vmin = min_positive();
        if (static_cast<long>(rows_needing) * vmin > budget) return;

        for (int v : options(budget)) {
            mat_.cells[static_cast<size_t>(mat_.index(i, j))] = v;
            if (step_ok(i, j, v)) advance(i, j, budget - v);
            mat_.cells[static_cast<size_t>(mat_.index(i, j))] = 0;
        }
    }

    bool step_ok(int i, int j, int v) {
        if (i == j) { // column j just completed
            for (int r = 1; r <= j; ++r)
                if (mat_.entry(r, j) > 0) return true;
            return false;
        }
        (void)v;
        if (j == dim_) { // row i just completed
            for (int c = i; c <= dim_; ++c)
                if (mat_.entry(i, c) > 0) return true;
            return false;
        }
        return true;
    }

    void advance(int i, int j, int budget) {
        int ni = i, nj = j + 1;
        if (nj > dim_) {
            ni = i + 1;
            nj = ni;
        }
        if (ni > dim_) {
            if (budget == 0) (*visit_)(mat_);
            return;
        }
        descend(ni, nj, budget);
    }

    bool row_zero_so_far(int i, int j) const {
        for (int c = i; c < j; ++c)
            if (mat_.entry(i, c) > 0) return false;
        return true;
    }

    int min_positive() const {
        if (entries_.all) return 1;
        for (int v : entries_.values)
            if (v > 0) return v;
        return 1;
    }

    const EntrySet& entries_;
    int target_, dim_;
    FishburnMatrix mat_;
    const std::function<void(const FishburnMatrix&)>* visit_ = nullptr;
};

void check_size_guard(const EntrySet& entries, int n) {
    if (n < 1) raise(errc::invalid_argument, "size must be >= 1");
    int limit = entries.all ? 8 : 9;
    if (n > limit)
        raise(errc::guard, "brute-force size enumeration refuses n > " + std::to_string(limit) +
                               " for entry set '" + entries.describe() + "'");
}

// Merge worker histograms by addition.
std::map<int, Int> merge(std::vector<std::map<int, Int>>& parts) {
    std::map<int, Int> out;
    for (auto& p : parts)
        for (auto& [k, c] : p) out[k] += c;
    return out;
}

std::map<int, Int> by_size_filtered(const EntrySet& entries, int n, int workers,
                                    const std::function<bool(const FishburnMatrix&)>& keep) {
    std::vector<std::map<int, Int>> parts;
    if (workers <= 1) {
        parts.resize(1);
        for (int dim = 1; dim <= n; ++dim) {
            SizeEnumerator e(entries, n, dim);
            e.run([&](const FishburnMatrix& m) {
                if (keep(m)) parts[0][m.dim] += 1;
            });
        }
        return merge(parts);
    }
    // Partition by (dimension, first cell value).
    struct Task {
        int dim, first;
    };
    std::vector<Task> tasks;
    for (int dim = 1; dim <= n; ++dim) {
        SizeEnumerator probe(entries, n, dim);
        for (int v : probe.options(n)) tasks.push_back({dim, v});
    }
    parts.resize(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t t = static_cast<size_t>(w); t < tasks.size(); t += static_cast<size_t>(workers)) {
                SizeEnumerator e(entries, n, tasks[t].dim);
                e.run_first(tasks[t].first, [&](const FishburnMatrix& m) {
                    if (keep(m)) parts[static_cast<size_t>(w)][m.dim] += 1;
                });
            }
        });
    for (auto& th : pool) th.join();
    return merge(parts);
}

} // namespace

std::map<int, Int> brute_by_size(const EntrySet& entries, int n, int workers) {
    check_size_guard(entries, n);
    return by_size_filtered(entries, n, workers, [](const FishburnMatrix&) { return true; });
}

std::map<int, Int> brute_self_dual(const EntrySet& entries, int n, int workers) {
    if (n < 1) raise(errc::invalid_argument, "size must be >= 1");
    if (n > 7) raise(errc::guard, "brute-force self-dual enumeration refuses n > 7");
    check_size_guard(entries, n);
    return by_size_filtered(entries, n, workers,
                            [](const FishburnMatrix& m) { return m.is_self_dual(); });
}

namespace {

void dim_descend(const EntrySet& entries, FishburnMatrix& mat, int i, int j,
                 const std::function<void(const FishburnMatrix&)>& visit) {
    const int m = mat.dim;
    auto values = entries.all ? std::vector<int>{} : entries.values;
    for (int v : values) {
        mat.cells[static_cast<size_t>(mat.index(i, j))] = v;
        bool ok = true;
        if (i == j) { // column j complete
            ok = false;
            for (int r = 1; r <= j && !ok; ++r) ok = mat.entry(r, j) > 0;
        } else if (j == m) { // row i complete
            ok = false;
            for (int c = i; c <= m && !ok; ++c) ok = mat.entry(i, c) > 0;
        }
        if (ok) {
            int ni = i, nj = j + 1;
            if (nj > m) {
                ni = i + 1;
                nj = ni;
            }
            if (ni > m)
                visit(mat);
            else
                dim_descend(entries, mat, ni, nj, visit);
        }
    }
    mat.cells[static_cast<size_t>(mat.index(i, j))] = 0;
}

void check_dim_guard(const EntrySet& entries, int m) {
    if (m < 1) raise(errc::invalid_argument, "dimension must be >= 1");
    if (entries.all) raise(errc::guard, "dimension enumeration needs a finite entry set");
    double work = 1;
    for (int c = 0; c < FishburnMatrix::cell_count(m); ++c) {
        work *= static_cast<double>(entries.values.size());
        if (work > 4194304.0)
            raise(errc::guard, "brute-force dimension enumeration refuses |set|^(m(m+1)/2) > 2^22 "
                               "(m = " + std::to_string(m) + ", set = " + entries.describe() + ")");
    }
}

} // namespace

std::map<int, Int> brute_by_dim(const EntrySet& entries, int m, int workers) {
    check_dim_guard(entries, m);
    FishburnMatrix mat;
    mat.dim = m;
    mat.cells.assign(static_cast<size_t>(FishburnMatrix::cell_count(m)), 0);
    std::map<int, Int> hist;
    if (workers <= 1 || m == 1) {
        dim_descend(entries, mat, 1, 1, [&](const FishburnMatrix& mm) { hist[mm.size()] += 1; });
        return hist;
    }
    std::vector<std::map<int, Int>> parts(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    const auto& values = entries.values;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t t = static_cast<size_t>(w); t < values.size(); t += static_cast<size_t>(workers)) {
                if (values[t] == 0) continue; // (1,1) heads column 1, must be positive
                FishburnMatrix local;
                local.dim = m;
                local.cells.assign(static_cast<size_t>(FishburnMatrix::cell_count(m)), 0);
                local.cells[0] = values[t];
                if (m == 1) {
                    parts[static_cast<size_t>(w)][local.size()] += 1;
                    continue;
                }
                dim_descend(entries, local, 1, 2,
                            [&](const FishburnMatrix& mm) { parts[static_cast<size_t>(w)][mm.size()] += 1; });
            }
        });
    for (auto& th : pool) th.join();
    return merge(parts);
}

std::vector<FishburnMatrix> enumerate_by_dim(const EntrySet& entries, int m) {
    check_dim_guard(entries, m);
    FishburnMatrix mat;
    mat.dim = m;
    mat.cells.assign(static_cast<size_t>(FishburnMatrix::cell_count(m)), 0);
    std::vector<FishburnMatrix> out;
    dim_descend(entries, mat, 1, 1, [&](const FishburnMatrix& mm) { out.push_back(mm); });
    return out;
}

namespace {

void ascent_descend(std::vector<int>& s, int n, bool primitive, int ascents, std::map<int, Int>& hist) {
    if (static_cast<int>(s.size()) == n) {
        hist[ascents] += 1;
        return;
    }
    int j = static_cast<int>(s.size()) + 1; // next position, 1-based
    int cap = std::min(j - 1, ascents + 1);
    for (int v = 0; v <= cap; ++v) {
        if (primitive && v == s.back()) continue;
        s.push_back(v);
        ascent_descend(s, n, primitive, ascents + (v > s[s.size() - 2] ? 1 : 0), hist);
        s.pop_back();
    }
}

} // namespace

std::map<int, Int> brute_ascent(int n, bool primitive, int workers) {
    (void)workers; // cheap enough sequentially at the guarded sizes
    if (n < 1) raise(errc::invalid_argument, "length must be >= 1");
    if (n > 12) raise(errc::guard, "brute-force ascent enumeration refuses n > 12");
    std::map<int, Int> hist;
    std::vector<int> s = {0};
    if (n == 1) {
        hist[0] = 1;
        return hist;
    }
    ascent_descend(s, n, primitive, 0, hist);
    return hist;
}

namespace {

void matchings_descend(std::vector<int>& partner, int twon, std::vector<std::pair<int, int>>& arcs,
                       const std::function<void(const Matching&)>& visit, int n) {
    int first = 0;
    while (first < twon && partner[static_cast<size_t>(first)] >= 0) ++first;
    if (first == twon) {
        Matching m;
        m.n = n;
        m.arcs = arcs;
        visit(m);
        return;
    }
    for (int second = first + 1; second < twon; ++second) {
        if (partner[static_cast<size_t>(second)] >= 0) continue;
        partner[static_cast<size_t>(first)] = second;
        partner[static_cast<size_t>(second)] = first;
        arcs.emplace_back(first + 1, second + 1);
        matchings_descend(partner, twon, arcs, visit, n);
        arcs.pop_back();
        partner[static_cast<size_t>(first)] = -1;
        partner[static_cast<size_t>(second)] = -1;
    }
}

} // namespace

std::pair<Int, Int> brute_lcds(int n, int workers) {
    if (n < 1) raise(errc::invalid_argument, "size must be >= 1");
    if (n > 7) raise(errc::guard, "brute-force LCD enumeration refuses n > 7 (> 135135 matchings)");

    auto count_range = [&](int lo, int hi, Int& regular, Int& connected) {
        // partition by the partner of position 1
        for (int second = lo; second < hi; ++second) {
            std::vector<int> partner(static_cast<size_t>(2 * n), -1);
            std::vector<std::pair<int, int>> arcs;
            partner[0] = second;
            partner[static_cast<size_t>(second)] = 0;
            arcs.emplace_back(1, second + 1);
            matchings_descend(partner, 2 * n, arcs, [&](const Matching& m) {
                if (!m.is_regular()) return;
                regular += 1;
                if (m.is_connected()) connected += 1;
            }, n);
        }
    };

    if (workers <= 1) {
        Int regular = 0, connected = 0;
        count_range(1, 2 * n, regular, connected);
        return {regular, connected};
    }
    std::vector<Int> regs(static_cast<size_t>(workers), 0), cons(static_cast<size_t>(workers), 0);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int second = 1 + w; second < 2 * n; second += workers)
                count_range(second, second + 1, regs[static_cast<size_t>(w)], cons[static_cast<size_t>(w)]);
        });
    for (auto& th : pool) th.join();
    Int regular = 0, connected = 0;
    for (int w = 0; w < workers; ++w) {
        regular += regs[static_cast<size_t>(w)];
        connected += cons[static_cast<size_t>(w)];
    }
    return {regular, connected};
}

} // namespace fishburn
