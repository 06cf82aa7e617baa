#include "osres/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace osres {

std::vector<SetMask> all_subsets_of_size(int n, int k) {
    std::vector<SetMask> out;
    if (k < 0 || k > n) return out;
    if (k == 0) return {SetMask(0)};
    // Gosper's hack over masks with k bits.
    SetMask v = (SetMask(1) << k) - 1;
    const SetMask limit = n >= 64 ? ~SetMask(0) : (SetMask(1) << n);
    while (true) {
        out.push_back(v);
        const SetMask c = v & -v, r = v + c;
        if (r == 0) break;  // would wrap past 64 bits
        v = (((r ^ v) >> 2) / c) | r;
        if (v >= limit) break;
    }
    return out;
}

void CircuitFamily::validate() const {
    for (SetMask m : members) {
        if (set_size(m) != k) throw std::invalid_argument("circuit of wrong size in family");
        if (n < 64 && (m >> n)) throw std::invalid_argument("circuit outside ground set");
    }
}

bool check_condition(const CircuitFamily& c, int ell) {
    c.validate();
    if (c.k != ell + 1) throw std::invalid_argument("family members must be (l+1)-sets");
    std::unordered_set<SetMask> members(c.members.begin(), c.members.end());
    for (std::size_t i = 0; i < c.members.size(); ++i)
        for (std::size_t j = i + 1; j < c.members.size(); ++j) {
            const SetMask u = c.members[i] | c.members[j];
            if (set_size(u) != ell + 2) continue;
            // Drop each element of the union in turn.
            SetMask rest = u;
            while (rest) {
                const SetMask bit = rest & -rest;
                rest &= rest - 1;
                if (set_size(u & ~bit) == ell + 1 && !members.count(u & ~bit)) return false;
            }
        }
    return true;
}

Matroid Matroid::from_circuits(int n, std::vector<SetMask> circuits) {
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    // Antichain check: only strictly smaller circuits can be contained, so
    // group by size and scan smaller classes.
    std::map<int, std::vector<SetMask>> by_size;
    for (SetMask c : circuits) by_size[set_size(c)].push_back(c);
    for (SetMask c : circuits)
        for (const auto& [sz, smaller] : by_size) {
            if (sz >= set_size(c)) break;
            for (SetMask s : smaller)
                if ((s & c) == s)
                    throw std::invalid_argument("circuit family is not an antichain");
        }
    Matroid m;
    m.n_ = n;
    m.circuits_ = std::move(circuits);
    m.index_circuits();
    m.rank_ = m.rank_of(n >= 64 ? ~SetMask(0) : (SetMask(1) << n) - 1);
    return m;
}

Matroid Matroid::uniform(int rank, int n) {
    if (rank > n) throw std::invalid_argument("uniform matroid needs rank <= n");
    Matroid m;
    m.n_ = n;
    m.rank_ = rank;
    m.circuits_ = all_subsets_of_size(n, rank + 1);
    m.index_circuits();
    return m;
}

void Matroid::index_circuits() {
    circuit_set_ = std::unordered_set<SetMask>(circuits_.begin(), circuits_.end());
}

std::vector<SetMask> Matroid::circuits_of_size(int k) const {
    std::vector<SetMask> out;
    for (SetMask c : circuits_)
        if (set_size(c) == k) out.push_back(c);
    return out;
}

bool Matroid::is_loopless() const { return circuits_of_size(1).empty(); }

bool Matroid::is_simple() const { return is_generic(2); }

bool Matroid::is_generic(int ell) const {
    for (SetMask c : circuits_)
        if (set_size(c) <= ell) return false;
    return true;
}

bool Matroid::is_independent(SetMask s) const {
    for (SetMask c : circuits_)
        if ((c & s) == c) return false;
    return true;
}

int Matroid::rank_of(SetMask s) const {
    // Greedy augmentation is exact for matroids.
    SetMask acc = 0;
    int r = 0;
    SetMask rest = s;
    while (rest) {
        const SetMask bit = rest & -rest;
        rest &= rest - 1;
        if (is_independent(acc | bit)) {
            acc |= bit;
            ++r;
        }
    }
    return r;
}

SetMask Matroid::closure(SetMask s) const {
    const int r = rank_of(s);
    SetMask out = s;
    for (int e = 0; e < n_; ++e) {
        const SetMask bit = SetMask(1) << e;
        if (out & bit) continue;
        if (rank_of(s | bit) == r) out |= bit;
    }
    return out;
}

std::vector<SetMask> Matroid::flats_of_rank(int k) const {
    std::unordered_set<SetMask> seen;
    std::vector<SetMask> out;
    for (SetMask s : all_subsets_of_size(n_, k)) {
        if (rank_of(s) != k) continue;
        const SetMask f = closure(s);
        if (seen.insert(f).second) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> position_table(int n, const std::vector<int>& order) {
    std::vector<int> pos(n + 1);
    if (order.empty()) {
        for (int e = 1; e <= n; ++e) pos[e] = e;
        return pos;
    }
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order must be a permutation of the ground set");
    std::vector<bool> seen(n + 1, false);
    for (int i = 0; i < n; ++i) {
        const int e = order[i];
        if (e < 1 || e > n || seen[e])
            throw std::invalid_argument("order must be a permutation of the ground set");
        seen[e] = true;
        pos[e] = i + 1;
    }
    return pos;
}

}  // namespace

std::vector<SetMask> Matroid::broken_circuits(const std::vector<int>& order) const {
    if (!is_loopless()) throw std::invalid_argument("matroid has loops");
    const std::vector<int> pos = position_table(n_, order);
    std::vector<SetMask> out;
    out.reserve(circuits_.size());
    for (SetMask c : circuits_) {
        int least = -1;
        for (int e : elements_of(c))
            if (least == -1 || pos[e] < pos[least]) least = e;
        out.push_back(c & ~(SetMask(1) << (least - 1)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SetMask> Matroid::nbc_sets(const std::vector<int>& order, int p) const {
    const std::vector<SetMask> broken = broken_circuits(order);
    // Broken circuits of size exactly p can only coincide with the p-set
    // itself, so a hash lookup replaces the subset scan.
    std::vector<SetMask> smaller;
    std::unordered_set<SetMask> same_size;
    for (SetMask b : broken) {
        if (set_size(b) < p) smaller.push_back(b);
        if (set_size(b) == p) same_size.insert(b);
    }
    std::vector<SetMask> out;
    for (SetMask s : all_subsets_of_size(n_, p)) {
        if (same_size.count(s)) continue;
        bool ok = true;
        for (SetMask b : smaller)
            if ((b & s) == b) {
                ok = false;
                break;
            }
        if (ok) out.push_back(s);
    }
    return out;
}

Matroid Matroid::restriction(SetMask s) const {
    const std::vector<int> elems = elements_of(s);
    std::vector<int> new_label(n_ + 1, 0);
    for (std::size_t i = 0; i < elems.size(); ++i) new_label[elems[i]] = static_cast<int>(i) + 1;
    std::vector<SetMask> circuits;
    for (SetMask c : circuits_) {
        if ((c & s) != c) continue;
        SetMask relabeled = 0;
        for (int e : elements_of(c)) relabeled |= SetMask(1) << (new_label[e] - 1);
        circuits.push_back(relabeled);
    }
    return from_circuits(static_cast<int>(elems.size()), std::move(circuits));
}

namespace {

// Backtracking isomorphism search. Elements are assigned in an order that
// completes circuits as early as possible; a circuit is checked against the
// target family the moment its last element is mapped, and candidate images
// are filtered by degree and pair-degree profiles.
struct IsoSearch {
    int n;
    const std::unordered_set<SetMask>& set2;
    std::vector<int> order;                       // assignment order, 1-based elements
    std::vector<std::vector<SetMask>> completed;  // circuits completed at each depth
    std::vector<std::vector<int>> deg1, deg2;     // element -> count per circuit size
    std::vector<std::vector<std::vector<int>>> pair1, pair2;  // pair -> count per size
    std::vector<int> image;                                   // 1-based, 0 = unassigned
    std::vector<bool> used;

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        const int x = order[depth];
        for (int y = 1; y <= n; ++y) {
            if (used[y] || deg1[x] != deg2[y]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d)
                if (pair1[x][order[d]] != pair2[y][image[order[d]]]) ok = false;
            if (!ok) continue;
            image[x] = y;
            used[y] = true;
            ok = true;
            for (SetMask c : completed[depth]) {
                SetMask mapped = 0;
                for (int e : elements_of(c)) mapped |= SetMask(1) << (image[e] - 1);
                if (!set2.count(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok && extend(depth + 1)) return true;
            image[x] = 0;
            used[y] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> Matroid::isomorphism(const Matroid& other) const {
    if (n_ != other.n_ || rank_ != other.rank_ || circuits_.size() != other.circuits_.size())
        return std::nullopt;
    const int max_size = n_ + 1;
    auto degrees = [&](const Matroid& m) {
        std::vector<std::vector<int>> d(m.n_ + 1, std::vector<int>(max_size + 1, 0));
        for (SetMask c : m.circuits_)
            for (int e : elements_of(c)) d[e][set_size(c)]++;
        return d;
    };
    auto pair_degrees = [&](const Matroid& m) {
        std::vector<std::vector<std::vector<int>>> d(
            m.n_ + 1, std::vector<std::vector<int>>(m.n_ + 1, std::vector<int>(max_size + 1, 0)));
        for (SetMask c : m.circuits_) {
            const auto elems = elements_of(c);
            for (std::size_t i = 0; i < elems.size(); ++i)
                for (std::size_t j = i + 1; j < elems.size(); ++j) {
                    d[elems[i]][elems[j]][set_size(c)]++;
                    d[elems[j]][elems[i]][set_size(c)]++;
                }
        }
        return d;
    };
    // Assignment order: greedily pick the element sharing the most circuits
    // with the already-ordered prefix, so circuits complete (and prune)
    // early.
    std::vector<int> order;
    {
        std::vector<bool> chosen(n_ + 1, false);
        std::vector<std::vector<SetMask>> through(n_ + 1);
        for (SetMask c : circuits_)
            for (int e : elements_of(c)) through[e].push_back(c);
        for (int step = 0; step < n_; ++step) {
            int best = -1;
            long best_score = -1;
            for (int e = 1; e <= n_; ++e) {
                if (chosen[e]) continue;
                long score = 0;
                for (SetMask c : through[e]) {
                    int present = 0;
                    for (int f : elements_of(c)) present += chosen[f] ? 1 : 0;
                    score += present;
                }
                if (score > best_score) {
                    best_score = score;
                    best = e;
                }
            }
            chosen[best] = true;
            order.push_back(best);
        }
    }
    std::vector<std::vector<SetMask>> completed(n_ + 1);
    {
        std::vector<int> depth_of(n_ + 1, 0);
        for (std::size_t d = 0; d < order.size(); ++d) depth_of[order[d]] = static_cast<int>(d);
        for (SetMask c : circuits_) {
            int last = 0;
            for (int e : elements_of(c)) last = std::max(last, depth_of[e]);
            completed[last].push_back(c);
        }
    }
    IsoSearch search{n_,
                     other.circuit_set_,
                     std::move(order),
                     std::move(completed),
                     degrees(*this),
                     degrees(other),
                     pair_degrees(*this),
                     pair_degrees(other),
                     std::vector<int>(n_ + 1, 0),
                     std::vector<bool>(n_ + 1, false)};
    {
        // Degree profiles must agree as multisets.
        auto profile = [](std::vector<std::vector<int>> d) {
            std::sort(d.begin() + 1, d.end());
            return d;
        };
        if (profile(search.deg1) != profile(search.deg2)) return std::nullopt;
    }
    if (!search.extend(0)) return std::nullopt;
    return std::vector<int>(search.image.begin() + 1, search.image.end());
}

Matroid matroid_from_top_circuits(const CircuitFamily& c, int ell, int n) {
    if (!check_condition(c, ell)) throw std::invalid_argument("not a circuit family");
    const std::vector<SetMask> all_top = all_subsets_of_size(n, ell + 1);
    if (c.members.size() == all_top.size())
        throw std::invalid_argument("degenerate: uniform U_{l,n}");

    std::vector<SetMask> circuits = c.members;
    for (SetMask s : all_subsets_of_size(n, ell + 2)) {
        bool contains_member = false;
        for (SetMask m : c.members)
            if ((m & s) == m) {
                contains_member = true;
                break;
            }
        if (!contains_member) circuits.push_back(s);
    }
    Matroid m = Matroid::from_circuits(n, std::move(circuits));
    if (m.rank() != ell + 1) throw std::logic_error("constructed matroid has unexpected rank");
    return m;
}

std::optional<std::string> circuit_axiom_violation(const Matroid& m) {
    const auto& cs = m.circuits();
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (i != j && (cs[i] & cs[j]) == cs[i]) return "circuit contains another circuit";
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
            SetMask common = cs[i] & cs[j];
            while (common) {
                const SetMask bit = common & -common;
                common &= common - 1;
                const SetMask target = (cs[i] | cs[j]) & ~bit;
                bool found = false;
                for (SetMask c : cs)
                    if ((c & target) == c) {
                        found = true;
                        break;
                    }
                if (!found) return "elimination axiom fails";
            }
        }
    return std::nullopt;
}

}  // namespace osres
