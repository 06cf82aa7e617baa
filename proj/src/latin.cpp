#include "osres/latin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace osres {

namespace {

void check_symbol_range(int v, int m) {
    if (v < 1 || v > m) throw std::invalid_argument("cell value outside symbol set");
}

std::vector<std::vector<int>> all_permutations(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string square_key(const LatinSquare& k) {
    std::string s(k.cells.size(), '\0');
    for (std::size_t i = 0; i < k.cells.size(); ++i) s[i] = static_cast<char>(k.cells[i]);
    return s;
}

}  // namespace

int LatinHypercube::at(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != dim) throw std::invalid_argument("wrong arity");
    std::size_t off = 0;
    for (int d = 0; d < dim; ++d) {
        if (idx[d] < 1 || idx[d] > order) throw std::invalid_argument("index out of range");
        off = off * order + (idx[d] - 1);
    }
    return cells[off];
}

void LatinHypercube::validate() const {
    if (dim < 1 || order < 1) throw std::invalid_argument("invalid hypercube shape");
    std::size_t expect = 1;
    for (int d = 0; d < dim; ++d) expect *= order;
    if (cells.size() != expect) throw std::invalid_argument("cell array has wrong length");
    for (int v : cells) check_symbol_range(v, order);

    // Walk every axis-parallel line: stride m^(dim-1-d) for axis d.
    std::vector<std::size_t> stride(dim);
    stride[dim - 1] = 1;
    for (int d = dim - 2; d >= 0; --d) stride[d] = stride[d + 1] * order;
    for (int d = 0; d < dim; ++d) {
        for (std::size_t base = 0; base < cells.size(); ++base) {
            // `base` is a line start iff its d-th coordinate is 0.
            if ((base / stride[d]) % order != 0) continue;
            unsigned seen = 0;
            for (int t = 0; t < order; ++t) seen |= 1u << (cells[base + t * stride[d]] - 1);
            if (seen != (order >= 32 ? ~0u : (1u << order) - 1))
                throw std::invalid_argument("line is not a permutation of the symbols");
        }
    }
}

void LatinSquare::validate() const { as_hypercube().validate(); }

LatinSquare LatinSquare::from_hypercube(const LatinHypercube& h) {
    if (h.dim != 2) throw std::invalid_argument("hypercube dimension must be 2");
    return LatinSquare{h.order, h.cells};
}

std::vector<int> LatinSquare::row_labels() const {
    std::vector<int> v(order);
    std::iota(v.begin(), v.end(), 1);
    return v;
}
std::vector<int> LatinSquare::col_labels() const {
    std::vector<int> v(order);
    std::iota(v.begin(), v.end(), order + 1);
    return v;
}
std::vector<int> LatinSquare::symbol_labels() const {
    std::vector<int> v(order);
    std::iota(v.begin(), v.end(), 2 * order + 1);
    return v;
}

LatinSquare conjugate(const LatinSquare& k, const std::array<int, 3>& sigma) {
    {
        std::array<int, 3> s = sigma;
        std::sort(s.begin(), s.end());
        if (s != std::array<int, 3>{1, 2, 3})
            throw std::invalid_argument("sigma must be a permutation of {1,2,3}");
    }
    const int m = k.order;
    LatinSquare out{m, std::vector<int>(m * m, 0)};
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            const std::array<int, 3> t{i, j, k.at(i, j)};
            out.at(t[sigma[0] - 1], t[sigma[1] - 1]) = t[sigma[2] - 1];
        }
    return out;
}

namespace {

// All reduced squares isotopic to images of `k`, optionally across all six
// conjugates. Every isotopy image with first row 1..m and sorted rows is
// produced: choose the source row of the new first row and the column
// permutation; the symbol bijection and the row order are then forced.
template <class Fn>
void for_each_reduced_image(const LatinSquare& k, bool conjugates, Fn&& fn) {
    const int m = k.order;
    const auto perms = all_permutations(m);
    static const std::array<std::array<int, 3>, 6> sigmas{{{1, 2, 3},
                                                           {1, 3, 2},
                                                           {2, 1, 3},
                                                           {2, 3, 1},
                                                           {3, 1, 2},
                                                           {3, 2, 1}}};
    std::vector<int> gamma(m + 1);
    LatinSquare image{m, std::vector<int>(m * m, 0)};
    for (const auto& sigma : sigmas) {
        if (!conjugates && sigma != std::array<int, 3>{1, 2, 3}) continue;
        const LatinSquare c = conjugate(k, sigma);
        for (int r = 1; r <= m; ++r) {
            for (const auto& beta : perms) {
                // gamma sends the symbols of source row r, read through beta,
                // to 1..m.
                for (int j = 0; j < m; ++j) gamma[c.at(r, beta[j] + 1)] = j + 1;
                // Transform all rows, then order them by leading entry.
                std::vector<std::vector<int>> transformed;
                transformed.reserve(m);
                for (int i = 1; i <= m; ++i) {
                    std::vector<int> row(m);
                    for (int j = 0; j < m; ++j) row[j] = gamma[c.at(i, beta[j] + 1)];
                    transformed.push_back(std::move(row));
                }
                std::sort(transformed.begin(), transformed.end(),
                          [](const auto& a, const auto& b) { return a[0] < b[0]; });
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) image.cells[i * m + j] = transformed[i][j];
                fn(image);
            }
        }
    }
}

}  // namespace

bool are_isotopic(const LatinSquare& a, const LatinSquare& b) {
    a.validate();
    b.validate();
    if (a.order != b.order) return false;
    // Reduced forms of b's isotopy orbit, then search a's.
    std::optional<LatinSquare> reduced_b;
    for_each_reduced_image(b, /*conjugates=*/false, [&](const LatinSquare& img) {
        if (!reduced_b || img.cells < reduced_b->cells) reduced_b = img;
    });
    std::optional<LatinSquare> reduced_a;
    for_each_reduced_image(a, /*conjugates=*/false, [&](const LatinSquare& img) {
        if (!reduced_a || img.cells < reduced_a->cells) reduced_a = img;
    });
    return reduced_a->cells == reduced_b->cells;
}

LatinSquare main_class_canonical(const LatinSquare& k) {
    k.validate();
    std::optional<LatinSquare> best;
    for_each_reduced_image(k, /*conjugates=*/true, [&](const LatinSquare& img) {
        if (!best || img.cells < best->cells) best = img;
    });
    return *best;
}

std::vector<LatinSquare> reduced_squares(int m) {
    std::vector<LatinSquare> out;
    LatinSquare k{m, std::vector<int>(m * m, 0)};
    for (int j = 1; j <= m; ++j) k.at(1, j) = j;
    for (int i = 1; i <= m; ++i) k.at(i, 1) = i;
    // Column availability bitmasks; rows handled per-row during recursion.
    std::vector<unsigned> col_used(m + 1, 0);
    for (int j = 1; j <= m; ++j) col_used[j] = 1u << (k.at(1, j) - 1);
    for (int i = 2; i <= m; ++i) col_used[1] |= 1u << (i - 1);

    // Fill rows 2..m left to right.
    auto rec = [&](auto&& self, int i, int j, unsigned row_used) -> void {
        if (i > m) {
            out.push_back(k);
            return;
        }
        if (j > m) {
            self(self, i + 1, 2, 1u << (k.at(i + 1 <= m ? i + 1 : 1, 1) - 1));
            return;
        }
        for (int v = 1; v <= m; ++v) {
            const unsigned bit = 1u << (v - 1);
            if ((row_used & bit) || (col_used[j] & bit)) continue;
            k.at(i, j) = v;
            col_used[j] |= bit;
            self(self, i, j + 1, row_used | bit);
            col_used[j] &= ~bit;
        }
        k.at(i, j) = 0;
    };
    if (m == 1) {
        out.push_back(k);
        return out;
    }
    rec(rec, 2, 2, 1u << (k.at(2, 1) - 1));
    return out;
}

int count_main_classes(int m) { return static_cast<int>(main_class_representatives(m).size()); }

std::vector<LatinSquare> main_class_representatives(int m) {
    if (m < 1 || m > 6) throw std::invalid_argument("unsupported order");
    const std::vector<LatinSquare> reduced = reduced_squares(m);
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(reduced.size());
    for (std::size_t i = 0; i < reduced.size(); ++i) index.emplace(square_key(reduced[i]), i);

    std::vector<bool> visited(reduced.size(), false);
    std::vector<LatinSquare> reps;
    for (std::size_t seed = 0; seed < reduced.size(); ++seed) {
        if (visited[seed]) continue;
        std::optional<LatinSquare> best;
        for_each_reduced_image(reduced[seed], /*conjugates=*/true, [&](const LatinSquare& img) {
            const auto it = index.find(square_key(img));
            if (it == index.end())
                throw std::logic_error("main-class image is not a reduced square");
            visited[it->second] = true;
            if (!best || img.cells < best->cells) best = img;
        });
        reps.push_back(*best);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    if (a.order != b.order) throw std::invalid_argument("orders differ");
    a.validate();
    b.validate();
    const int m = a.order;
    std::vector<bool> seen(m * m, false);
    for (int i = 0; i < m * m; ++i) {
        const int code = (a.cells[i] - 1) * m + (b.cells[i] - 1);
        if (seen[code]) return false;
        seen[code] = true;
    }
    return true;
}

std::vector<LatinSquare> mols_prime(int p, int s) {
    if (p < 2) throw std::invalid_argument("p must be a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p must be a prime");
    if (s < 1 || s > p - 1) throw std::invalid_argument("need 1 <= s <= p-1");
    std::vector<LatinSquare> out;
    for (int t = 1; t <= s; ++t) {
        LatinSquare k{p, std::vector<int>(p * p, 0)};
        for (int i = 1; i <= p; ++i)
            for (int j = 1; j <= p; ++j) k.at(i, j) = ((i - 1) + t * (j - 1)) % p + 1;
        out.push_back(std::move(k));
    }
    return out;
}

std::vector<Subsquare> find_subsquares(const LatinSquare& k, int s) {
    k.validate();
    const int m = k.order;
    if (s < 2 || 2 * s > m) return {};
    std::vector<Subsquare> out;
    for (SetMask rows : all_subsets_of_size(m, s)) {
        const std::vector<int> ri = elements_of(rows);
        for (SetMask cols : all_subsets_of_size(m, s)) {
            const std::vector<int> ci = elements_of(cols);
            // Latin block: every row and every column of the block is a
            // permutation of one s-element symbol set.
            unsigned want = 0;
            for (int c : ci) want |= 1u << (k.at(ri[0], c) - 1);
            if (std::popcount(want) != s) continue;
            bool ok = true;
            for (int r : ri) {
                unsigned got = 0;
                for (int c : ci) got |= 1u << (k.at(r, c) - 1);
                if (got != want) {
                    ok = false;
                    break;
                }
            }
            for (int c : ci) {
                if (!ok) break;
                unsigned got = 0;
                for (int r : ri) got |= 1u << (k.at(r, c) - 1);
                if (got != want) ok = false;
            }
            if (!ok) continue;
            std::vector<int> symbols;
            for (int v = 1; v <= m; ++v)
                if (want & (1u << (v - 1))) symbols.push_back(v);
            out.push_back(Subsquare{ri, ci, symbols});
        }
    }
    return out;
}

CircuitFamily circuit_family(const LatinHypercube& k) {
    k.validate();
    const int m = k.order, l = k.dim;
    CircuitFamily fam{(l + 1) * m, l + 1, {}};
    std::vector<int> idx(l, 1);
    while (true) {
        SetMask c = 0;
        for (int d = 0; d < l; ++d) c |= SetMask(1) << (d * m + idx[d] - 1);
        c |= SetMask(1) << (l * m + k.at(idx) - 1);
        fam.members.push_back(c);
        int d = l - 1;
        while (d >= 0 && idx[d] == m) idx[d--] = 1;
        if (d < 0) break;
        ++idx[d];
    }
    std::sort(fam.members.begin(), fam.members.end());
    return fam;
}

Matroid build_matroid(const LatinHypercube& k) {
    if (k.order < 2 || k.dim < 2) throw std::invalid_argument("need order >= 2 and dimension >= 2");
    return matroid_from_top_circuits(circuit_family(k), k.dim, (k.dim + 1) * k.order);
}

namespace {

// 3-circuit family of the MOLS construction: all triples inside each
// X_{i,j} = {i, m+j, shifted symbols of every square at cell (i,j)}.
std::vector<SetMask> mols_triples(const std::vector<LatinSquare>& squares) {
    const int m = squares.front().order;
    const int s = static_cast<int>(squares.size());
    std::unordered_set<SetMask> triples;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            std::vector<int> x{i, m + j};
            for (int p = 0; p < s; ++p) x.push_back((p + 2) * m + squares[p].at(i, j));
            const int t = static_cast<int>(x.size());
            for (int a = 0; a < t; ++a)
                for (int b = a + 1; b < t; ++b)
                    for (int c = b + 1; c < t; ++c)
                        triples.insert(mask_of({x[a], x[b], x[c]}));
        }
    std::vector<SetMask> out(triples.begin(), triples.end());
    std::sort(out.begin(), out.end());
    return out;
}

void check_mols_input(const std::vector<LatinSquare>& squares) {
    if (squares.empty()) throw std::invalid_argument("need at least one square");
    for (const auto& k : squares) {
        k.validate();
        if (k.order != squares.front().order) throw std::invalid_argument("orders differ");
    }
    for (std::size_t i = 0; i < squares.size(); ++i)
        for (std::size_t j = i + 1; j < squares.size(); ++j)
            if (!are_orthogonal(squares[i], squares[j]))
                throw std::invalid_argument("squares are not mutually orthogonal");
}

}  // namespace

Matroid build_matroid_mols(const std::vector<LatinSquare>& squares) {
    return build_matroid_degenerate(squares, DegenerationSpec{});
}

Matroid build_matroid_degenerate(const std::vector<LatinSquare>& squares,
                                 const DegenerationSpec& spec) {
    check_mols_input(squares);
    const int m = squares.front().order;
    const int s = static_cast<int>(squares.size());
    const int n = (s + 2) * m;
    if (m == 1) {
        if (!spec.blocks.empty() || spec.subsquare)
            throw std::invalid_argument("order-1 squares admit no degenerations");
        return Matroid::uniform(2, n);
    }

    std::vector<SetMask> triples = mols_triples(squares);
    for (const auto& [block_index, block] : spec.blocks) {
        if (block_index < 1 || block_index > s + 2)
            throw std::invalid_argument("block index out of range");
        if (block.ground_size() != m)
            throw std::invalid_argument("block matroid must live on m elements");
        if (!block.is_simple()) throw std::invalid_argument("block matroid must be simple");
        const int shift = (block_index - 1) * m;
        for (SetMask c : block.circuits_of_size(3)) triples.push_back(c << shift);
    }
    if (spec.subsquare) {
        if (s != 1)
            throw std::invalid_argument("subsquare degeneration applies to a single square");
        const SetMask x = subsquare_point_set(squares.front(), *spec.subsquare);
        const std::vector<int> elems = elements_of(x);
        for (std::size_t a = 0; a < elems.size(); ++a)
            for (std::size_t b = a + 1; b < elems.size(); ++b)
                for (std::size_t c = b + 1; c < elems.size(); ++c)
                    triples.push_back(mask_of({elems[a], elems[b], elems[c]}));
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

    const CircuitFamily fam{n, 3, triples};
    if (!check_condition(fam, 2)) throw std::invalid_argument("not a circuit family");
    return matroid_from_top_circuits(fam, 2, n);
}

Matroid degenerate_with_blocks(const std::vector<LatinSquare>& squares,
                               const std::vector<Matroid>& blocks) {
    if (blocks.size() != squares.size() + 2)
        throw std::invalid_argument("need s+2 block matroids");
    DegenerationSpec spec;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        spec.blocks.emplace_back(static_cast<int>(i) + 1, blocks[i]);
    return build_matroid_degenerate(squares, spec);
}

Matroid degenerate_with_subsquare(const LatinSquare& k, const Subsquare& j) {
    DegenerationSpec spec;
    spec.subsquare = j;
    return build_matroid_degenerate({k}, spec);
}

SetMask subsquare_point_set(const LatinSquare& k, const Subsquare& j) {
    const int m = k.order;
    const int s = static_cast<int>(j.row_indices.size());
    if (s < 1 || j.col_indices.size() != j.row_indices.size())
        throw std::invalid_argument("malformed subsquare");
    // Re-derive the symbol set and confirm the block is Latin.
    unsigned want = 0;
    for (int c : j.col_indices) want |= 1u << (k.at(j.row_indices[0], c) - 1);
    if (std::popcount(want) != s) throw std::invalid_argument("block is not a Latin subsquare");
    for (int r : j.row_indices) {
        unsigned got = 0;
        for (int c : j.col_indices) got |= 1u << (k.at(r, c) - 1);
        if (got != want) throw std::invalid_argument("block is not a Latin subsquare");
    }
    for (int c : j.col_indices) {
        unsigned got = 0;
        for (int r : j.row_indices) got |= 1u << (k.at(r, c) - 1);
        if (got != want) throw std::invalid_argument("block is not a Latin subsquare");
    }
    SetMask x = 0;
    for (int r : j.row_indices) x |= SetMask(1) << (r - 1);
    for (int c : j.col_indices) x |= SetMask(1) << (m + c - 1);
    for (int v = 1; v <= m; ++v)
        if (want & (1u << (v - 1))) x |= SetMask(1) << (2 * m + v - 1);
    return x;
}

}  // namespace osres
