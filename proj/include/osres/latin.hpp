#pragma once

#include <array>
#include <optional>
#include <vector>

#include "osres/matroid.hpp"

namespace osres {

// l-dimensional array of order m over symbols [m]; fixing any l-1
// coordinates, the remaining line is a permutation of [m]. Cells row-major,
// last coordinate fastest.
struct LatinHypercube {
    int dim = 0;
    int order = 0;
    std::vector<int> cells;

    int at(const std::vector<int>& idx) const;  // 1-based coordinates
    void validate() const;                      // throws when not Latin
};

// The dim = 2 case. Rows, columns and symbols are positional: in the
// associated triple system T(K) they are labeled [m], [m]+m and [m]+2m.
struct LatinSquare {
    int order = 0;
    std::vector<int> cells;  // row-major

    int at(int i, int j) const { return cells[(i - 1) * order + (j - 1)]; }
    int& at(int i, int j) { return cells[(i - 1) * order + (j - 1)]; }
    void validate() const;
    LatinHypercube as_hypercube() const { return LatinHypercube{2, order, cells}; }
    static LatinSquare from_hypercube(const LatinHypercube& h);

    std::vector<int> row_labels() const;     // 1..m
    std::vector<int> col_labels() const;     // m+1..2m
    std::vector<int> symbol_labels() const;  // 2m+1..3m

    friend bool operator==(const LatinSquare& a, const LatinSquare& b) {
        return a.order == b.order && a.cells == b.cells;
    }
    friend bool operator<(const LatinSquare& a, const LatinSquare& b) {
        return a.cells < b.cells;
    }
};

// An s x s block of K (chosen rows x chosen columns) that is itself a Latin
// square on s symbols.
struct Subsquare {
    std::vector<int> row_indices;  // 1-based, ascending
    std::vector<int> col_indices;
    std::vector<int> symbols;  // the s symbols appearing in the block
};

// sigma-conjugate: permute the three coordinate roles of the triple system
// T(K). sigma is a permutation of {1,2,3} (row, column, symbol).
LatinSquare conjugate(const LatinSquare& k, const std::array<int, 3>& sigma);

bool are_isotopic(const LatinSquare& a, const LatinSquare& b);

// Lexicographic minimum over the whole main-class orbit (all 6 conjugates,
// all isotopies), always a reduced square. Equal canonicals <=> same main
// class.
LatinSquare main_class_canonical(const LatinSquare& k);

// All reduced Latin squares of order m (first row and first column in
// natural order), by backtracking.
std::vector<LatinSquare> reduced_squares(int m);

// Count of main classes for 1 <= m <= 6; throws "unsupported order" above.
int count_main_classes(int m);
// One canonical representative per main class, sorted.
std::vector<LatinSquare> main_class_representatives(int m);

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);
// K_t with k_{i,j} = (i-1) + t*(j-1) mod p for t = 1..s; pairwise
// orthogonal. Requires p prime (prime powers are out of scope).
std::vector<LatinSquare> mols_prime(int p, int s);

// All Latin s-subsquares of K.
std::vector<Subsquare> find_subsquares(const LatinSquare& k, int s);

// The family of (l+1)-subsets of [(l+1)m] recording the cells of K:
// (i_1, m+i_2, ..., (l-1)m+i_l, lm+k(i_1,...,i_l)).
CircuitFamily circuit_family(const LatinHypercube& k);

// The unique l-generic rank-(l+1) matroid M[K] whose (l+1)-circuits are
// exactly circuit_family(k). Requires m >= 2, l >= 2.
Matroid build_matroid(const LatinHypercube& k);

// Rank-3 matroid M[K_1,...,K_s] on (s+2)m elements from mutually orthogonal
// squares: 3-circuits are all triples inside the point sets
// X_{i,j} = {i, m+j, shifted symbols}. m = 1 yields U_{2,s+2}.
Matroid build_matroid_mols(const std::vector<LatinSquare>& squares);

// Degenerations: extra 3-circuits from block matroids (each simple, on m
// elements, placed on block I_i) and/or from a subsquare J (all triples in
// X(J)). Re-verifies condition (C_3).
struct DegenerationSpec {
    // block index (1-based, 1..s+2) -> simple matroid on [m]
    std::vector<std::pair<int, Matroid>> blocks;
    std::optional<Subsquare> subsquare;  // only valid with a single square
};
Matroid build_matroid_degenerate(const std::vector<LatinSquare>& squares,
                                 const DegenerationSpec& spec);
Matroid degenerate_with_blocks(const std::vector<LatinSquare>& squares,
                               const std::vector<Matroid>& blocks);
Matroid degenerate_with_subsquare(const LatinSquare& k, const Subsquare& j);

// X(J) = I_1(J) u I_2(J) u I_3(J) as elements of [3m].
SetMask subsquare_point_set(const LatinSquare& k, const Subsquare& j);

}  // namespace osres
