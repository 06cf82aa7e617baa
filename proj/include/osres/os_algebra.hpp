#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "osres/exterior.hpp"
#include "osres/matrix.hpp"
#include "osres/matroid.hpp"

namespace osres {

// The Orlik-Solomon algebra A(M) = E / <dM> in nbc coordinates.
//
// The nbc monomials (independent sets containing no broken circuit) form a
// basis of A(M). Construction straightens every independent set against the
// circuit relations d(e_C) = 0 once, bottom-up; afterwards the algebra is
// read-only and safe for concurrent queries.
//
// Straightening terminates: rewriting a set S containing the broken circuit
// of C trades one element of S for the order-least element of C, which
// strictly decreases S in the order-position lexicographic comparison.
template <class F>
class OSAlgebra {
public:
    explicit OSAlgebra(Matroid m, std::vector<int> order = {})
        : matroid_(std::move(m)), order_(std::move(order)) {
        if (!matroid_.is_loopless()) throw std::invalid_argument("matroid has loops");
        build_position_table();
        build_broken_index();
        build_basis_and_cache();
    }

    const Matroid& matroid() const { return matroid_; }
    int generators() const { return matroid_.ground_size(); }
    int rank() const { return matroid_.rank(); }

    int dimension(int p) const {
        if (p < 0 || p > rank()) return 0;
        return static_cast<int>(nbc_[p].size());
    }
    const std::vector<SetMask>& basis(int p) const { return nbc_[p]; }

    // The unique nbc-supported representative of x + <dM>.
    ExteriorElement<F> reduce(const ExteriorElement<F>& x) const {
        if (x.generators() != generators())
            throw std::invalid_argument("element lives on a different ground set");
        ExteriorElement<F> out(generators());
        for (const auto& [s, c] : x.terms()) {
            const auto it = cache_.find(s);
            if (it == cache_.end()) continue;  // dependent monomial: reduces to 0
            for (const auto& [t, w] : it->second) out.add_term(t, c * w);
        }
        return out;
    }

    // Coordinates of the degree-p component of a reduced element.
    std::vector<F> coordinates(const ExteriorElement<F>& reduced, int p) const {
        std::vector<F> v(dimension(p), F(0));
        for (const auto& [s, c] : reduced.terms()) {
            if (set_size(s) != p) continue;
            v.at(index_[p].at(s)) = c;
        }
        return v;
    }

    ExteriorElement<F> from_coordinates(int p, const std::vector<F>& v) const {
        ExteriorElement<F> out(generators());
        for (std::size_t i = 0; i < v.size(); ++i) out.add_term(nbc_[p][i], v[i]);
        return out;
    }

    // Matrix of left multiplication by e_lambda : A^p -> A^{p+1} in nbc
    // coordinates.
    Matrix<F> multiplication_matrix(const std::vector<F>& lambda, int p) const {
        if (static_cast<int>(lambda.size()) != generators())
            throw std::invalid_argument("weight length mismatch");
        Matrix<F> out(dimension(p + 1), dimension(p));
        if (p < 0 || p > rank()) return out;
        for (std::size_t col = 0; col < nbc_[p].size(); ++col) {
            const SetMask u = nbc_[p][col];
            for (int i = 0; i < generators(); ++i) {
                using osres::is_zero;
                if (is_zero(lambda[i])) continue;
                const SetMask bit = SetMask(1) << i;
                if (u & bit) continue;
                const auto it = cache_.find(u | bit);
                if (it == cache_.end()) continue;  // dependent: contributes 0
                // e_i ^ e_u = sign * e_{u+i}
                const int sign = merge_sign(bit, u);
                const F coeff = sign > 0 ? lambda[i] : -lambda[i];
                for (const auto& [t, w] : it->second) {
                    const std::size_t row = index_[p + 1].at(t);
                    out(row, col) += coeff * w;
                }
            }
        }
        return out;
    }

    // Matrix of the induced boundary d_M : A^{p+1} -> A^p in nbc coordinates.
    Matrix<F> boundary_matrix(int p) const {
        Matrix<F> out(dimension(p), dimension(p + 1));
        if (p < 0 || p + 1 > rank()) return out;
        for (std::size_t col = 0; col < nbc_[p + 1].size(); ++col) {
            const SetMask u = nbc_[p + 1][col];
            SetMask rest = u;
            int k = 0;
            while (rest) {
                const int b = std::countr_zero(rest);
                rest &= rest - 1;
                const SetMask sub = u & ~(SetMask(1) << b);
                const auto it = cache_.find(sub);
                if (it != cache_.end())
                    for (const auto& [t, w] : it->second) {
                        const std::size_t row = index_[p].at(t);
                        out(row, col) += (k & 1) ? -w : w;
                    }
                ++k;
            }
        }
        return out;
    }

private:
    using Expansion = std::vector<std::pair<SetMask, F>>;

    Matroid matroid_;
    std::vector<int> order_;  // empty = natural
    std::vector<int> pos_;    // element -> 1-based position in the nbc order
    std::unordered_map<SetMask, std::pair<SetMask, int>> broken_;  // broken -> (circuit, least)
    std::vector<std::vector<SetMask>> nbc_;                        // per degree, ascending masks
    std::vector<std::unordered_map<SetMask, std::size_t>> index_;  // per degree
    std::unordered_map<SetMask, Expansion> cache_;  // independent set -> nbc expansion
    std::vector<int> broken_sizes_;                 // distinct broken-circuit sizes

    void build_position_table() {
        const int n = generators();
        pos_.assign(n + 1, 0);
        if (order_.empty()) {
            for (int e = 1; e <= n; ++e) pos_[e] = e;
            return;
        }
        if (static_cast<int>(order_.size()) != n)
            throw std::invalid_argument("order must be a permutation of the ground set");
        std::vector<bool> seen(n + 1, false);
        for (int i = 0; i < n; ++i) {
            const int e = order_[i];
            if (e < 1 || e > n || seen[e])
                throw std::invalid_argument("order must be a permutation of the ground set");
            seen[e] = true;
            pos_[e] = i + 1;
        }
    }

    void build_broken_index() {
        std::vector<int> sizes;
        for (SetMask c : matroid_.circuits()) {
            int least = -1;
            for (int e : elements_of(c))
                if (least == -1 || pos_[e] < pos_[least]) least = e;
            const SetMask b = c & ~(SetMask(1) << (least - 1));
            broken_.emplace(b, std::make_pair(c, least));  // first circuit wins
            sizes.push_back(set_size(b));
        }
        std::sort(sizes.begin(), sizes.end());
        sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
        broken_sizes_ = std::move(sizes);
    }

    // Position mask: strictly decreases along straightening substitutions.
    SetMask position_mask(SetMask s) const {
        if (order_.empty()) return s;
        SetMask out = 0;
        for (int e : elements_of(s)) out |= SetMask(1) << (pos_[e] - 1);
        return out;
    }

    // Smallest-position broken circuit contained in s, if any.
    const std::pair<SetMask, int>* find_broken_inside(SetMask s) const {
        const int sz = set_size(s);
        for (int k : broken_sizes_) {
            if (k > sz) break;
            for (SetMask sub : subsets_of(s, k)) {
                const auto it = broken_.find(sub);
                if (it != broken_.end()) return &it->second;
            }
        }
        return nullptr;
    }

    static std::vector<SetMask> subsets_of(SetMask s, int k) {
        const std::vector<int> elems = elements_of(s);
        std::vector<SetMask> out;
        if (k < 0 || k > static_cast<int>(elems.size())) return out;
        std::vector<int> pick(k);
        auto rec = [&](auto&& self, int start, int depth, SetMask acc) -> void {
            if (depth == k) {
                out.push_back(acc);
                return;
            }
            for (int i = start; i <= static_cast<int>(elems.size()) - (k - depth); ++i)
                self(self, i + 1, depth + 1, acc | (SetMask(1) << (elems[i] - 1)));
        };
        rec(rec, 0, 0, 0);
        return out;
    }

    void build_basis_and_cache() {
        const int n = generators();
        const int r = rank();
        nbc_.assign(r + 1, {});
        index_.assign(r + 1, {});

        // Independent sets of each size, ordered so that straightening
        // dependencies (strictly smaller position masks) come first.
        std::vector<std::pair<SetMask, SetMask>> todo;  // (position mask, set)
        for (int p = 0; p <= r; ++p)
            for (SetMask s : all_subsets_of_size(n, p))
                if (matroid_.is_independent(s)) todo.emplace_back(position_mask(s), s);
        std::sort(todo.begin(), todo.end());

        for (const auto& [pm, s] : todo) {
            (void)pm;
            const auto* hit = find_broken_inside(s);
            if (hit == nullptr) {
                // nbc monomial: reduces to itself.
                const int p = set_size(s);
                index_[p].emplace(s, nbc_[p].size());
                nbc_[p].push_back(s);
                cache_.emplace(s, Expansion{{s, F(1)}});
                continue;
            }
            const auto [circuit, least] = *hit;
            const SetMask bcirc = circuit & ~(SetMask(1) << (least - 1));
            const SetMask rest = s & ~bcirc;
            // e_s = sign(rest, bcirc) e_rest ^ e_bcirc; substitute e_bcirc
            // from d(e_circuit) = 0.
            const int outer_sign = merge_sign(rest, bcirc);
            const std::vector<int> celems = elements_of(circuit);
            int least_idx = 0;
            for (std::size_t k = 0; k < celems.size(); ++k)
                if (celems[k] == least) least_idx = static_cast<int>(k);

            std::unordered_map<SetMask, F> acc;
            for (std::size_t k = 0; k < celems.size(); ++k) {
                if (static_cast<int>(k) == least_idx) continue;
                // e_bcirc = sum_{k != least_idx} (-1)^{k+least_idx+1} e_{C \ c_k}
                const SetMask term = circuit & ~(SetMask(1) << (celems[k] - 1));
                if (rest & term) continue;  // wedge vanishes
                int sign = ((static_cast<int>(k) + least_idx + 1) & 1) ? -1 : 1;
                sign *= outer_sign * merge_sign(rest, term);
                const SetMask target = rest | term;
                const auto it = cache_.find(target);
                if (it == cache_.end()) continue;  // dependent monomial
                for (const auto& [t, w] : it->second) {
                    F& slot = acc[t];
                    slot += sign > 0 ? w : -w;
                }
            }
            Expansion exp;
            exp.reserve(acc.size());
            for (auto& [t, w] : acc) {
                using osres::is_zero;
                if (!is_zero(w)) exp.emplace_back(t, std::move(w));
            }
            std::sort(exp.begin(), exp.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            cache_.emplace(s, std::move(exp));
        }
    }
};

using OSAlgebraQ = OSAlgebra<Rational>;

}  // namespace osres
