#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "osres/exterior.hpp"

namespace osres {

// A family of k-subsets of [n].
struct CircuitFamily {
    int n = 0;
    int k = 0;
    std::vector<SetMask> members;

    void validate() const;
};

// Condition (C_{l+1}): whenever two members of C unite to an (l+2)-set,
// every (l+1)-subset of the union is again a member. Exactly the condition
// under which C is the (l+1)-circuit family of an l-generic matroid.
bool check_condition(const CircuitFamily& c, int ell);

// Matroid on [n] stored by its complete circuit family (bitmask subsets).
class Matroid {
public:
    Matroid() = default;
    // `circuits` must be the complete family of minimal dependent sets;
    // rank is computed. Inclusion-minimality is validated.
    static Matroid from_circuits(int n, std::vector<SetMask> circuits);
    static Matroid uniform(int rank, int n);

    int ground_size() const { return n_; }
    int rank() const { return rank_; }
    const std::vector<SetMask>& circuits() const { return circuits_; }
    std::vector<SetMask> circuits_of_size(int k) const;

    bool is_loopless() const;
    bool is_simple() const;
    // No circuits of size <= l.
    bool is_generic(int ell) const;

    bool is_independent(SetMask s) const;
    bool is_dependent_set(SetMask s) const { return !is_independent(s); }
    int rank_of(SetMask s) const;
    SetMask closure(SetMask s) const;
    // All flats of the given rank (closure-closed sets), deduplicated.
    std::vector<SetMask> flats_of_rank(int k) const;

    // Every circuit minus its order-least element. `order` lists the ground
    // elements from least to greatest; empty means natural order.
    std::vector<SetMask> broken_circuits(const std::vector<int>& order = {}) const;
    // p-subsets of [n] containing no broken circuit. Their count is
    // dim A^p(M), independent of the order.
    std::vector<SetMask> nbc_sets(const std::vector<int>& order, int p) const;

    // Restriction to S, relabeled order-preservingly onto [|S|].
    Matroid restriction(SetMask s) const;

    // Ground-set bijection carrying circuits onto circuits, as image[i] =
    // 1-based image of element i+1; nullopt when none exists.
    std::optional<std::vector<int>> isomorphism(const Matroid& other) const;

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.n_ == b.n_ && a.rank_ == b.rank_ && a.circuits_ == b.circuits_;
    }

private:
    int n_ = 0;
    int rank_ = 0;
    std::vector<SetMask> circuits_;  // sorted ascending as masks
    std::unordered_set<SetMask> circuit_set_;

    void index_circuits();
};

// The unique l-generic matroid of rank l+1 on [n] whose (l+1)-circuits are
// exactly `c`: full circuit family c plus every (l+2)-set containing no
// member of c.
//
// Throws "not a circuit family" when condition (C_{l+1}) fails and
// "degenerate: uniform U_{l,n}" when c is all (l+1)-subsets (the rank-l
// case excluded here).
Matroid matroid_from_top_circuits(const CircuitFamily& c, int ell, int n);

// Exhaustive circuit-axiom check (antichain + elimination axiom); intended
// for tests at n <= 14. Returns an explanation on failure.
std::optional<std::string> circuit_axiom_violation(const Matroid& m);

// All k-subsets of [n] as masks, lexicographic in mask order.
std::vector<SetMask> all_subsets_of_size(int n, int k);

}  // namespace osres
