#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "theta/partition.hpp"

namespace theta {

/// Declarative partition family; clauses compose conjunctively.
struct Constraint {
    std::optional<int> modulus;                 // with allowed_residues
    std::set<int> allowed_residues;             // residues mod modulus
    bool distinct = false;
    std::map<int, int> max_multiplicity;        // value -> cap; absent = unbounded
    std::optional<int> min_part;
    std::optional<int> max_part;
    std::vector<int> required_parts;            // multiset that must be contained
    std::optional<int> forbidden_divisor;       // l-regular: no part divisible by l

    bool value_allowed(int v) const {
        if (modulus && !allowed_residues.count(v % *modulus)) return false;
        if (min_part && v < *min_part) return false;
        if (max_part && v > *max_part) return false;
        if (forbidden_divisor && v % *forbidden_divisor == 0) return false;
        return true;
    }

    /// Multiplicity cap for a value, folding in the distinct flag.
    std::optional<int> cap(int v) const {
        std::optional<int> c;
        if (distinct) c = 1;
        auto it = max_multiplicity.find(v);
        if (it != max_multiplicity.end()) c = c ? std::min(*c, it->second) : it->second;
        return c;
    }

    bool matches(const Partition& p) const;

    // Common families.
    static Constraint unrestricted() { return {}; }
    static Constraint distinct_parts() {
        Constraint c;
        c.distinct = true;
        return c;
    }
    static Constraint odd_parts() {
        Constraint c;
        c.modulus = 2;
        c.allowed_residues = {1};
        return c;
    }
    static Constraint regular(int ell) {
        Constraint c;
        c.forbidden_divisor = ell;
        return c;
    }
    /// P_{+-S,R}: parts congruent to +-S mod R.
    static Constraint pm_residue(int S, int R) {
        Constraint c;
        c.modulus = R;
        c.allowed_residues = {S % R, (R - S % R) % R};
        return c;
    }
};

/// Visit every partition of n satisfying c, in descending lexicographic
/// order, as a const std::vector<int>& of descending parts. Return false
/// from the visitor to stop early.
void for_each_partition(long long n, const Constraint& c,
                        const std::function<bool(const std::vector<int>&)>& visit);

std::vector<Partition> enumerate(long long n, const Constraint& c);
unsigned long long count(long long n, const Constraint& c);

namespace kernels {
/// counts[i] = count(i, c) for 0 <= i <= n_max; serial reference and
/// OpenMP-parallel (over n) versions produce identical results.
std::vector<unsigned long long> count_range_serial(const Constraint& c, int n_max);
std::vector<unsigned long long> count_range_parallel(const Constraint& c, int n_max);
}  // namespace kernels

/// Dispatches to the parallel kernel for large scans.
std::vector<unsigned long long> count_range(const Constraint& c, int n_max);

}  // namespace theta
