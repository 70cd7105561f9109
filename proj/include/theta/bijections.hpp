#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "theta/partition.hpp"

namespace theta {

/// Ordered pair of partitions; `first` carries the sign (parity of its
/// length) in all sign-reversing arguments.
struct PartitionPair {
    Partition first;
    Partition second;

    long long size() const { return first.size() + second.size(); }
    auto operator<=>(const PartitionPair& o) const = default;
};

struct MapTrace {
    PartitionPair input;
    PartitionPair output;
    std::string case_tag;
};

/// The sign-reversing involution F on QP(n) \ {(empty,empty)}: move the larger
/// of the two top parts across. Requires `first` distinct.
MapTrace F(const PartitionPair& p);

/// Y_k(n): pairs (lambda, delta_{R-S,R,k}) with lambda in P_{+-S,R} and
/// m_lambda(S) <= 2k. Enumerated in descending lexicographic lambda order.
std::vector<PartitionPair> y_set(long long n, int S, int R, int k);

/// phi1 : Y_0(n) -> Y_1(n), n >= 1 (Cases I / II).
MapTrace phi1(int R, int S, const PartitionPair& p);

/// phi2 : B_1(n) -> Y_2(n), n not in {0, R, 2R}. Case tags: for S < R/2
/// "i", "ii", "iii.a", "iii.b1", "iii.b2", "iii.b3"; for S > R/2 "I", "II",
/// "III", "IV.b1", "IV.b2", "IV.b2r", "IV.b3". The IV.b2r corner
/// (zeta_{l-2} = 2R+S) replaces that part by (2R-S, S, S): the plain b2 move
/// would collide with Case II images there.
MapTrace phi2(int R, int S, const PartitionPair& p);

/// phi2 without the IV.b2r corner split; its Case IV.b2 images overlap Case
/// II for S > R/2. Kept so the collision stays reproducible.
MapTrace phi2_unpatched(int R, int S, const PartitionPair& p);

/// residual level 1: Y_1(n) minus phi1(Y_0(n)); level 2: Y_2(n) minus
/// phi2(B_1(n)). Computed by enumerating the full sets and removing images.
std::vector<PartitionPair> residual_set(int level, int R, int S, long long n);

/// The stated per-branch image characterization. The iii.b2 / IV.b2 gap
/// condition on mu_{l-5}-mu_{l-4} does not hold for every actual output;
/// conformance is reported, not assumed.
bool image_conditions(const Partition& mu, int S, int R, const std::string& tag);

// ---------------------------------------------------------------------------
// Theorem 5.1 involution. A(n) elements are component tuples; the merged
// multiset reading is ambiguous for s = m/2 and s = 2m/3, the tuple is what
// the generating-function product counts.
struct TgenElement {
    Partition lam_a;  // distinct, parts == 0 or +-s (mod 2m)
    Partition lam_b;  // distinct, parts == 2m+-2s (mod 4m)
    Partition mu_c;   // parts == +-s (mod 2m)
    Partition mu_d;   // parts == +-(m+s) (mod 2m)

    long long size() const { return lam_a.size() + lam_b.size() + mu_c.size() + mu_d.size(); }
    int sign_length() const { return lam_a.length() + lam_b.length(); }
    PartitionPair merged() const {
        return {multiset_union(lam_a, lam_b), multiset_union(mu_c, mu_d)};
    }
    auto operator<=>(const TgenElement& o) const = default;
};

struct TgenTrace {
    TgenElement input;
    std::optional<TgenElement> output;  // absent for Case-3 fixed candidates
    std::string case_tag;               // "1", "2", "3-fixed"
};

/// Visit all of A(n) for parameters (m >= 3, 0 < s < m).
void for_each_tgen(long long n, int m, int s, const std::function<void(const TgenElement&)>& visit);

/// Cases 1-2 move; Case 3 returns a fixed candidate (resolved by counting).
TgenTrace tgen_involution(int m, int s, const TgenElement& el);

/// Signed census over A(n): sum of (-1)^{l(lam_a)+l(lam_b)}.
long long tgen_signed_census(long long n, int m, int s);

// ---------------------------------------------------------------------------
// Generic map verification (artifact plumbing).
enum class MapKind { Injection, Involution, SignReversing };

struct VerifyResult {
    bool ok = true;
    std::string witness;  // first counterexample, lexicographically smallest domain element
};

VerifyResult verify_map(MapKind kind, const std::vector<PartitionPair>& domain,
                        const std::function<PartitionPair(const PartitionPair&)>& map);

}  // namespace theta
