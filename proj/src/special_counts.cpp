#include "theta/special_counts.hpp"

#include <algorithm>

namespace theta {

namespace {

long long need(const std::map<std::string, long long>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw ParameterDomain("special_count: missing parameter '" + key + "'");
    return it->second;
}

unsigned long long count_mk(long long n, int k) {
    unsigned long long out = 0;
    for_each_partition(n, Constraint::unrestricted(), [&](const std::vector<int>& parts) {
        // mex = k means 1..k-1 all present, k absent.
        bool has[64] = {};
        for (int v : parts)
            if (v < 64) has[v] = true;
        int mex = 1;
        while (mex < 64 && has[mex]) ++mex;
        if (mex == k) {
            long long gt = 0, lt = 0;
            for (int v : parts) (v > k ? gt : lt) += 1;  // v == k cannot occur
            if (gt > lt) ++out;
        }
        return true;
    });
    return out;
}

unsigned long long count_xz(long long n, int k) {
    unsigned long long out = 0;
    for_each_partition(n, Constraint::unrestricted(), [&](const std::vector<int>& parts) {
        bool has[64] = {};
        for (int v : parts)
            if (v < 64) has[v] = true;
        for (int v = 1; v <= k; ++v)
            if (!has[v]) return true;
        // smallest part greater than k (parts are descending)
        int smallest_over = 0;
        for (int v : parts)
            if (v > k) smallest_over = v;
        if (smallest_over == 0) return true;
        int m = 0;
        for (int v : parts) m += (v == smallest_over);
        if (m >= k + 1) ++out;
        return true;
    });
    return out;
}

unsigned long long count_family(long long n, const Constraint& c,
                                const std::function<bool(const Partition&)>& pred) {
    unsigned long long out = 0;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        if (pred(Partition(parts))) ++out;
        return true;
    });
    return out;
}

/// Distinct partitions of n avoiding residues +-a, +-b mod 10.
unsigned long long count_cab_lambda(long long n, int a, int b) {
    Constraint c = Constraint::distinct_parts();
    c.modulus = 10;
    for (int r = 0; r < 10; ++r) c.allowed_residues.insert(r);
    for (int r : {a % 10, (10 - a % 10) % 10, b % 10, (10 - b % 10) % 10})
        c.allowed_residues.erase(r);
    return count(n, c);
}

unsigned long long count_cab_mu(long long n) {
    Constraint c = Constraint::distinct_parts();
    c.modulus = 5;
    c.allowed_residues = {0};
    return count(n, c);
}

/// # partitions of n with parts == +-fam mod 5 and multiplicity of `val`
/// exactly `exact` (via cap(e) - cap(e-1)).
unsigned long long count_pm5_exact(long long n, int fam, int val, int exact) {
    if (n < 0) return 0;
    Constraint c = Constraint::pm_residue(fam, 5);
    c.max_multiplicity[val] = exact;
    unsigned long long hi = count(n, c);
    if (exact == 0) return hi;
    c.max_multiplicity[val] = exact - 1;
    return hi - count(n, c);
}

unsigned long long count_pm5_cap(long long n, int fam, int val, long long cap) {
    if (n < 0 || cap < 0) return 0;
    Constraint c = Constraint::pm_residue(fam, 5);
    c.max_multiplicity[val] = static_cast<int>(cap);
    return count(n, c);
}

Partition stair_diff(int s, int hi, int lo) {
    return multiset_diff(Partition::staircase(s, 5, hi), Partition::staircase(s, 5, lo));
}

/// One u_{xi,S} family: sum over j >= k of constrained counts against the
/// fixed companion partitions.
unsigned long long count_u_set(long long n, int family, int sign, int k) {
    unsigned long long out = 0;
    for (long long j = k;; ++j) {
        bool alive = false;
        auto add_block = [&](const Partition& comp, int fam, int val, long long cap) {
            const long long rest = n - comp.size();
            if (rest >= 0) {
                alive = true;
                out += count_pm5_cap(rest, fam, val, cap);
            }
        };
        auto add_exact = [&](const Partition& comp, int fam, int val, int exact) {
            const long long rest = n - comp.size();
            if (rest >= 0) {
                alive = true;
                out += count_pm5_exact(rest, fam, val, exact);
            }
        };
        switch (family * sign) {
            case +1: {  // u_{g,1}^+
                std::vector<int> v(static_cast<size_t>(j), static_cast<int>(5 * j + 1));
                add_block(multiset_union(Partition(v), Partition::staircase(1, 5, j)), 1, 1, 6 * j);
                break;
            }
            case -1: {  // u_{g,1}^-
                std::vector<int> v(static_cast<size_t>(j - 1), static_cast<int>(5 * j + 1));
                Partition comp = multiset_union(Partition(v), Partition::staircase(1, 5, j));
                comp = multiset_union(comp, Partition({4}));
                add_block(comp, 1, 1, 6 * j - 2);
                break;
            }
            case +2: {  // u_{h,2}^+
                std::vector<int> v(static_cast<size_t>(j), static_cast<int>(5 * (j - 1) + 2));
                add_block(multiset_union(Partition(v), Partition::staircase(2, 5, j)), 2, 2, 6 * j);
                break;
            }
            case -2: {  // u_{h,2}^-
                std::vector<int> v(static_cast<size_t>(j - 1), static_cast<int>(5 * (j - 1) + 2));
                Partition comp = multiset_union(Partition(v), Partition::staircase(2, 5, j));
                comp = multiset_union(comp, Partition({3}));
                add_block(comp, 2, 2, 6 * j - 2);
                break;
            }
            case +3:  // u_{g,2}^+
                add_block(stair_diff(4, 2 * j - 1, j - 1), 1, 1, 12 * j + 1);
                break;
            case -3: {  // u_{g,2}^-
                Partition comp = multiset_union(stair_diff(4, 2 * j - 2, j - 1),
                                                Partition({static_cast<int>(5 * (j - 1) + 1)}));
                add_block(comp, 1, 1, 12 * j - 3);
                break;
            }
            case +4: {  // u_{h,1}^+: two summands; second has m(3) = 1 exactly
                add_block(stair_diff(2, 2 * j, j), 2, 2, 3 * j - 2);
                Partition comp2 = multiset_union(stair_diff(3, 2 * j + 1, j + 2),
                                                 Partition({static_cast<int>(5 * j + 3)}));
                add_exact(comp2, 2, 3, 1);
                break;
            }
            case -4: {  // u_{h,1}^-
                Partition comp1 = multiset_union(stair_diff(2, 2 * j - 1, j),
                                                 Partition({static_cast<int>(5 * (j - 1) + 3)}));
                add_block(comp1, 2, 2, 3 * j - 3);
                Partition comp2 = multiset_union(stair_diff(3, 2 * j, j + 1),
                                                 Partition({static_cast<int>(5 * (j - 1) + 2)}));
                add_exact(comp2, 2, 3, 1);
                break;
            }
            default:
                throw UnknownStatistic("u_set: family in 1..4, sign +-1");
        }
        if (!alive) break;
    }
    return out;
}

}  // namespace

bool b3i_member(const Partition& lambda, int k, int i) {
    const Partition mu = lambda.slice(i, 3);
    for (int t = 0; t <= k; ++t)
        if (mu.multiplicity(3 * t + i) == 0) return false;
    const int a = mu.durfee_height(k, 3);
    const std::vector<int> rows = mu.modular_rows(3);
    const int below = (a < static_cast<int>(rows.size())) ? rows[a] : 0;
    return below < a + k + 2;
}

unsigned long long special_count(const std::string& name, long long n,
                                 const std::map<std::string, long long>& params) {
    if (n < 0) return 0;
    if (name == "mk") return count_mk(n, static_cast<int>(need(params, "k")));
    if (name == "xz") return count_xz(n, static_cast<int>(need(params, "k")));
    if (name == "b3i") {
        const int i = static_cast<int>(need(params, "i")), k = static_cast<int>(need(params, "k"));
        if (i != 1 && i != 2) throw ParameterDomain("b3i: i in {1,2}");
        return count_family(n, Constraint::regular(3),
                            [&](const Partition& p) { return b3i_member(p, k, i); });
    }
    if (name == "b3i_star") {
        const int i = static_cast<int>(need(params, "i")), k = static_cast<int>(need(params, "k"));
        return count_family(n, Constraint::unrestricted(), [&](const Partition& p) {
            const Partition z = p.slice(0, 3);
            if (!z.is_distinct()) return false;
            return b3i_member(p.slice_pm(1, 3), k, i);
        });
    }
    if (name == "d5" || name == "d5_even" || name == "d5_odd") {
        Constraint c = Constraint::distinct_parts();
        c.forbidden_divisor = 5;
        if (name == "d5") return count(n, c);
        const int parity = (name == "d5_even") ? 0 : 1;
        return count_family(n, c, [&](const Partition& p) { return p.length() % 2 == parity; });
    }
    if (name == "c_ab") {
        const int a = static_cast<int>(need(params, "a")), b = static_cast<int>(need(params, "b"));
        if (a < 1 || a > 9 || b < 1 || b > 9 || (a - b) % 10 == 0 || (a + b) % 10 == 0)
            throw ParameterDomain("c_ab: need 0 < a,b < 10 with a != +-b mod 10");
        unsigned long long out = 0;
        for (long long i = 0; i <= n; ++i) out += count_cab_lambda(i, a, b) * count_cab_mu(n - i);
        return out;
    }
    if (name == "qbar") {
        const int A = static_cast<int>(need(params, "A")), a = static_cast<int>(need(params, "a"));
        return count_family(n, Constraint::odd_parts(), [&](const Partition& p) {
            return p.mex_mod(A, a) % (2 * A) == (A + a) % (2 * A);
        });
    }
    if (name == "mex_class") {
        const int A = static_cast<int>(need(params, "A")), a = static_cast<int>(need(params, "a"));
        const long long m = need(params, "m");
        return count_family(n, Constraint::odd_parts(),
                            [&](const Partition& p) { return p.mex_mod(A, a) == m; });
    }
    if (name == "p_pm") {
        const int S = static_cast<int>(need(params, "S")), R = static_cast<int>(need(params, "R"));
        return count(n, Constraint::pm_residue(S, R));
    }
    if (name == "u_set")
        return count_u_set(n, static_cast<int>(need(params, "family")),
                           static_cast<int>(need(params, "sign")),
                           static_cast<int>(need(params, "k")));
    throw UnknownStatistic("special_count: unknown name '" + name + "'");
}

}  // namespace theta
