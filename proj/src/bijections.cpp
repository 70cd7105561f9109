#include "theta/bijections.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "theta/constraint.hpp"

namespace theta {

namespace {

constexpr long long KInf = std::numeric_limits<long long>::max() / 4;

// lambda_j with the usual index conventions: lambda_0 (and above) reads as
// infinity, below the last part as 0.
long long part_at(const Partition& p, int j) {
    if (j <= 0) return KInf;
    return p.part(j);
}

bool gap_lt(const Partition& p, int j, long long bound) {
    return part_at(p, j) - part_at(p, j + 1) < bound;
}

bool gap_ge(const Partition& p, int j, long long bound) {
    return part_at(p, j) - part_at(p, j + 1) >= bound;
}

std::string pair_str(const PartitionPair& p) {
    std::ostringstream os;
    os << "((";
    for (int i = 0; i < p.first.length(); ++i) os << (i ? "," : "") << p.first.part(i + 1);
    os << "),(";
    for (int i = 0; i < p.second.length(); ++i) os << (i ? "," : "") << p.second.part(i + 1);
    os << "))";
    return os.str();
}

}  // namespace

MapTrace F(const PartitionPair& p) {
    if (p.first.empty() && p.second.empty()) throw DomainViolation("F: (empty,empty) excluded");
    if (!p.first.is_distinct()) throw DomainViolation("F: first partition must be distinct");
    const int l1 = p.first.part(1), m1 = p.second.part(1);
    if (l1 < m1)
        return {p,
                {multiset_union(p.first, Partition({m1})), multiset_diff(p.second, Partition({m1}))},
                "mu-to-lambda"};
    return {p,
            {multiset_diff(p.first, Partition({l1})), multiset_union(p.second, Partition({l1}))},
            "lambda-to-mu"};
}

std::vector<PartitionPair> y_set(long long n, int S, int R, int k) {
    if (S < 1 || S >= R) throw DomainViolation("y_set: need 1 <= S < R");
    const Partition delta = Partition::staircase(R - S, R, k);
    const long long rest = n - delta.size();
    std::vector<PartitionPair> out;
    if (rest < 0) return out;
    Constraint c = Constraint::pm_residue(S, R);
    c.max_multiplicity[S] = 2 * k;
    for_each_partition(rest, c, [&](const std::vector<int>& parts) {
        out.push_back({Partition(parts), delta});
        return true;
    });
    return out;
}

MapTrace phi1(int R, int S, const PartitionPair& p) {
    if (S < 1 || S >= R || 2 * S == R) throw DomainViolation("phi1: need 1 <= S < R, S != R/2");
    const Partition& lam = p.first;
    if (!p.second.empty() || lam.multiplicity(S) != 0 || lam.empty())
        throw DomainViolation("phi1: domain is Y_0(n), n >= 1");
    const Partition delta1 = Partition::staircase(R - S, R, 1);
    if (lam.multiplicity(R - S) >= 1)
        return {p, {multiset_diff(lam, Partition({R - S})), delta1}, "I"};
    const int last = lam.part(lam.length());
    if (last < std::min(R + S, 2 * R - S)) throw DomainViolation("phi1: smallest part too small");
    Partition mu = multiset_union(multiset_diff(lam, Partition({last})), Partition({last - R, S}));
    return {p, {std::move(mu), delta1}, "II"};
}

namespace {

MapTrace phi2_impl(int R, int S, const PartitionPair& p, bool repaired) {
    if (S < 1 || S >= R || 2 * S == R) throw DomainViolation("phi2: need 1 <= S < R, S != R/2");
    const Partition& lam = p.first;
    const int L = lam.length();
    const int mS = lam.multiplicity(S), mRS = lam.multiplicity(R - S);
    const Partition delta2 = Partition::staircase(R - S, R, 2);
    const bool low = 2 * S < R;

    if (mRS >= 2)
        return {p, {multiset_diff(lam, Partition({R - S, R - S, S})), delta2}, low ? "i" : "I"};
    if (mRS == 0 && mS == 1) {
        const int a = lam.part(L - 1), b = lam.part(L - 2);
        Partition mu = multiset_union(multiset_diff(lam, Partition({a, b})),
                                      Partition({a - R, b - R, S}));
        return {p, {std::move(mu), delta2}, low ? "ii" : "II"};
    }
    if (mRS == 1 && mS == 2) {
        const int c = lam.part(L - 3);
        Partition mu = multiset_union(multiset_diff(lam, Partition({c, R - S})), Partition({c - R}));
        return {p, {std::move(mu), delta2}, low ? "iii.a" : "III"};
    }
    // low: mRS == 1, mS == 1 via xi; high: mRS == 0, mS == 2 via zeta.
    Partition xi;
    std::string base;
    if (low) {
        if (!(mRS == 1 && mS == 1)) throw DomainViolation("phi2: unexpected multiplicities " + pair_str(p));
        xi = multiset_union(multiset_diff(lam, Partition({R + S, R - S})), Partition({S}));
        base = "iii.b";
    } else {
        if (!(mRS == 0 && mS == 2)) throw DomainViolation("phi2: unexpected multiplicities " + pair_str(p));
        xi = multiset_diff(lam, Partition({2 * R - S}));
        base = "IV.b";
    }
    const int lx = xi.length();
    if (lx == 2 || (lx >= 4 && gap_lt(xi, lx - 3, R) && gap_lt(xi, lx - 4, R)))
        return {p, {std::move(xi), delta2}, base + "1"};
    const int x = xi.part(lx - 2);
    if (repaired && !low && x == 2 * R + S) {
        Partition mu = multiset_union(multiset_diff(xi, Partition({x})), Partition({2 * R - S, S, S}));
        return {p, {std::move(mu), delta2}, "IV.b2r"};
    }
    if (x <= 2 * R + S) {
        Partition mu = multiset_union(multiset_diff(xi, Partition({x})), Partition({x - R, R - S, S}));
        return {p, {std::move(mu), delta2}, base + "2"};
    }
    Partition mu = multiset_union(multiset_diff(xi, Partition({x})),
                                  Partition({x - 2 * R, R - S, R - S, S, S}));
    return {p, {std::move(mu), delta2}, base + "3"};
}

}  // namespace

MapTrace phi2(int R, int S, const PartitionPair& p) { return phi2_impl(R, S, p, true); }
MapTrace phi2_unpatched(int R, int S, const PartitionPair& p) { return phi2_impl(R, S, p, false); }

std::vector<PartitionPair> residual_set(int level, int R, int S, long long n) {
    if (S < 1 || S >= R || 2 * S == R) throw DomainViolation("residual_set: need S != R/2");
    if (level == 1) {
        std::set<PartitionPair> img;
        for (const PartitionPair& p : y_set(n, S, R, 0))
            if (p.size() >= 1) img.insert(phi1(R, S, p).output);
        std::vector<PartitionPair> out;
        for (const PartitionPair& p : y_set(n, S, R, 1))
            if (!img.count(p)) out.push_back(p);
        return out;
    }
    if (level == 2) {
        if (n == 0 || n == R || n == 2 * R)
            throw DomainViolation("residual_set: level 2 needs n not in {0, R, 2R}");
        std::set<PartitionPair> img;
        for (const PartitionPair& p : residual_set(1, R, S, n)) img.insert(phi2(R, S, p).output);
        std::vector<PartitionPair> out;
        for (const PartitionPair& p : y_set(n, S, R, 2))
            if (!img.count(p)) out.push_back(p);
        return out;
    }
    throw DomainViolation("residual_set: level is 1 or 2");
}

bool image_conditions(const Partition& mu, int S, int R, const std::string& tag) {
    const int L = mu.length();
    const int mS = mu.multiplicity(S), mRS = mu.multiplicity(R - S);
    if (tag == "i" || tag == "I") return mS <= 1;
    if (tag == "ii")
        return L >= 4 && gap_ge(mu, L - 4, R) && gap_lt(mu, L - 3, R) && 2 <= mS && mS <= 4;
    if (tag == "II") {
        if (!(L >= 4 && 2 <= mS && mS <= 4 && !(mS == 2 && mRS == 1))) return false;
        const int needed = (mS == 2 && mRS == 2) ? 2 * R - 2 * S : R;
        return gap_ge(mu, L - 4, needed) && gap_lt(mu, L - 3, R);
    }
    if (tag == "iii.a") return L >= 3 && gap_ge(mu, L - 3, R) && 2 <= mS && mS <= 3;
    if (tag == "III") {
        if (!(L >= 3 && 2 <= mS && mS <= 3)) return false;
        return gap_ge(mu, L - 3, (mRS == 1) ? 2 * R - 2 * S : R);
    }
    if (tag == "iii.b1" || tag == "IV.b1") {
        if (L == 3 || mS != 2) return false;
        // IV.b1 outputs inherit m(R-S) = 0 from the Case IV domain; without
        // this derived clause the list admits some II and III outputs.
        if (tag == "IV.b1" && mRS != 0) return false;
        if (L >= 4) return gap_lt(mu, L - 4, R) && gap_lt(mu, L - 3, R);
        return true;
    }
    if (tag == "iii.b2") {
        if (!(L >= 5 && gap_lt(mu, L - 4, R))) return false;
        const bool combo = (mS == 3 && (mRS == 1 || mRS == 2)) || (mS == 4 && mRS == 1);
        return combo && gap_ge(mu, L - 5, R);
    }
    if (tag == "IV.b2") {
        // iii.b2 with the gap requirement adjusted for the (3,*) combinations
        if (!(L >= 5 && gap_lt(mu, L - 4, R))) return false;
        const bool combo = (mS == 3 && (mRS == 1 || mRS == 2)) || (mS == 4 && mRS == 1);
        const int needed = (mS == 3 && (mRS == 1 || mRS == 2)) ? 2 * R - 2 * S : R;
        return combo && gap_ge(mu, L - 5, needed);
    }
    if (tag == "IV.b2r")  // the repaired corner; characterization derived here
        return mS == 4 && mRS == 0 && mu.multiplicity(2 * R - S) >= 1;
    if (tag == "iii.b3")
        return L >= 7 && mS == 4 && 2 <= mRS && mRS <= 3 && gap_ge(mu, L - 7, 2 * R);
    if (tag == "IV.b3")  // iii.b3 with the multiplicity of R-S pinned to 2
        return L >= 7 && mS == 4 && mRS == 2 && gap_ge(mu, L - 7, 2 * R);
    throw DomainViolation("image_conditions: unknown tag " + tag);
}

// ---------------------------------------------------------------------------

void for_each_tgen(long long n, int m, int s,
                   const std::function<void(const TgenElement&)>& visit) {
    if (m < 3 || s < 1 || s >= m) throw DomainViolation("for_each_tgen: need m >= 3, 0 < s < m");
    const int M2 = 2 * m, M4 = 4 * m;
    Constraint ca = Constraint::distinct_parts();
    ca.modulus = M2;
    ca.allowed_residues = {0, s % M2, (M2 - s) % M2};
    Constraint cb = Constraint::distinct_parts();
    cb.modulus = M4;
    cb.allowed_residues = {(M2 + 2 * s) % M4, (M2 - 2 * s) % M4};
    Constraint cc;
    cc.modulus = M2;
    cc.allowed_residues = {s % M2, (M2 - s) % M2};
    Constraint cd;
    cd.modulus = M2;
    cd.allowed_residues = {(m + s) % M2, (m - s + M2) % M2};

    // per-size pools for the four components
    std::vector<std::vector<Partition>> A(n + 1), B(n + 1), C(n + 1), D(n + 1);
    for (long long i = 0; i <= n; ++i) {
        A[i] = enumerate(i, ca);
        B[i] = enumerate(i, cb);
        C[i] = enumerate(i, cc);
        D[i] = enumerate(i, cd);
    }
    for (long long na = 0; na <= n; ++na) {
        if (A[na].empty()) continue;
        for (long long nb = 0; na + nb <= n; ++nb) {
            if (B[nb].empty()) continue;
            for (long long nc = 0; na + nb + nc <= n; ++nc) {
                if (C[nc].empty()) continue;
                const long long nd = n - na - nb - nc;
                if (D[nd].empty()) continue;
                for (const auto& a : A[na])
                    for (const auto& b : B[nb])
                        for (const auto& c : C[nc])
                            for (const auto& d : D[nd]) visit({a, b, c, d});
            }
        }
    }
}

TgenTrace tgen_involution(int m, int s, const TgenElement& el) {
    if (m < 3 || s < 1 || s >= m) throw DomainViolation("tgen_involution: need m >= 3, 0 < s < m");
    const int M2 = 2 * m;
    // lam_a splits into the 0-class and the +-s class.
    std::vector<int> apm;
    for (int v : el.lam_a.parts())
        if (v % M2 != 0) apm.push_back(v);
    // Case 1: F on the (+-s mod 2m) slice of lam_a against mu_c.
    if (!apm.empty() || !el.mu_c.empty()) {
        const int a1 = apm.empty() ? 0 : apm.front();
        const int c1 = el.mu_c.part(1);
        TgenElement out = el;
        if (a1 < c1) {
            out.lam_a = multiset_union(el.lam_a, Partition({c1}));
            out.mu_c = multiset_diff(el.mu_c, Partition({c1}));
        } else {
            out.lam_a = multiset_diff(el.lam_a, Partition({a1}));
            out.mu_c = multiset_union(el.mu_c, Partition({a1}));
        }
        return {el, std::move(out), "1"};
    }
    // Case 2: largest part of lam_b vs largest repeated part of mu_d.
    int b = 0;
    {
        const auto& dp = el.mu_d.parts();
        for (size_t i = 0; i + 1 < dp.size(); ++i)
            if (dp[i] == dp[i + 1]) {
                b = dp[i];
                break;
            }
    }
    const int a = el.lam_b.part(1);
    if (a > 0 || b > 0) {
        TgenElement out = el;
        if (a < 2 * b) {
            out.lam_b = multiset_union(el.lam_b, Partition({2 * b}));
            out.mu_d = multiset_diff(el.mu_d, Partition({b, b}));
        } else {
            out.lam_b = multiset_diff(el.lam_b, Partition({a}));
            out.mu_d = multiset_union(el.mu_d, Partition({a / 2, a / 2}));
        }
        return {el, std::move(out), "2"};
    }
    return {el, std::nullopt, "3-fixed"};
}

long long tgen_signed_census(long long n, int m, int s) {
    long long acc = 0;
    for_each_tgen(n, m, s, [&](const TgenElement& el) {
        acc += (el.sign_length() % 2 == 0) ? 1 : -1;
    });
    return acc;
}

VerifyResult verify_map(MapKind kind, const std::vector<PartitionPair>& domain,
                        const std::function<PartitionPair(const PartitionPair&)>& map) {
    VerifyResult r;
    if (kind == MapKind::Injection) {
        std::map<PartitionPair, PartitionPair> seen;
        for (const auto& p : domain) {
            PartitionPair q = map(p);
            auto [it, fresh] = seen.emplace(q, p);
            if (!fresh) {
                r.ok = false;
                r.witness = pair_str(p) + " and " + pair_str(it->second) + " -> " + pair_str(q);
                return r;
            }
        }
        return r;
    }
    if (kind == MapKind::Involution) {
        for (const auto& p : domain) {
            if (map(map(p)) != p) {
                r.ok = false;
                r.witness = pair_str(p);
                return r;
            }
        }
        return r;
    }
    for (const auto& p : domain) {  // SignReversing
        PartitionPair q = map(p);
        if ((p.first.length() + q.first.length()) % 2 == 0) {
            r.ok = false;
            r.witness = pair_str(p) + " -> " + pair_str(q);
            return r;
        }
    }
    return r;
}

}  // namespace theta
