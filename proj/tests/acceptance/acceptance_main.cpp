// Acceptance suite: one pass/fail line per criterion, zero tolerance.
// Exit code = number of failed hard criteria (conjecture-scan findings are
// reported but do not fail the run).

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "theta/bijections.hpp"
#include "theta/checks.hpp"
#include "theta/constraint.hpp"
#include "theta/qseries.hpp"
#include "theta/special_counts.hpp"

using namespace theta;

namespace {

int failures = 0;

void line(int idx, bool ok, const std::string& what, const std::string& extra = "") {
    std::printf("[%s] criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                extra.empty() ? "" : ("  -- " + extra).c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::vector<std::pair<int, int>> full_grid() {
    std::vector<std::pair<int, int>> v;
    for (int R = 2; R <= 7; ++R)
        for (int S = 1; S < R; ++S) v.emplace_back(R, S);
    return v;
}

std::vector<std::pair<int, int>> map_grid() {
    std::vector<std::pair<int, int>> v;
    for (int R = 2; R <= 7; ++R)
        for (int S = 1; S < R; ++S)
            if (2 * S != R) v.emplace_back(R, S);
    return v;
}

// 1. Theorem 1.3: a_{S,R,k} >= 0 on the full grid, k in {1,2,3}, N = 300.
void criterion1() {
    std::string bad;
    for (auto [R, S] : full_grid())
        for (int k = 1; k <= 3 && bad.empty(); ++k) {
            TruncatedSeries a = a_series(S, R, k, 300);
            for (int n = 0; n <= 300; ++n)
                if (a[n] < 0) {
                    bad = "R=" + std::to_string(R) + " S=" + std::to_string(S) +
                          " k=" + std::to_string(k) + " n=" + std::to_string(n);
                    break;
                }
        }
    line(1, bad.empty(), "Theorem 1.3: a_{S,R,k}(n) >= 0, 2<=R<=7, 1<=S<R, k<=3, N=300", bad);
}

// 2. a_k + a_{k+1} = y_k exactly on the same grid, N = 300.
void criterion2() {
    std::string bad;
    for (auto [R, S] : full_grid())
        for (int k = 1; k <= 3 && bad.empty(); ++k)
            if (!(add(a_series(S, R, k, 300), a_series(S, R, k + 1, 300)) ==
                  y_series(S, R, k, 300)))
                bad = "R=" + std::to_string(R) + " S=" + std::to_string(S) +
                      " k=" + std::to_string(k);
    line(2, bad.empty(), "recurrence a_k + a_{k+1} = y_k, same grid, N=300", bad);
}

// 3. Eq. (conj 4.3-b3): series route equals the b3/rho3 enumeration route.
void criterion3() {
    const int n_max = 60;
    std::vector<unsigned long long> b3 = count_range(Constraint::regular(3), n_max);
    TruncatedSeries rho = pentagonal_series(3, n_max);
    std::string bad;
    for (int k = 1; k <= 4 && bad.empty(); ++k) {
        TruncatedSeries a = a_series(1, 3, k, n_max);
        for (int n = 0; n <= n_max; ++n) {
            Int rhs = 0;
            for (long long j = -(k - 1); j <= k; ++j) {
                const long long e = j * (3 * j - 1) / 2;
                if (n - e >= 0)
                    rhs += (((j % 2 + 2) % 2 == 0) ? Int(b3[n - e]) : -Int(b3[n - e]));
            }
            rhs -= rho[n];
            if (k % 2 == 0) rhs = -rhs;
            if (a[n] != rhs) {
                bad = "k=" + std::to_string(k) + " n=" + std::to_string(n);
                break;
            }
        }
    }
    line(3, bad.empty(), "a_{1,3,k} equals the b3/rho3 enumeration route, k<=4, n<=60", bad);
}

// 4. phi1/phi2 exhaustive injectivity, totality, disjoint images, witnesses.
void criterion4() {
    const int n_max = 50;
    std::string bad;
    for (auto [R, S] : map_grid()) {
        if (!bad.empty()) break;
        TruncatedSeries a3 = a_series(S, R, 3, n_max);
        TruncatedSeries rho = pentagonal_series(R, n_max);
        for (int n = 1; n <= n_max && bad.empty(); ++n) {
            std::ostringstream where;
            where << "R=" << R << " S=" << S << " n=" << n;
            // phi1
            std::set<PartitionPair> img1;
            const auto y1 = y_set(n, S, R, 1);
            const std::set<PartitionPair> y1s(y1.begin(), y1.end());
            for (const auto& p : y_set(n, S, R, 0)) {
                MapTrace t;
                try {
                    t = phi1(R, S, p);
                } catch (const DomainViolation&) {
                    bad = where.str() + " phi1 totality";
                    break;
                }
                if (!img1.insert(t.output).second) bad = where.str() + " phi1 injectivity";
                if (!y1s.count(t.output)) bad = where.str() + " phi1 target";
            }
            if (!bad.empty()) break;
            if (n == R || n == 2 * R) continue;
            // phi2 over B1 = Y1 \ img1
            std::set<PartitionPair> img2;
            const auto y2 = y_set(n, S, R, 2);
            const std::set<PartitionPair> y2s(y2.begin(), y2.end());
            long long b1_size = 0;
            for (const auto& p : y1) {
                if (img1.count(p)) continue;
                ++b1_size;
                MapTrace t;
                try {
                    t = phi2(R, S, p);
                } catch (const DomainViolation&) {
                    bad = where.str() + " phi2 branch-totality";
                    break;
                }
                if (!img2.insert(t.output).second) bad = where.str() + " phi2 injectivity/disjointness";
                if (!y2s.count(t.output)) bad = where.str() + " phi2 target";
            }
            if (!bad.empty()) break;
            // counting backbone: |B2(n)| - rho_R(n) = a_3(n)
            const long long b2 = static_cast<long long>(y2.size()) - static_cast<long long>(img2.size());
            if (Int(b2) - rho[n] != a3[n]) bad = where.str() + " B2 count identity";
        }
        if (!bad.empty()) break;
        // explicit residual witnesses of section 3
        const Partition d1 = Partition::staircase(R - S, R, 1);
        const Partition d2 = Partition::staircase(R - S, R, 2);
        auto contains = [](const std::vector<PartitionPair>& v, const PartitionPair& w) {
            return std::count(v.begin(), v.end(), w) == 1;
        };
        if (!contains(residual_set(1, R, S, R), {Partition({S}), d1}) ||
            !contains(residual_set(1, R, S, 2 * R), {Partition({R - S, S, S}), d1}))
            bad = "B1 witness missing at R=" + std::to_string(R) + " S=" + std::to_string(S);
        if (!contains(residual_set(2, R, S, 5 * R),
                      {Partition({R - S, R - S, S, S, S, S}), d2}) ||
            !contains(residual_set(2, R, S, 7 * R),
                      {Partition({R + S, R - S, R - S, R - S, S, S, S, S}), d2}))
            bad = "B2 witness missing at R=" + std::to_string(R) + " S=" + std::to_string(S);
    }
    line(4, bad.empty(),
         "phi1/phi2 injective, total, disjoint images, n<=50, R<=7 (S != R/2); witnesses found",
         bad);
}

// 5. h1h2 equals the left-hand construction (k<=5, N=200) and the Durfee
// enumeration (n<=40).
void criterion5() {
    std::string bad;
    for (int k = 1; k <= 5 && bad.empty(); ++k) {
        TruncatedSeries h = h1h2_series(k, 200);
        if (!(h == auxiliary_series("b3_lhs", {{"k", k}}, 200))) {
            bad = "series route k=" + std::to_string(k);
            break;
        }
        std::vector<unsigned long long> cnt(41);
#pragma omp parallel for schedule(dynamic)
        for (int n = 0; n <= 40; ++n)
            cnt[n] = special_count("b3i", n, {{"i", 1}, {"k", k}}) +
                     special_count("b3i", n, {{"i", 2}, {"k", k}});
        for (int n = 0; n <= 40; ++n)
            if (h[n] != Int(cnt[n])) {
                bad = "enumeration route k=" + std::to_string(k) + " n=" + std::to_string(n);
                break;
            }
    }
    line(5, bad.empty(), "Eq. (b3:qseries): h1+h2 identity (N=200) and B3^i enumeration (n<=40)",
         bad);
}

// 6. Theorem 1.6 with strictness, plus the remark's equality instance.
void criterion6() {
    std::string bad;
    bool remark_seen = false;
    for (int k = 1; k <= 5 && bad.empty(); ++k) {
        TruncatedSeries lhs = auxiliary_series("b6_lhs", {{"k", k}}, 300);
        if (!(lhs == auxiliary_series("b6_rhs", {{"k", k}}, 300))) {
            bad = "b6 lhs != rhs at k=" + std::to_string(k);
            break;
        }
        const long long strict_from = static_cast<long long>(k + 1) * (3 * (k + 1) - 1) / 2;
        for (int n = 0; n <= 300; ++n) {
            if (lhs[n] < 0) bad = "negative at k=" + std::to_string(k) + " n=" + std::to_string(n);
            if (n >= strict_from && lhs[n] == 0)
                bad = "strictness fails k=" + std::to_string(k) + " n=" + std::to_string(n);
        }
        for (long long n = static_cast<long long>(k) * (3 * k + 1) / 2; n < strict_from; ++n)
            if (lhs[static_cast<int>(n)] == 0) remark_seen = true;
    }
    if (bad.empty() && !remark_seen) bad = "no equality instance with n >= k(3k+1)/2 found";
    line(6, bad.empty(),
         "Theorem 1.6: inequality k<=5 n<=300, strict from (k+1)(3(k+1)-1)/2, remark instance",
         bad);
}

// 7. Theorem 5.1 series equality (m<=7, N=150) and the involution census
// (m<=5, n<=30).
void criterion7() {
    std::string bad;
    for (int m = 2; m <= 7 && bad.empty(); ++m)
        for (int s = 1; s < m; ++s) {
            TruncatedSeries lhs = mul(
                pochhammer_product({{s, 2 * m},
                                    {2 * m - s, 2 * m},
                                    {2 * m, 2 * m},
                                    {2 * m - 2 * s, 4 * m},
                                    {2 * m + 2 * s, 4 * m}},
                                   150),
                inverse(pochhammer_product({{s, m}, {m - s, m}}, 150)));
            if (!(lhs == bilateral_theta(m, s, 150))) {
                bad = "series m=" + std::to_string(m) + " s=" + std::to_string(s);
                break;
            }
        }
    for (int m = 3; m <= 5 && bad.empty(); ++m) {
        for (int s = 1; s < m && bad.empty(); ++s) {
            TruncatedSeries theta = bilateral_theta(m, s, 30);
            std::vector<long long> census(31, 0);
            std::vector<int> errs(31, 0);
#pragma omp parallel for schedule(dynamic)
            for (int n = 0; n <= 30; ++n) {
                long long acc = 0;
                for_each_tgen(n, m, s, [&](const TgenElement& el) {
                    acc += (el.sign_length() % 2 == 0) ? 1 : -1;
                    TgenTrace t = tgen_involution(m, s, el);
                    if (t.output) {
                        if ((t.output->sign_length() + el.sign_length()) % 2 == 0) errs[n] = 1;
                        TgenTrace back = tgen_involution(m, s, *t.output);
                        if (!back.output || !(*back.output == el)) errs[n] = 2;
                    }
                });
                census[n] = acc;
            }
            for (int n = 0; n <= 30; ++n)
                if (errs[n] || Int(census[n]) != theta[n])
                    bad = "census m=" + std::to_string(m) + " s=" + std::to_string(s) +
                          " n=" + std::to_string(n);
        }
    }
    line(7, bad.empty(), "Theorem 5.1: equality m<=7 N=150; signed survivor census m<=5 n<=30",
         bad);
}

// 8. KMR Theorem 38 support identity on j <= 200.
void criterion8() {
    std::string bad;
    for (int a : {1, 3}) {
        TruncatedSeries prod = auxiliary_series("kmr38", {{"a", a}}, 200);
        for (long long j = 0; j <= 200; ++j) {
            const long long v = 16 * j + a * a;
            long long rt = 0;
            while ((rt + 1) * (rt + 1) <= v) ++rt;
            const bool sq = rt * rt == v;
            if (prod[static_cast<int>(j)] != Int(sq ? 1 : 0)) {
                bad = "a=" + std::to_string(a) + " j=" + std::to_string(j);
                break;
            }
        }
    }
    line(8, bad.empty(), "KMR Thm 38: product support = {j : 16j + a^2 square}, a in {1,3}, j<=200",
         bad);
}

// 9. Theorem 6.1 by enumeration (n <= 80) and WSF1/WSF2 as series (N = 150).
void criterion9() {
    const int n_max = 80;
    std::string bad;
    std::vector<long long> ev(n_max + 1), od(n_max + 1);
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n <= n_max; ++n) {
        Constraint c = Constraint::distinct_parts();
        c.forbidden_divisor = 5;
        long long e = 0, o = 0;
        for_each_partition(n, c, [&](const std::vector<int>& parts) {
            (parts.size() % 2 == 0 ? e : o) += 1;
            return true;
        });
        ev[n] = e;
        od[n] = o;
    }
    auto family = [&](int a, int b) {
        Constraint lc = Constraint::distinct_parts();
        lc.modulus = 10;
        for (int t = 0; t < 10; ++t) lc.allowed_residues.insert(t);
        for (int t : {a, 10 - a, b, 10 - b}) lc.allowed_residues.erase(t % 10);
        Constraint mc = Constraint::distinct_parts();
        mc.modulus = 5;
        mc.allowed_residues = {0};
        auto lam = count_range(lc, n_max);
        auto mu = count_range(mc, n_max);
        std::vector<long long> out(n_max + 1, 0);
        for (int n = 0; n <= n_max; ++n)
            for (int i = 0; i <= n; ++i) out[n] += static_cast<long long>(lam[i]) * mu[n - i];
        return out;
    };
    auto c12 = family(1, 2), c34 = family(3, 4);
    for (int n = 1; n <= n_max; ++n)
        if (ev[n] + od[n] != c12[n] + c34[n - 1] || ev[n] != c12[n] || od[n] != c34[n - 1]) {
            bad = "n=" + std::to_string(n);
            break;
        }
    if (bad.empty()) {
        if (!(auxiliary_series("wsf1_lhs", {}, 150) == auxiliary_series("wsf1_rhs", {}, 150)))
            bad = "WSF1";
        else if (!(auxiliary_series("wsf2_lhs", {}, 150) == auxiliary_series("wsf2_rhs", {}, 150)))
            bad = "WSF2";
    }
    line(9, bad.empty(), "Theorem 6.1: |D5(n)| = |C12(n)|+|C34(n-1)| for n<=80; WSF1/WSF2 at N=150",
         bad);
}

// 10. T± signs with direct == rewritten (k <= 4, N = 200) and the eight
// u-set interpretations (k <= 3, n <= 50).
void criterion10() {
    std::string bad;
    for (auto [R, S] : full_grid()) {
        if (!bad.empty()) break;
        for (int k = 1; k <= 4 && bad.empty(); ++k) {
            OffsetSeries tp = t_tail(true, k, S, R, 200);
            OffsetSeries tm = t_tail(false, k, S, R, 200);
            if (!(tp == t_tail_rewritten(true, k, S, R, 200)) ||
                !(tm == t_tail_rewritten(false, k, S, R, 200))) {
                bad = "direct != rewritten R=" + std::to_string(R) + " S=" + std::to_string(S) +
                      " k=" + std::to_string(k);
                break;
            }
            for (int i = 0; i <= 200; ++i)
                if (tp.body[i] < 0 || tm.body[i] > 0) {
                    bad = "sign R=" + std::to_string(R) + " S=" + std::to_string(S) +
                          " k=" + std::to_string(k);
                    break;
                }
        }
    }
    if (bad.empty()) {
        for (long long f = 1; f <= 4 && bad.empty(); ++f)
            for (long long sg : {1LL, -1LL})
                for (long long k = 1; k <= 3; ++k) {
                    CheckReport r = run_check(
                        "merca_u", {{"family", f}, {"sign", sg}, {"k", k}, {"n_max", 50}}, 60);
                    if (r.status == CheckStatus::Fail) {
                        bad = "merca_u family=" + std::to_string(f) +
                              " sign=" + std::to_string(sg) + " k=" + std::to_string(k);
                        break;
                    }
                }
    }
    line(10, bad.empty(),
         "T+ >= 0, T- <= 0 with rewritten forms agreeing (k<=4, N=200); u-sets match (k<=3, n<=50)",
         bad);
}

// 11. Property suites.
void criterion11() {
    std::string bad;
    // ring laws + inverse on deterministic pseudo-random series
    {
        unsigned long long state = 0x243F6A8885A308D3ull;
        auto rnd = [&]() {
            state = state * 6364136223846793005ull + 1442695040888963407ull;
            return static_cast<long long>((state >> 33) % 19) - 9;
        };
        for (int rep = 0; rep < 25 && bad.empty(); ++rep) {
            const int n = 5 + rep;
            TruncatedSeries a(n), b(n), c(n);
            for (int i = 0; i <= n; ++i) {
                a[i] = rnd();
                b[i] = rnd();
                c[i] = rnd();
            }
            if (!(mul(a, b) == mul(b, a)) || !(add(a, b) == add(b, a)) ||
                !(mul(mul(a, b), c) == mul(a, mul(b, c))) ||
                !(mul(a, add(b, c)) == add(mul(a, b), mul(a, c))))
                bad = "ring laws";
            a[0] = 1;
            if (!(mul(a, inverse(a)) == TruncatedSeries::one(n))) bad = "inverse";
        }
    }
    // enumeration vs series oracle, n <= 60
    if (bad.empty()) {
        TruncatedSeries pn = inverse(pochhammer(1, 1, 60));
        auto cnt = count_range(Constraint::unrestricted(), 60);
        for (int n = 0; n <= 60; ++n)
            if (pn[n] != Int(cnt[n])) bad = "partition oracle n=" + std::to_string(n);
        auto d = count_range(Constraint::distinct_parts(), 60);
        auto o = count_range(Constraint::odd_parts(), 60);
        if (d != o) bad = "Euler distinct = odd";
    }
    // F involution, n <= 25
    if (bad.empty()) {
        for (int n = 0; n <= 25 && bad.empty(); ++n) {
            for (int i = 0; i <= n && bad.empty(); ++i) {
                for (const auto& lam : enumerate(i, Constraint::distinct_parts())) {
                    for (const auto& mu : enumerate(n - i, Constraint::unrestricted())) {
                        PartitionPair p{lam, mu};
                        if (p.first.empty() && p.second.empty()) continue;
                        MapTrace t = F(p);
                        if (!(F(t.output).output == p) ||
                            (t.output.first.length() + p.first.length()) % 2 != 1) {
                            bad = "F involution";
                            break;
                        }
                    }
                    if (!bad.empty()) break;
                }
            }
        }
    }
    line(11, bad.empty(),
         "property suites: ring laws, inverse, oracle n<=60, Euler, F involution n<=25", bad);
}

// 12. Conjecture scans at N = 200 (informational; failures are findings).
void criterion12() {
    std::string findings;
    bool scans_ran = true;
    for (auto [R, S] : full_grid())
        for (int k = 1; k <= 8; ++k) {
            TruncatedSeries a = a_series(S, R, k, 200);
            for (int n = 0; n <= 200; ++n)
                if (a[n] < 0)
                    findings += " conj43(R=" + std::to_string(R) + ",S=" + std::to_string(S) +
                                ",k=" + std::to_string(k) + ")";
        }
    for (int k = 1; k <= 6; ++k) {
        TruncatedSeries c = auxiliary_series("conj_2s", {{"k", k}}, 200);
        for (int n = 0; n <= 200; ++n)
            if (c[n] < 0) findings += " conj_2s(k=" + std::to_string(k) + ")";
    }
    // conj615 third part: stated orientation vs sign-corrected.
    bool stated_fails = false, corrected_passes = true;
    for (auto [R, S] : full_grid())
        for (int k = 1; k <= 3; ++k) {
            CheckReport asprinted =
                run_check("conj615_third", {{"R", R}, {"S", S}, {"k", k}}, 200);
            if (asprinted.status == CheckStatus::Fail) stated_fails = true;
            CheckReport fixed =
                run_check("conj615_third_neg", {{"R", R}, {"S", S}, {"k", k}}, 200);
            if (fixed.status == CheckStatus::Fail) corrected_passes = false;
        }
    std::string note = findings.empty() ? "conj43 k<=8 and conj_2s all-pass" : ("FINDINGS:" + findings);
    note += stated_fails ? "; FINDING: conj615 third part fails in its stated orientation"
                         : "; conj615 third part passes as stated";
    note += corrected_passes ? "; -(T- + T+) >= 0 verified" : "; sign-corrected form FAILS";
    line(12, scans_ran, "conjecture scans at N=200 (failures are findings, not breaks)", note);
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::printf("acceptance: %d of 12 criteria failed (%lld ms)\n", failures,
                static_cast<long long>(ms));
    return failures;
}
