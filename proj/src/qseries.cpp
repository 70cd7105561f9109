#include "theta/qseries.hpp"

#include <cmath>
#include <functional>

namespace theta {

TruncatedSeries pochhammer_product(const std::vector<SignedFactorSpec>& factors, int order) {
    TruncatedSeries out = TruncatedSeries::one(order);
    for (const auto& f : factors) {
        if (f.base < 1 || f.step < 1) throw ParameterDomain("pochhammer: base and step must be >= 1");
        for (long long j = 0;; ++j) {
            if (f.count && j >= *f.count) break;
            const long long e = f.base + j * static_cast<long long>(f.step);
            if (e > order) break;
            out.mul_binomial(static_cast<int>(e), f.sign);
        }
    }
    return out;
}

TruncatedSeries pochhammer(int base, int step, int order, int sign, std::optional<int> count) {
    return pochhammer_product({{base, step, sign, count}}, order);
}

TruncatedSeries pentagonal_series(int R, int order) {
    if (R < 1) throw ParameterDomain("pentagonal_series: R >= 1");
    TruncatedSeries out(order);
    for (long long i = 0;; ++i) {
        const long long ep = R * i * (3 * i - 1) / 2;   // i >= 0
        const long long em = R * i * (3 * i + 1) / 2;   // -i
        if (ep > order && em > order) break;
        const Int sgn = (i % 2 == 0) ? 1 : -1;
        if (ep <= order) out[static_cast<int>(ep)] += sgn;
        if (i > 0 && em <= order) out[static_cast<int>(em)] += sgn;
    }
    return out;
}

TruncatedSeries bilateral_theta(int m, int s, int order) {
    if (m < 2 || s <= 0 || s >= m) throw ParameterDomain("bilateral_theta: need m >= 2, 0 < s < m");
    TruncatedSeries out(order);
    for (long long n = 0;; ++n) {
        const long long ep = n * (m * n + s);
        const long long em = n * (m * n - s);  // exponent at -n
        if (ep > order && em > order) break;
        if (ep <= order) out[static_cast<int>(ep)] += 1;
        if (n > 0 && em >= 0 && em <= order) out[static_cast<int>(em)] += 1;
    }
    return out;
}

TruncatedSeries jtp_sum(int m, int s, int z_sign, int z_exp, int order) {
    if (m < 1 || z_sign * z_sign != 1 || z_exp < 0)
        throw ParameterDomain("jtp_sum: need m >= 1, z_sign = +-1, z_exp >= 0");
    TruncatedSeries out(order);
    const long long window =
        static_cast<long long>(std::sqrt(2.0 * order / m + 4)) + std::abs(z_exp) + m + s + 8;
    for (long long i = -window; i <= window; ++i) {
        const long long e = m * (i * i - i) / 2 + static_cast<long long>(s) * i + static_cast<long long>(z_exp) * i;
        if (e < 0)
            throw ParameterDomain("jtp_sum: monomial specialization yields a negative exponent");
        if (e > order) continue;
        // (-z)^i = (-z_sign)^i q^{i z_exp}; for z_sign = +-1 this is (-z_sign)^|i|.
        const bool odd = (i % 2) != 0;
        out[static_cast<int>(e)] += odd ? Int(-z_sign) : Int(1);
    }
    return out;
}

TruncatedSeries gaussian_binomial(int n, int k, int order) {
    if (n < 0) throw ParameterDomain("gaussian_binomial: n >= 0");
    if (k < 0 || k > n) return TruncatedSeries(order);
    TruncatedSeries num = pochhammer(1, 1, order, +1, n);
    TruncatedSeries den = mul(pochhammer(1, 1, order, +1, k), pochhammer(1, 1, order, +1, n - k));
    return mul(num, inverse(den));
}

TruncatedSeries a_series(int S, int R, int k, int order) {
    if (S < 1 || S >= R) throw ParameterDomain("a_series: need 1 <= S < R");
    if (k < 1) throw ParameterDomain("a_series: need k >= 1");
    TruncatedSeries num(order);
    for (long long j = 0; j < k; ++j) {
        const Int sgn = (j % 2 == 0) ? 1 : -1;
        const long long e = j * (j + 1) * R / 2 - j * S;
        if (e <= order) num[static_cast<int>(e)] += sgn;
        const long long e2 = e + (2 * j + 1) * S;
        if (e2 <= order) num[static_cast<int>(e2)] -= sgn;
    }
    // For S = R/2 this is (q^{R/2};q^R)^2_inf automatically.
    TruncatedSeries den = pochhammer_product({{S, R}, {R - S, R}}, order);
    TruncatedSeries quot = mul(num, inverse(den));
    TruncatedSeries res = sub(quot, pentagonal_series(R, order));
    if (k % 2 == 0) res.negate();  // overall factor (-1)^{k-1}
    return res;
}

TruncatedSeries y_series(int S, int R, int k, int order) {
    if (S < 1 || S >= R) throw ParameterDomain("y_series: need 1 <= S < R");
    if (k < 0) throw ParameterDomain("y_series: need k >= 0");
    TruncatedSeries num(order);
    const long long e0 = static_cast<long long>(k) * (k + 1) * R / 2 - static_cast<long long>(k) * S;
    for (long long t = 0; t <= 2 * k; ++t) {
        const long long e = e0 + t * S;
        if (e <= order) num[static_cast<int>(e)] += 1;
    }
    TruncatedSeries den = pochhammer_product({{R + S, R}, {R - S, R}}, order);
    return mul(num, inverse(den));
}

namespace {

// Shared shape of H1/H2 and the b6 right-hand side: base exponent, inner
// quadratic, and the two finite Pochhammer subscripts differ per instance.
TruncatedSeries h_like(int k, int order, int base, int quad_lin, int inner_res) {
    TruncatedSeries acc(order);
    for (long long n = 0;; ++n) {
        const long long e = base + n * (3 * n + quad_lin);
        if (e > order) break;
        TruncatedSeries den = mul(pochhammer(3, 3, order, +1, static_cast<int>(n)),
                                  pochhammer(inner_res, 3, order, +1, static_cast<int>(n) + k + 1));
        acc = add(acc, shift(inverse(den), static_cast<int>(e)));
    }
    return acc;
}

}  // namespace

TruncatedSeries h1_series(int k, int order) {
    if (k < 1) throw ParameterDomain("h1_series: k >= 1");
    TruncatedSeries acc = h_like(k, order, k * (3 * k + 5) / 2 + 1, 3 * k + 4, 1);
    return mul(acc, inverse(pochhammer(2, 3, order)));
}

TruncatedSeries h2_series(int k, int order) {
    if (k < 1) throw ParameterDomain("h2_series: k >= 1");
    TruncatedSeries acc = h_like(k, order, k * (3 * k + 7) / 2 + 2, 3 * k + 5, 2);
    return mul(acc, inverse(pochhammer(1, 3, order)));
}

TruncatedSeries h1h2_series(int k, int order) { return add(h1_series(k, order), h2_series(k, order)); }

bool operator==(const OffsetSeries& a, const OffsetSeries& b) {
    return a.offset == b.offset && a.body == b.body;
}

OffsetSeries t_tail(bool plus, int k, int S, int R, int order) {
    if (S < 1 || S >= R || k < 1) throw ParameterDomain("t_tail: need 1 <= S < R, k >= 1");
    // Numerator exponents can dip below zero only through the k = 1 minus
    // term; shift the whole computation by D and keep exactness.
    const int D = (!plus && k == 1) ? std::max(0, 2 * S - R) : 0;
    const int N = order + D;
    TruncatedSeries num(N);
    for (long long n = k;; ++n) {
        long long e1, e2;
        if (plus) {
            e1 = n * (3 * n - 1) * R / 2 + 3 * n * S;
            e2 = e1 + S + n * R;
        } else {
            e1 = n * (3 * n + 1) * R / 2 - 3 * n * S;
            e2 = e1 + S - n * R;
        }
        if (std::min(e1, e2) > order) break;
        if (e1 + D >= 0 && e1 <= order) num[static_cast<int>(e1 + D)] += 1;
        if (e2 + D >= 0 && e2 <= order) num[static_cast<int>(e2 + D)] -= 1;
    }
    TruncatedSeries den = pochhammer_product({{S, R}, {R - S, R}}, N);
    return OffsetSeries{D, mul(num, inverse(den))};
}

namespace {

// The two manifestly-signed sums of the T± rewriting share this layout:
// sum_{n>=k} q^{lead(n)} (1 + q^g + ... + q^{(reps(n)-1) g}) over a two-factor
// Pochhammer inverse.
TruncatedSeries t_rw_half(int k, int order, const std::function<long long(long long)>& lead,
                          const std::function<long long(long long)>& reps, int g,
                          const std::vector<SignedFactorSpec>& den) {
    TruncatedSeries num(order);
    for (long long n = k;; ++n) {
        const long long e = lead(n);
        if (e > order) break;
        if (e < 0) continue;
        for (long long t = 0; t < reps(n); ++t) {
            const long long et = e + t * g;
            if (et > order) break;
            num[static_cast<int>(et)] += 1;
        }
    }
    return mul(num, inverse(pochhammer_product(den, order)));
}

}  // namespace

OffsetSeries t_tail_rewritten(bool plus, int k, int S, int R, int order) {
    if (S < 1 || S >= R || k < 1) throw ParameterDomain("t_tail_rewritten: need 1 <= S < R, k >= 1");
    const std::vector<SignedFactorSpec> denA = {{S, R}, {2 * R - S, R}};
    const std::vector<SignedFactorSpec> denB = {{S + R, R}, {R - S, R}};
    if (plus) {
        TruncatedSeries a = t_rw_half(
            k, order, [&](long long n) { return n * (3 * n - 1) * R / 2 + 3 * n * S; },
            [](long long n) { return n; }, R - S, denA);
        TruncatedSeries b = t_rw_half(
            k, order, [&](long long n) { return n * (3 * n + 1) * R / 2 + 2 * n * S; },
            [](long long n) { return n + 1; }, S, denB);
        return OffsetSeries{0, add(a, b)};
    }
    // minus side: the rewriting expresses -T_-; negate at the end.
    auto neg_t_rw = [&](int kk, int N) {
        TruncatedSeries a = t_rw_half(
            kk, N, [&](long long n) { return n * (3 * n - 1) * R / 2 - 3 * n * S + S; },
            [](long long n) { return n; }, R - S, denA);
        TruncatedSeries b = t_rw_half(
            kk, N, [&](long long n) { return n * (3 * n + 1) * R / 2 - 4 * n * S + S; },
            [](long long n) { return n - 1; }, S, denB);
        return add(a, b);
    };
    if (k >= 2) {
        TruncatedSeries r = neg_t_rw(k, order);
        r.negate();
        return OffsetSeries{0, r};
    }
    // k = 1:  -T_-(1) = q^{R-2S}/(q^S,q^{2R-S};q^R)_inf + (-T_-(2)).
    const int D = std::max(0, 2 * S - R);
    const int N = order + D;
    TruncatedSeries lead = mul(TruncatedSeries::monomial(N, R - 2 * S + D),
                               inverse(pochhammer_product(denA, N)));
    TruncatedSeries rest(N);
    TruncatedSeries r2 = neg_t_rw(2, order);
    for (int i = 0; i <= order; ++i) rest[i + D] = r2[i];
    TruncatedSeries total = add(lead, rest);
    total.negate();
    return OffsetSeries{D, total};
}

namespace {

long long need(const std::map<std::string, long long>& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw ParameterDomain("auxiliary_series: missing parameter '" + key + "'");
    return it->second;
}

long long tri(long long j) { return j * (j + 1) / 2; }

}  // namespace

TruncatedSeries auxiliary_series(const std::string& name,
                                 const std::map<std::string, long long>& params, int order) {
    const int N = order;
    if (name == "partition_gf") return inverse(pochhammer(1, 1, N));
    if (name == "distinct_gf") return pochhammer(1, 1, N, -1);
    if (name == "b3_gf") return inverse(pochhammer_product({{1, 3}, {2, 3}}, N));
    if (name == "b6_gf")
        return inverse(pochhammer_product({{1, 6}, {2, 6}, {3, 6}, {4, 6}, {5, 6}}, N));
    if (name == "xi_g") return inverse(pochhammer_product({{1, 5}, {4, 5}}, N));
    if (name == "xi_h") return inverse(pochhammer_product({{2, 5}, {3, 5}}, N));
    if (name == "pm_gf") {
        const int S = static_cast<int>(need(params, "S")), R = static_cast<int>(need(params, "R"));
        if (S < 1 || S >= R) throw ParameterDomain("pm_gf: need 1 <= S < R");
        return inverse(pochhammer_product({{S, R}, {R - S, R}}, N));
    }
    if (name == "ck") {
        const int k = static_cast<int>(need(params, "k"));
        if (k < 1) throw ParameterDomain("ck: k >= 1");
        TruncatedSeries mq = pochhammer(1, 1, N, -1);
        if (k == 1) return mq;
        TruncatedSeries inner(N);
        const Int s = (k % 2 == 1) ? 1 : -1;  // (-1)^{k-1}
        if (tri(2 * (k - 1)) <= N) inner[static_cast<int>(tri(2 * (k - 1)))] += s;
        for (long long j = 0; j <= k - 2; ++j) {
            const Int sj = (j % 2 == 0) ? 1 : -1;
            if (tri(2 * j) <= N) inner[static_cast<int>(tri(2 * j))] += sj;
            if (tri(2 * j + 1) <= N) inner[static_cast<int>(tri(2 * j + 1))] -= sj;
        }
        TruncatedSeries r = mul(mq, inner);
        if (s == -1) r.negate();
        return r;
    }
    if (name == "b3_lhs" || name == "b6_lhs") {
        const int k = static_cast<int>(need(params, "k"));
        if (k < 1) throw ParameterDomain(name + ": k >= 1");
        const int step = (name == "b3_lhs") ? 3 : 6;
        TruncatedSeries tp(N);
        for (long long j = -k; j <= k; ++j) {
            const long long e = j * (3 * j - 1) / 2;
            if (e <= N) tp[static_cast<int>(e)] += ((j % 2 + 2) % 2 == 0) ? 1 : -1;
        }
        TruncatedSeries pr = pochhammer(step, step, N);
        TruncatedSeries t = mul(mul(pr, inverse(pochhammer(1, 1, N))), tp);
        // (-1)^{k-1}(rho_step - sum) = (-1)^{k-1} pr + (-1)^k pr/(q;q) tp
        TruncatedSeries r = sub(pr, t);
        if (k % 2 == 0) r.negate();
        return r;
    }
    if (name == "b6_rhs") {
        const int k = static_cast<int>(need(params, "k"));
        if (k < 1) throw ParameterDomain("b6_rhs: k >= 1");
        TruncatedSeries m3 = pochhammer(3, 3, N, -1);
        TruncatedSeries a = h1_series(k, N);
        TruncatedSeries b = h2_series(k, N);
        return add(mul(a, m3), mul(b, m3));
    }
    if (name == "conj_2s") {
        const int k = static_cast<int>(need(params, "k"));
        if (k < 1) throw ParameterDomain("conj_2s: k >= 1");
        TruncatedSeries num(N);
        for (long long j = 0; j < k; ++j) {
            const Int sj = (j % 2 == 0) ? 1 : -1;
            if (j * j <= N) num[static_cast<int>(j * j)] += sj;
            if (j * j + 2 * j + 1 <= N) num[static_cast<int>(j * j + 2 * j + 1)] -= sj;
        }
        TruncatedSeries r = sub(mul(num, inverse(pochhammer(1, 2, N))), pochhammer(1, 1, N));
        if (k % 2 == 0) r.negate();
        return r;
    }
    if (name == "shanks_lhs") {
        const int k = static_cast<int>(need(params, "k"));
        TruncatedSeries r(N);
        for (long long j = -k; j <= k; ++j) {
            const long long e = j * (3 * j - 1) / 2;
            if (e <= N) r[static_cast<int>(e)] += ((j % 2 + 2) % 2 == 0) ? 1 : -1;
        }
        return r;
    }
    if (name == "shanks_rhs") {
        const int k = static_cast<int>(need(params, "k"));
        if (k < 0) throw ParameterDomain("shanks_rhs: k >= 0");
        TruncatedSeries r(N);
        for (int j = 0; j <= k; ++j) {
            // (q;q)_k / (q;q)_j = prod_{i=j+1..k} (1-q^i), a polynomial.
            TruncatedSeries term = shift(pochhammer(j + 1, 1, N, +1, k - j),
                                         static_cast<int>(tri(j) + static_cast<long long>(j) * k));
            r = (j % 2 == 0) ? add(r, term) : sub(r, term);
        }
        return r;
    }
    if (name == "am_lhs") {
        const int k = static_cast<int>(need(params, "k"));
        if (k < 1) throw ParameterDomain("am_lhs: k >= 1");
        TruncatedSeries num(N);
        for (long long j = 0; j < k; ++j) {
            const Int sj = (j % 2 == 0) ? 1 : -1;
            const long long e = j * (3 * j + 1) / 2;
            if (e <= N) num[static_cast<int>(e)] += sj;
            if (e + 2 * j + 1 <= N) num[static_cast<int>(e + 2 * j + 1)] -= sj;
        }
        return mul(num, inverse(pochhammer(1, 1, N)));
    }
    if (name == "am_rhs") {
        const int k = static_cast<int>(need(params, "k"));
        if (k < 1) throw ParameterDomain("am_rhs: k >= 1");
        TruncatedSeries r = TruncatedSeries::one(N);
        const long long base = static_cast<long long>(k) * (k - 1) / 2;
        for (long long n = 1; base + (k + 1) * n <= N; ++n) {
            TruncatedSeries t = mul(inverse(pochhammer(1, 1, N, +1, static_cast<int>(n))),
                                    gaussian_binomial(static_cast<int>(n) - 1, k - 1, N));
            t = shift(t, static_cast<int>(base + (k + 1) * n));
            r = (k % 2 == 1) ? add(r, t) : sub(r, t);
        }
        return r;
    }
    if (name == "wang_yee") {
        const int R = static_cast<int>(need(params, "R")), S = static_cast<int>(need(params, "S"));
        const int m = static_cast<int>(need(params, "m")), variant = static_cast<int>(need(params, "variant"));
        if (S < 1 || 2 * S >= R) throw ParameterDomain("wang_yee: need 1 <= S < R/2");
        if (m < 1 || (variant != 0 && variant != 1)) throw ParameterDomain("wang_yee: m >= 1, variant in {0,1}");
        const int lo = (variant == 0) ? -(m - 1) : -m;
        TruncatedSeries num(N);
        for (long long n = lo; n <= m; ++n) {
            const long long e = R * n * (n - 1) / 2 + static_cast<long long>(S) * n;
            if (e >= 0 && e <= N) num[static_cast<int>(e)] += ((n % 2 + 2) % 2 == 0) ? 1 : -1;
        }
        TruncatedSeries den = pochhammer_product({{S, R}, {R - S, R}, {R, R}}, N);
        return mul(num, inverse(den));
    }
    if (name == "tplus" || name == "tminus" || name == "tplus_rw" || name == "tminus_rw") {
        const int S = static_cast<int>(need(params, "S")), R = static_cast<int>(need(params, "R"));
        const int k = static_cast<int>(need(params, "k"));
        const bool plus = name[1] == 'p';
        OffsetSeries t = (name.ends_with("_rw")) ? t_tail_rewritten(plus, k, S, R, N)
                                                 : t_tail(plus, k, S, R, N);
        return t.body;  // offset is max(0, 2S-R) for the k=1 minus pair
    }
    if (name == "wsf1_lhs" || name == "wsf2_lhs") {
        auto theta_pq = [&](int s, bool neg) {
            const int sg = neg ? -1 : +1;
            return pochhammer_product({{s, 10, sg}, {10 - s, 10, sg}}, N);
        };
        TruncatedSeries A = mul(mul(theta_pq(2, false), theta_pq(4, false)),
                                mul(theta_pq(1, true), theta_pq(3, true)));
        TruncatedSeries B = mul(mul(theta_pq(1, false), theta_pq(3, false)),
                                mul(theta_pq(2, true), theta_pq(4, true)));
        return (name == "wsf1_lhs") ? add(A, B) : sub(A, B);
    }
    if (name == "wsf1_rhs") {
        TruncatedSeries r = pochhammer_product(
            {{3, 10}, {7, 10}, {4, 10, -1}, {6, 10, -1}, {5, 10}, {5, 10}, {10, 10, -1}, {10, 10, -1}}, N);
        return r.scale(2);
    }
    if (name == "wsf2_rhs") {
        TruncatedSeries r = pochhammer_product(
            {{2, 10, -1}, {8, 10, -1}, {10, 10, -1}, {10, 10, -1}, {5, 10}, {5, 10}, {1, 10}, {9, 10}}, N);
        r.scale(2);
        return shift(r, 1);
    }
    if (name == "m3_conj4") {
        const int k = static_cast<int>(need(params, "k"));
        if (k < 1) throw ParameterDomain("m3_conj4: k >= 1");
        TruncatedSeries num(N);
        for (long long n = 0; tri(n + 2 * k) <= N; ++n) {
            const Int sgn = (tri(n) % 2 == 0) ? 1 : -1;
            num[static_cast<int>(tri(n + 2 * k))] += sgn;
        }
        return mul(pochhammer(1, 1, N, -1), num);
    }
    if (name == "kmr38") {
        const int a = static_cast<int>(need(params, "a"));
        if (a != 1 && a != 3) throw ParameterDomain("kmr38: a in {1,3}");
        return pochhammer_product({{8, 8}, {4 + a, 8, -1}, {4 - a, 8, -1}}, N);
    }
    throw UnknownSeriesName("auxiliary_series: unknown name '" + name + "'");
}

}  // namespace theta
