#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "theta/series.hpp"

namespace theta {

/// One factor group of a q-Pochhammer product: the product over j >= 0 of
/// (1 - sign*q^(base + j*step)), with j < count, or unbounded when count is
/// absent (factors beyond the truncation order cannot contribute and are
/// skipped either way).
struct SignedFactorSpec {
    int base = 1;                   // s >= 1
    int step = 1;                   // r >= 1
    int sign = +1;                  // +1 -> (q^s;q^r)-style, -1 -> (-q^s;q^r)-style
    std::optional<int> count = {};  // finite subscript, or infinite
};

TruncatedSeries pochhammer_product(const std::vector<SignedFactorSpec>& factors, int order);

/// (q^s;q^r)_count, count omitted = infinite.
TruncatedSeries pochhammer(int base, int step, int order, int sign = +1,
                           std::optional<int> count = {});

/// Generating function of rho_R: coefficient (-1)^i at n = R*i*(3i-1)/2.
TruncatedSeries pentagonal_series(int R, int order);

/// Coefficient of q^e counts integers n with n*(m*n+s) = e.
TruncatedSeries bilateral_theta(int m, int s, int order);

/// Sum over all integers i of (-z)^i q^{m(i^2-i)/2 + s i} with z = z_sign*q^{z_exp}.
/// Throws ParameterDomain if any in-window term has a negative exponent.
TruncatedSeries jtp_sum(int m, int s, int z_sign, int z_exp, int order);

/// (q;q)_n / ((q;q)_k (q;q)_{n-k}) for 0 <= k <= n, zero series otherwise.
TruncatedSeries gaussian_binomial(int n, int k, int order);

/// The truncated-JTP difference series of Conjecture 4.3, Eq. (trunc-equiv).
/// Requires 1 <= S < R, k >= 1. S = R/2 is covered by the same formula (the
/// denominator degenerates to the squared product).
TruncatedSeries a_series(int S, int R, int k, int order);

/// Generating function of |Y_k(n)|.
TruncatedSeries y_series(int S, int R, int k, int order);

TruncatedSeries h1_series(int k, int order);
TruncatedSeries h2_series(int k, int order);
TruncatedSeries h1h2_series(int k, int order);

/// A power series with an exponent offset: coefficient of q^(i - offset) is
/// body[i]. Used for the T± tails, whose k = 1 instances can reach finitely
/// many negative exponents when S > R/2.
struct OffsetSeries {
    int offset = 0;  // series = sum body[i] q^(i-offset), exact through q^(order-offset)
    TruncatedSeries body;

    int min_exponent() const { return -offset; }
    int max_exponent() const { return body.order() - offset; }
    const Int& at_exponent(int e) const { return body[e + offset]; }
};

bool operator==(const OffsetSeries& a, const OffsetSeries& b);

/// Direct T_plus / T_minus tails and their rewritten (manifestly signed)
/// forms. All four agree pairwise; offset is max(0, 2S-R) for the
/// k = 1 minus pair and 0 otherwise.
OffsetSeries t_tail(bool plus, int k, int S, int R, int order);
OffsetSeries t_tail_rewritten(bool plus, int k, int S, int R, int order);

/// Named auxiliary series registry. Parameters are validated per name.
/// Known names:
///   ck(k), b6_lhs(k), b6_rhs(k), b3_lhs(k), conj_2s(k),
///   shanks_lhs(k), shanks_rhs(k), am_lhs(k), am_rhs(k),
///   wang_yee(R,S,m,variant in {0,1}): variant 0 sums -(m-1)..m, 1 sums -m..m,
///   tplus/tminus/tplus_rw/tminus_rw(S,R,k): body of the offset form,
///   wsf1_lhs, wsf1_rhs, wsf2_lhs, wsf2_rhs,
///   m3_conj4(k), kmr38(a), partition_gf, distinct_gf, b3_gf, b6_gf,
///   pm_gf(S,R): 1/((q^S,q^{R-S};q^R)_inf), xi_g, xi_h.
TruncatedSeries auxiliary_series(const std::string& name,
                                 const std::map<std::string, long long>& params, int order);

}  // namespace theta
