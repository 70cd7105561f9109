#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "theta/bigint.hpp"
#include "theta/errors.hpp"

namespace theta {

/// A power series known exactly through q^order: coeffs()[i] is the
/// coefficient of q^i. Every binary operation returns a series valid through
/// the smaller of the two input orders.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1) {}
    explicit TruncatedSeries(int order) : c_(order + 1) { assert(order >= 0); }
    TruncatedSeries(int order, const Int& constant) : c_(order + 1) { c_[0] = constant; }

    static TruncatedSeries one(int order) { return TruncatedSeries(order, 1); }
    static TruncatedSeries monomial(int order, int exponent, const Int& coeff = 1) {
        TruncatedSeries s(order);
        if (exponent <= order) s.c_[exponent] = coeff;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Int& operator[](int i) const { return c_[i]; }
    Int& operator[](int i) { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Int& v : c_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const TruncatedSeries& o) const = default;

    TruncatedSeries truncate(int new_order) const {
        assert(new_order >= 0 && new_order <= order());
        TruncatedSeries r(new_order);
        for (int i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
        return r;
    }

    TruncatedSeries& negate() {
        for (Int& v : c_) v = -v;
        return *this;
    }

    TruncatedSeries& scale(const Int& k) {
        for (Int& v : c_) v *= k;
        return *this;
    }

    /// In-place multiplication by (1 - sign*q^e); the workhorse behind
    /// Pochhammer expansion. No-op when e exceeds the order.
    TruncatedSeries& mul_binomial(int e, int sign) {
        const int n = order();
        if (e <= 0 || e > n) return *this;
        if (sign > 0)
            for (int i = n; i >= e; --i) c_[i] -= c_[i - e];
        else
            for (int i = n; i >= e; --i) c_[i] += c_[i - e];
        return *this;
    }

private:
    std::vector<Int> c_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries shift(const TruncatedSeries& a, int e);

/// Inverse of a series with constant term +-1, by the standard recurrence
/// c_0 = 1/a_0, c_n = -a_0^{-1} * sum_{j=1..n} a_j c_{n-j}.
/// Throws NonUnitConstantTerm otherwise.
TruncatedSeries inverse(const TruncatedSeries& a);

namespace kernels {

// Serial reference and OpenMP-parallel truncated Cauchy products. Both
// produce identical exact results; tests compare them, the benchmark times
// them. `out` has the min order of the inputs.
void mul_serial(const TruncatedSeries& a, const TruncatedSeries& b, TruncatedSeries& out);
void mul_parallel(const TruncatedSeries& a, const TruncatedSeries& b, TruncatedSeries& out);

}  // namespace kernels

}  // namespace theta
