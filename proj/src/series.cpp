#include "theta/series.hpp"

#include <algorithm>

namespace theta {

namespace {
int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}
}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = min_order(a, b);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = min_order(a, b);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
    return r;
}

TruncatedSeries shift(const TruncatedSeries& a, int e) {
    const int n = a.order();
    TruncatedSeries r(n);
    for (int i = e; i <= n; ++i) r[i] = a[i - e];
    return r;
}

namespace kernels {

void mul_serial(const TruncatedSeries& a, const TruncatedSeries& b, TruncatedSeries& out) {
    const int n = out.order();
    for (int i = 0; i <= n; ++i) {
        Int acc = 0;
        for (int j = 0; j <= i; ++j) {
            if (a[j] != 0 && b[i - j] != 0) acc += a[j] * b[i - j];
        }
        out[i] = std::move(acc);
    }
}

void mul_parallel(const TruncatedSeries& a, const TruncatedSeries& b, TruncatedSeries& out) {
    const int n = out.order();
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i <= n; ++i) {
        Int acc = 0;
        for (int j = 0; j <= i; ++j) {
            if (a[j] != 0 && b[i - j] != 0) acc += a[j] * b[i - j];
        }
        out[i] = std::move(acc);
    }
}

}  // namespace kernels

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = min_order(a, b);
    TruncatedSeries r(n);
    // Quadratic work only pays for threading above a few hundred terms.
    if (n >= 384)
        kernels::mul_parallel(a, b, r);
    else
        kernels::mul_serial(a, b, r);
    return r;
}

TruncatedSeries inverse(const TruncatedSeries& a) {
    if (a[0] != 1 && a[0] != -1)
        throw NonUnitConstantTerm("inverse: constant term must be +1 or -1, got " + to_dec(a[0]));
    const int n = a.order();
    TruncatedSeries c(n);
    c[0] = a[0];
    for (int i = 1; i <= n; ++i) {
        Int acc = 0;
        for (int j = 1; j <= i; ++j) {
            if (a[j] != 0 && c[i - j] != 0) acc += a[j] * c[i - j];
        }
        c[i] = (a[0] == 1) ? -acc : acc;
    }
    return c;
}

}  // namespace theta
