#include "theta/constraint.hpp"

#include <algorithm>

namespace theta {

bool Constraint::matches(const Partition& p) const {
    for (int v : p.parts()) {
        if (!value_allowed(v)) return false;
        auto c = cap(v);
        if (c && p.multiplicity(v) > *c) return false;
    }
    for (int v : required_parts) {
        int need = 0;
        for (int w : required_parts) need += (w == v);
        if (p.multiplicity(v) < need) return false;
    }
    return true;
}

namespace {

struct Walker {
    const Constraint& c;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> stack;
    std::vector<int> required;  // descending
    bool stopped = false;

    // req_idx: next unmet required part (indices into `required`).
    void rec(long long rem, int maxv, size_t req_idx) {
        if (stopped) return;
        if (rem == 0) {
            if (req_idx == required.size()) {
                if (!visit(stack)) stopped = true;
            }
            return;
        }
        int hi = static_cast<int>(std::min<long long>(rem, maxv));
        // Parts descend, so an unmet required value above the next part can
        // never be added later.
        const int floor_req = (req_idx < required.size()) ? required[req_idx] : 1;
        for (int v = hi; v >= floor_req && v >= 1; --v) {
            if (!c.value_allowed(v)) continue;
            // run of value v: choose its full multiplicity here
            long long maxc = rem / v;
            auto capv = c.cap(v);
            if (capv) maxc = std::min<long long>(maxc, *capv);
            size_t nreq = req_idx;
            int need = 0;
            while (nreq < required.size() && required[nreq] == v) ++nreq, ++need;
            if (need > maxc) continue;
            const int lo = std::max(need, 1);
            for (long long cnt = maxc; cnt >= lo; --cnt) {
                for (long long i = 0; i < cnt; ++i) stack.push_back(v);
                rec(rem - cnt * v, v - 1, need ? nreq : req_idx);
                for (long long i = 0; i < cnt; ++i) stack.pop_back();
                if (stopped) return;
            }
            // cnt = 0 continues the loop to smaller v (only if v not required)
            if (need) break;  // v required but not taken: dead branch below v
        }
    }
};

}  // namespace

void for_each_partition(long long n, const Constraint& c,
                        const std::function<bool(const std::vector<int>&)>& visit) {
    if (n < 0) return;
    Walker w{c, visit, {}, {}, false};
    w.required = c.required_parts;
    std::sort(w.required.begin(), w.required.end(), std::greater<int>());
    long long reqsum = 0;
    for (int v : w.required) reqsum += v;
    if (reqsum > n) return;
    int maxv = static_cast<int>(std::min<long long>(n, c.max_part ? *c.max_part : n));
    if (n == 0) {
        if (w.required.empty()) visit(w.stack);
        return;
    }
    w.rec(n, maxv, 0);
}

std::vector<Partition> enumerate(long long n, const Constraint& c) {
    std::vector<Partition> out;
    for_each_partition(n, c, [&](const std::vector<int>& parts) {
        out.emplace_back(parts);
        return true;
    });
    return out;
}

unsigned long long count(long long n, const Constraint& c) {
    unsigned long long k = 0;
    for_each_partition(n, c, [&](const std::vector<int>&) {
        ++k;
        return true;
    });
    return k;
}

namespace kernels {

std::vector<unsigned long long> count_range_serial(const Constraint& c, int n_max) {
    std::vector<unsigned long long> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n) out[n] = count(n, c);
    return out;
}

std::vector<unsigned long long> count_range_parallel(const Constraint& c, int n_max) {
    std::vector<unsigned long long> out(n_max + 1);
#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n <= n_max; ++n) out[n] = count(n, c);
    return out;
}

}  // namespace kernels

std::vector<unsigned long long> count_range(const Constraint& c, int n_max) {
    if (n_max >= 32) return kernels::count_range_parallel(c, n_max);
    return kernels::count_range_serial(c, n_max);
}

}  // namespace theta
