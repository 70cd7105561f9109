#include "theta/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace theta {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw DomainViolation("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition Partition::staircase(int S, int R, int j) {
    if (j < 0 || S < 1 || R < 1) throw DomainViolation("staircase: need j >= 0, 0 < S, 0 < R");
    std::vector<int> p;
    p.reserve(j);
    for (int i = j - 1; i >= 0; --i) p.push_back(i * R + S);
    return Partition(std::move(p));
}

int Partition::multiplicity(int value) const {
    int c = 0;
    for (int p : parts_) c += (p == value);
    return c;
}

bool Partition::is_distinct() const {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

int Partition::mex() const {
    std::set<int> s(parts_.begin(), parts_.end());
    int m = 1;
    while (s.count(m)) ++m;
    return m;
}

int Partition::mex_mod(int A, int a) const {
    if (A < 1 || a < 1 || a > A) throw DomainViolation("mex_mod: need 0 < a <= A");
    std::set<int> s(parts_.begin(), parts_.end());
    int m = a;
    while (s.count(m)) m += A;
    return m;
}

int Partition::even_length_count() const {
    int c = 0;
    for (int p : parts_) c += (p % 2 == 0);
    return c;
}

int Partition::odd_length_count() const { return length() - even_length_count(); }

Partition Partition::slice(int s, int r) const {
    if (r < 2 || s < 0 || s >= r) throw DomainViolation("slice: need r >= 2, 0 <= s < r");
    std::vector<int> out;
    for (int p : parts_)
        if (p % r == s) out.push_back(p);
    return Partition(std::move(out));
}

Partition Partition::slice_pm(int s, int r) const {
    if (r < 2 || s < 0 || s >= r) throw DomainViolation("slice_pm: need r >= 2, 0 <= s < r");
    std::vector<int> out;
    for (int p : parts_)
        if (p % r == s || p % r == (r - s) % r) out.push_back(p);
    return Partition(std::move(out));
}

std::vector<int> Partition::modular_rows(int R) const {
    if (R < 2) throw DomainViolation("modular_rows: need R >= 2");
    std::vector<int> rows;
    rows.reserve(parts_.size());
    for (int p : parts_) {
        int q = p / R, s = p % R;
        if (s == 0) { --q; }
        rows.push_back(q + 1);
    }
    return rows;
}

int Partition::durfee_height(int k, int R) const {
    const std::vector<int> rows = modular_rows(R);
    int a = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= static_cast<int>(i) + 1 + k + 2)
            a = static_cast<int>(i) + 1;
        else
            break;
    }
    return a;
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<int> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    return Partition(std::move(out));
}

Partition multiset_diff(const Partition& a, const Partition& b) {
    std::vector<int> out = a.parts();
    for (int v : b.parts()) {
        auto it = std::find(out.begin(), out.end(), v);
        if (it == out.end()) throw NotSubMultiset("multiset_diff: right operand not contained");
        out.erase(it);
    }
    return Partition(std::move(out));
}

}  // namespace theta
