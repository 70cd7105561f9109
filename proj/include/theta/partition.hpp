#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "theta/errors.hpp"

namespace theta {

/// A partition: non-increasing positive parts, indexed 1-based; part(j)
/// reads 0 for j > length. The lambda_0 = infinity sentinel is an access
/// convention of the map code, not stored here.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // sorts descending, rejects non-positive parts

    static Partition staircase(int S, int R, int j);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long size() const { return size_; }
    bool empty() const { return parts_.empty(); }

    /// 1-based; 0 beyond the last part.
    int part(int j) const {
        return (j >= 1 && j <= length()) ? parts_[j - 1] : 0;
    }

    int multiplicity(int value) const;
    bool is_distinct() const;

    int mex() const;
    int mex_mod(int A, int a) const;

    int even_length_count() const;
    int odd_length_count() const;

    struct Stats {
        int length;
        int even_length_count;
        int odd_length_count;
        long long size;
    };
    Stats statistics() const {
        return {length(), even_length_count(), odd_length_count(), size()};
    }

    /// Sub-multiset of parts congruent to s mod r.
    Partition slice(int s, int r) const;
    /// Parts congruent to +-s mod r.
    Partition slice_pm(int s, int r) const;

    /// Row lengths q_i + 1 of the R-modular diagram, where part_i = q_i R + S_i
    /// with 0 < S_i <= R.
    std::vector<int> modular_rows(int R) const;

    /// Largest a with row a of the R-modular diagram holding >= a + k + 2
    /// boxes: the (k+2,R)-Durfee rectangle height.
    int durfee_height(int k, int R = 3) const;

    auto operator<=>(const Partition& o) const = default;

private:
    std::vector<int> parts_;
    long long size_ = 0;
};

Partition multiset_union(const Partition& a, const Partition& b);
/// Throws NotSubMultiset unless b is contained in a.
Partition multiset_diff(const Partition& a, const Partition& b);

}  // namespace theta
