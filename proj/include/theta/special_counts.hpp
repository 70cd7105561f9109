#pragma once

#include <map>
#include <string>

#include "theta/constraint.hpp"

namespace theta {

/// Exact cardinalities of the named partition families, by filtered
/// enumeration. Known names (params in braces):
///   mk {k}            partitions with mex = k and more parts > k than < k
///   xz {k}            all of 1..k parts present; smallest part > k exists and
///                     repeats at least k+1 times
///   b3i {i,k}         3-regular, B3^i membership (Durfee predicate)
///   b3i_star {i,k}    lambda^{0,3} distinct and 3-regular rest in B3^i
///   d5 {}             distinct 5-regular
///   d5_even/d5_odd {} d5 split by parity of the length
///   c_ab {a,b}        pairs (lambda,mu): lambda distinct avoiding +-a,+-b mod 10,
///                     mu distinct multiple-of-5 parts
///   qbar {A,a}        odd-part partitions with mex_{A,a} == A+a (mod 2A)
///   mex_class {A,a,m} odd-part partitions with mex_{A,a} == m
///   p_pm {S,R}        |P_{+-S,R}(n)|
///   u_set {family,sign,k}  the eight u_{xi,S} set descriptions; family codes
///                     1..4 = g1,h2,g2,h1, sign +1/-1
unsigned long long special_count(const std::string& name, long long n,
                                 const std::map<std::string, long long>& params);

/// B3^i membership predicate for a 3-regular partition.
bool b3i_member(const Partition& lambda, int k, int i);

}  // namespace theta
