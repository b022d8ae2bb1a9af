#pragma once

#include "gsn/number_table.hpp"
#include "gsn/rational.hpp"

namespace gsn {

// Classical numbers. Every function returns zero outside 0 <= k <= p
// (and for negative p), so they can be used directly inside index sums.

/// S(p, k) from S(p,k) = S(p-1,k-1) + k S(p-1,k); rows are memoized per process.
Rational stirling2(long p, long k);
/// S(p, k) = (1/k!) sum_j (-1)^j binom(k,j) (k-j)^p.
Rational stirling2_explicit(long p, long k);

/// Unsigned first kind, s(p,k) = s(p-1,k-1) + (p-1) s(p-1,k), s(0,0) = 1.
Rational stirling1_unsigned(long p, long k);
/// Coefficient of x^k in the rising factorial x(x+1)...(x+p-1).
Rational stirling1_unsigned_product(long p, long k);

/// Eulerian numbers with A(0,0) = 1 and, for p >= 1, A(p,0) = 0 and A(p,i)
/// (i = 1..p) the permutations of p elements with i-1 descents, so that
/// n^p = sum_i A(p,i) binom(n+p-i, p). Computed by the descent recurrence.
Rational eulerian(long p, long i);
/// A(p,i) = sum_{j=0}^{i} (-1)^j binom(p+1, j) (i-j)^p.
Rational eulerian_explicit(long p, long i);

/// Rows 0..last of a classical table via the requested route. Only
/// Stirling2, Stirling1Unsigned and Eulerian are accepted; Conversion is
/// not a classical route.
NumberTable classic_table(TableKind kind, unsigned last_row, Route route = Route::Recurrence);

}  // namespace gsn
