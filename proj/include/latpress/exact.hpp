#pragma once

#include <vector>

#include "latpress/types.hpp"

namespace latpress::exact {

// C(n, k); zero outside 0 <= k <= n.
Integer binom(unsigned long n, long k);

// C(2s, s) / (s + 1).
Integer catalan(unsigned long s);

// Partition function of adsorbing directed paths of n steps with free
// endpoint:  T_n(z) = sum_m C(n, ceil(n/2)+m) (z-1)^m.
Rational partition_directed(unsigned n, const Rational& z);

// Partition function of adsorbing Dyck paths of n steps:
// D_n(z) = sum_m (4m+2)/(n+2(m+1)) C(n, floor(n/2)+m) (z-1)^m.
// Zero for odd n; D_0 = 1 by the empty-path convention.
Rational partition_dyck(unsigned n, const Rational& z);

// Partition function C_n(z;j) of a non-crossing pair: a weighted Dyck
// path of 2n steps below a directed path from (0,2) to (2n, 2j+2).
// Evaluated as the double sum over (m1, m2) with the quartic kernel.
Rational partition_staircase(unsigned n, unsigned j, const Rational& z);

// Same quantity through the algebraically independent single-sum form
// (difference of two sums over k).  Must agree with partition_staircase
// exactly; the pair gives a dual-route consistency check.
Rational partition_staircase_alt(unsigned n, unsigned j, const Rational& z);

// C_half(z;j) for j = 0..jmax in one pass (shared binomial rows and
// weight tables; same double-sum formula as partition_staircase).
std::vector<Rational> staircase_row(unsigned half, unsigned jmax, const Rational& z);

// Z*_n(z;q) = sum_j C_q(z;j) C_{n-q}(z;j): grafted polygons whose bottom
// path passes through the wall vertex at lattice coordinate 2q.  The sum
// is truncated at min(q, n-q) since C_m(z;j) vanishes for j > m.
Rational passthrough_staircase(unsigned n, unsigned q, const Rational& z);

// Exact pressure on the wall vertex addressed by the query.
// DirectedPath: ratio = D_q T_{n-q} / T_n;  DyckPath: D_q D_{n-q} / D_n;
// StaircasePolygon: Z*_n(z;q) / C_n(z;0).  Path models give exactly zero
// for odd q (no configuration meets the wall there).
ExactPressure pressure(const PressureQuery& query);

// Closed forms available at the critical activity z = 2.  Half-integer
// Gamma factors are tracked symbolically so the sqrt(pi) powers must
// cancel; a selector whose powers do not cancel (e.g. odd n for the path
// totals) is rejected.
enum class Z2Form {
  DirectedTotal,     // T_n(2), even n
  DyckTotal,         // D_n(2) = n! / ((n/2)!)^2, even n
  StaircaseGround,   // C_n(2;0)
  StaircaseAtJ,      // C_n(2;j), requires j
  StaircaseJSum,     // sum_{j=0}^n C_n(2;j)
  PassthroughTotal,  // Z*_n(2;q), requires q in (0,n)
  AvoidingRatio,     // Z*_n(2;q) / C_n(2;0), requires q in (0,n)
};

Rational closed_form_z2(Z2Form form, unsigned n);
Rational closed_form_z2(Z2Form form, unsigned n, unsigned jq);

// Pure (z = 1) path counts: C(n, ceil(n/2)) positive paths, or the
// Catalan count for Dyck paths of even length n.
enum class PureKind { Positive, Dyck };
Integer pure_count(unsigned n, PureKind kind);

}  // namespace latpress::exact
