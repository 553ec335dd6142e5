#pragma once

#include "socover/fp.hpp"
#include "socover/guards.hpp"
#include "socover/series.hpp"

namespace socover {

// Parameters of the symmetric determinantal ring R = K[X]/I_{t+1}(X) for X
// an n x n symmetric matrix of indeterminates, identified with K[Y^tr Y]
// for Y a t x n matrix of indeterminates.
struct RingSpec {
  int t;
  int n;

  RingSpec(int t_, int n_) : t(t_), n(n_) {
    if (t < 1 || n < t + 1)
      throw std::invalid_argument("ring spec requires 1 <= t <= n-1");
  }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

enum class CanonicalCase { PTwist, FreeTwist };

// The graded canonical module of R as a twist, in YGrading degrees:
// PTwist means omega_R = p(twist) for the height-one prime p generated by
// the maximal minors of the first t rows of Y^tr Y; FreeTwist means
// omega_R = R(twist).
struct CanonicalDescriptor {
  CanonicalCase kind;
  int twist;
};

/// Krull dimension C(n+1,2) - C(n+1-t,2).
int krull_dim(const RingSpec& spec);

/// True iff n = t+1 (mod 2).
bool is_gorenstein(const RingSpec& spec);

/// a-invariant of R in YGrading (deg x_ij = 2): -t(n+1) when n = t (mod 2),
/// else -tn.  Always even; divide by 2 for the Rescaled value.
int a_invariant_y(const RingSpec& spec);

CanonicalDescriptor canonical_module(const RingSpec& spec);

/// Closed-form h-polynomial for n = t+2: numerator (C(2,2), ..., C(n,2))
/// over (1-z)^dim, Rescaled grading.
HilbertSeries h_poly_codim3(const RingSpec& spec);

/// h-polynomial of R in the Rescaled grading: closed form when n = t+2,
/// otherwise reconstructed from brute-force graded dimensions up to the
/// numerator degree k = dim + a_invariant_y/2 (refuses if k > budget).
HilbertSeries h_poly(const RingSpec& spec, int oracle_budget,
                     const PrimeField& field, const SizeGuard& guard = {});

/// Oracle-only route of h_poly, with no closed-form shortcut.
HilbertSeries h_poly_oracle(const RingSpec& spec, int oracle_budget,
                            const PrimeField& field, const SizeGuard& guard = {});

}  // namespace socover
