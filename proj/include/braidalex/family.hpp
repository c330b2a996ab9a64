#pragma once

// The braid family B(q;k,m), both evaluation paths for its three-variable
// Alexander polynomial, the difference recursion, and the term-count formula.

#include <cstdint>

#include "braidalex/braid.hpp"
#include "braidalex/laurent.hpp"

namespace braidalex {

enum class EmbeddingKind { Phi, Psi };

struct Embedding {
  EmbeddingKind kind = EmbeddingKind::Psi;
  int rim_index = 1;

  void validate() const;
};

struct FamilyParams {
  std::int64_t q = 2;  // >= 2
  std::int64_t k = 1;  // >= 1
  std::int64_t m = 1;  // >= 0 (m = 0 is the degenerate family)

  void validate() const;
};

// Word on q strands whose matrix is
// C_q(t) C_{q-1}(t) ... C_3(t) [C_2(t)]^{2k-1} [C_1(s) C_1(t)]^m.
ColoredBraidWord family_word(const FamilyParams& p);

// det(I - x * Gamma_{q;k,m}) via the matrix path.
LaurentPolynomial delta_det(const FamilyParams& p, int dimension_cap = kDefaultDimensionCap);

// The closed form
// 1 - x(st)^m + x * GS(xt, q-1) * [ t^{2k-1}
//     + (s-1) t GS(-t, 2k-1) GS(st, m) - x (st)^m t^{2k-1} ],
// where GS(u, n) = sum_{i<n} u^i replaces each quotient factor.
//
// Agrees with delta_det exactly when q = 2 or k = 1 and diverges otherwise:
// the recursion underlying this formula assumes [C_2]^{2k-1} embeds
// block-diagonally at the q=2 -> 3 step, which holds only for k = 1. Only
// delta_det is symmetrizable off that region, so delta_det carries the
// actual link invariant (see sw_invariant).
LaurentPolynomial delta_closed(const FamilyParams& p);

// Recursion seed: Delta_1 = 1 - x(st)^m. Not a valid FamilyParams point.
LaurentPolynomial delta_one(std::int64_t m);

// P_{k,m} = t^{2k-1} + (s-1) t GS(st, m) GS(-t, 2k-1).
LaurentPolynomial p_poly(std::int64_t k, std::int64_t m);

// D_q = (xt)^{q-1} (x P_{k,m} - x^2 (st)^m t^{2k-1}); equals
// delta(q+1) - delta(q), and satisfies D_q = xt D_{q-1}.
LaurentPolynomial d_poly(std::int64_t q, std::int64_t k, std::int64_t m);

// 6 - 4q + 2k(m+1)(q-1); the exact term count of delta for m >= 1.
std::int64_t term_count_formula(const FamilyParams& p);

// Psi leaves delta alone; Phi swaps the roles of x and s.
LaurentPolynomial delta_embedded(const FamilyParams& p, const Embedding& e);

}  // namespace braidalex
