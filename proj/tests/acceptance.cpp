// Acceptance suite: one pass/fail line per criterion, exact checks only.

#include <cstdint>
#include <iostream>
#include <random>
#include <vector>

#include "braidalex/braid.hpp"
#include "braidalex/family.hpp"
#include "braidalex/swinv.hpp"
#include "test_support.hpp"

using namespace braidalex;
using braidalex::testing::kSeed;
using braidalex::testing::naive_determinant;
using braidalex::testing::random_matrix;
using braidalex::testing::random_poly;

namespace {

int failures = 0;

void report(const char* name, bool ok, const char* note_on_failure = nullptr) {
  std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
  if (!ok) {
    ++failures;
    if (note_on_failure) std::cout << "     note: " << note_on_failure << "\n";
  }
}

constexpr const char* kDivergenceNote =
    "closed form diverges from the determinant for q >= 3 and k >= 2; the "
    "determinant path is the symmetrizable invariant (see README)";

const LaurentPolynomial x = LaurentPolynomial::variable_x();
const LaurentPolynomial s = LaurentPolynomial::variable_s();
const LaurentPolynomial t = LaurentPolynomial::variable_t();

LaurentPolynomial mono(int c, std::int64_t a, std::int64_t b, std::int64_t d) {
  return LaurentPolynomial::monomial(c, {a, b, d});
}

bool criterion_equivalence() {
  for (std::int64_t q = 2; q <= 8; ++q)
    for (std::int64_t k = 1; k <= 6; ++k)
      for (std::int64_t m = 0; m <= 6; ++m)
        if (!(delta_det({q, k, m}) == delta_closed({q, k, m}))) return false;
  return true;
}

bool criterion_term_count() {
  for (std::int64_t q = 2; q <= 8; ++q)
    for (std::int64_t k = 1; k <= 6; ++k)
      for (std::int64_t m = 1; m <= 6; ++m)
        if (delta_closed({q, k, m}).term_count() !=
            static_cast<std::size_t>(6 - 4 * q + 2 * k * (m + 1) * (q - 1)))
          return false;
  return true;
}

bool criterion_recursion() {
  const auto xt = x * t;
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::int64_t m = 0; m <= 6; ++m) {
      if (!(delta_closed({3, k, m}) - delta_closed({2, k, m}) ==
            xt * (delta_closed({2, k, m}) - delta_one(m))))
        return false;
      for (std::int64_t q = 3; q <= 7; ++q)
        if (!(delta_closed({q + 1, k, m}) - delta_closed({q, k, m}) ==
              xt * (delta_closed({q, k, m}) - delta_closed({q - 1, k, m}))))
          return false;
    }
  return true;
}

PolyMatrix matrix_power(const PolyMatrix& base, std::int64_t n) {
  PolyMatrix result = identity_matrix(static_cast<int>(base.rows()));
  for (std::int64_t i = 0; i < n; ++i) result = result * base;
  return result;
}

bool criterion_matrix_powers() {
  for (std::int64_t k = 1; k <= 10; ++k) {
    const auto lhs = matrix_power(c_matrix(2, 2, VarLabel::T), 2 * k - 1);
    if (!(lhs(0, 0) == LaurentPolynomial(1)) || !lhs(0, 1).is_zero() ||
        !(lhs(1, 0) == t * geometric_sum(-t, 2 * k - 1)) ||
        !(lhs(1, 1) == -pow(t, 2 * k - 1)))
      return false;
  }
  for (std::int64_t m = 1; m <= 10; ++m) {
    const auto lhs = matrix_power(c_matrix(2, 1, VarLabel::S) * c_matrix(2, 1, VarLabel::T), m);
    if (!(lhs(0, 0) == pow(s * t, m)) ||
        !(lhs(0, 1) == -(s - 1) * geometric_sum(s * t, m)) || !lhs(1, 0).is_zero() ||
        !(lhs(1, 1) == LaurentPolynomial(1)))
      return false;
  }
  return true;
}

bool criterion_known_values() {
  const auto delta211 = LaurentPolynomial(1) - mono(1, 2, 1, 2);
  const auto delta311 = LaurentPolynomial(1) - mono(1, 3, 1, 3);
  const auto delta221 =
      LaurentPolynomial(1) + x * (s * pow(t, 3) - s * t * t + t * t - t) - mono(1, 2, 1, 4);
  return delta_det({2, 1, 1}) == delta211 && delta_closed({2, 1, 1}) == delta211 &&
         delta_det({3, 1, 1}) == delta311 && delta_closed({3, 1, 1}) == delta311 &&
         delta_det({2, 2, 1}) == delta221 && delta_closed({2, 2, 1}) == delta221;
}

bool criterion_sw_symmetry() {
  for (std::int64_t q = 2; q <= 6; ++q)
    for (std::int64_t k = 1; k <= 5; ++k)
      for (std::int64_t m = 1; m <= 5; ++m)
        for (const auto kind : {EmbeddingKind::Psi, EmbeddingKind::Phi}) {
          SWInvariant sw;
          try {
            sw = sw_invariant({q, k, m}, {kind, 1});
          } catch (const std::logic_error&) {
            return false;
          }
          const auto inverted = invert_variables(sw.value);
          const bool symmetric = inverted == sw.value || inverted == -sw.value;
          if (!symmetric) return false;
        }
  return true;
}

bool criterion_distinguish() {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 1; k <= 10; ++k) ks.push_back(k);
  for (const auto kind : {EmbeddingKind::Psi, EmbeddingKind::Phi}) {
    const auto report = distinguish(2, 1, ks, {kind, 1});
    if (!report.pairwise_distinct || report.verdict() != "pairwise-non-isotopic") return false;
    std::int64_t expected = 2;
    for (const auto& row : report.rows) {
      if (row.basic_class_count != expected) return false;
      expected += 4;
    }
    if (!report.homology.primitive()) return false;
    const bool homology_ok = kind == EmbeddingKind::Phi
                                 ? report.homology.render() == "2[F] + 1[R_1]"
                                 : report.homology.render() == "1[F] + 2[R_1]";
    if (!homology_ok) return false;
  }
  return true;
}

bool suite_ring_axioms() {
  std::mt19937 rng(kSeed);
  const LaurentPolynomial zero, one(1);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    if (!(p + q == q + p && (p + q) + r == p + (q + r) && p * q == q * p &&
          (p * q) * r == p * (q * r) && p * (q + r) == p * q + p * r && p + zero == p &&
          p * one == p))
      return false;
  }
  return true;
}

bool suite_geometric_sums() {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<std::int64_t> exp(-4, 4);
  std::uniform_int_distribution<std::uint64_t> len(1, 12);
  for (int i = 0; i < 200; ++i) {
    const auto u = LaurentPolynomial::monomial(1, {exp(rng), exp(rng), exp(rng)});
    const auto n = len(rng);
    if (!(geometric_sum(u, n) * (u - 1) == pow(u, n) - LaurentPolynomial(1))) return false;
  }
  for (std::int64_t k = 1; k <= 20; ++k)
    if (!(geometric_sum(-t, 2 * k - 1) * (t + 1) == pow(t, 2 * k - 1) + LaurentPolynomial(1)))
      return false;
  return true;
}

bool suite_determinant_oracle() {
  std::mt19937 rng(kSeed);
  std::uniform_int_distribution<int> dims(2, 5);
  for (int i = 0; i < 200; ++i) {
    const auto m = random_matrix(rng, dims(rng));
    if (!(determinant(m) == naive_determinant(m))) return false;
  }
  return true;
}

bool suite_last_column_expansion() {
  const auto xt = x * t;
  // q = 2 case: the q-1 determinant is the 1x1 seed 1 - x(st)^m
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::int64_t m = 0; m <= 6; ++m) {
      const auto d_cur = delta_det({2, k, m});
      if (!(delta_det({3, k, m}) == d_cur + xt * (d_cur - delta_one(m)))) return false;
    }
  for (std::int64_t q = 3; q <= 7; ++q)
    for (std::int64_t k = 1; k <= 6; ++k)
      for (std::int64_t m = 0; m <= 6; ++m) {
        const auto d_prev = delta_det({q - 1, k, m});
        const auto d_cur = delta_det({q, k, m});
        const auto d_next = delta_det({q + 1, k, m});
        if (!(d_next == d_cur + xt * (d_cur - d_prev))) return false;
      }
  return true;
}

bool suite_block_construction() {
  for (std::int64_t q = 2; q <= 7; ++q)
    for (std::int64_t k = 1; k <= 5; ++k)
      for (std::int64_t m = 0; m <= 5; ++m) {
        const int n = static_cast<int>(q);
        const auto gamma = word_matrix(family_word({q, k, m}));
        PolyMatrix extended(n + 1, n + 1);
        for (int r = 0; r <= n; ++r)
          for (int c = 0; c <= n; ++c) extended(r, c) = LaurentPolynomial();
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) extended(r, c) = gamma(r, c);
        extended(n - 1, n) = LaurentPolynomial(1);
        for (int c = 0; c < n; ++c) extended(n, c) = t * gamma(n - 1, c);
        const auto direct = word_matrix(family_word({q + 1, k, m}));
        for (int r = 0; r <= n; ++r)
          for (int c = 0; c <= n; ++c)
            if (!(extended(r, c) == direct(r, c))) return false;
      }
  return true;
}

}  // namespace

int main() {
  report("1 determinant-closed-form equivalence (q in [2,8], k in [1,6], m in [0,6])",
         criterion_equivalence(), kDivergenceNote);
  report("2 term-count corollary 6-4q+2k(m+1)(q-1) on the grid with m >= 1",
         criterion_term_count());
  report("3 difference recursion with the Delta_1 seed", criterion_recursion());
  report("4 matrix-power identities for k, m in [1,10]", criterion_matrix_powers());
  report("5 known values Delta_{2;1,1}, Delta_{3;1,1}, Delta_{2;2,1}", criterion_known_values());
  report("6 SW charge-conjugation symmetry (q in [2,6], k in [1,5], m in [1,5])",
         criterion_sw_symmetry());
  report("7 distinguish report q=2 m=1 k in [1,10]: counts 2..38 step 4",
         criterion_distinguish());
  report("8a ring axioms, 200 random cases, seed 0x5eed1234", suite_ring_axioms());
  report("8b geometric-sum identities, 200 random cases + alternating sums",
         suite_geometric_sums());
  report("8c determinant vs cofactor oracle, 200 random matrices up to 5x5",
         suite_determinant_oracle());
  report("8d last-column expansion identity on the family grid (q >= 2 with the 1x1 seed)",
         suite_last_column_expansion(), kDivergenceNote);
  report("8e block construction of the extended word matrix (q >= 2)", suite_block_construction(),
         kDivergenceNote);
  return failures == 0 ? 0 : 1;
}
