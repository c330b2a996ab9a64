#include "braidalex/family.hpp"

#include <stdexcept>

namespace braidalex {

void Embedding::validate() const {
  if (rim_index != 1 && rim_index != 2) throw std::invalid_argument("rim index must be 1 or 2");
}

void FamilyParams::validate() const {
  if (q < 2) throw std::invalid_argument("family parameter q must be >= 2");
  if (k < 1) throw std::invalid_argument("family parameter k must be >= 1");
  if (m < 0) throw std::invalid_argument("family parameter m must be >= 0");
}

ColoredBraidWord family_word(const FamilyParams& p) {
  p.validate();
  ColoredBraidWord word;
  word.strands = static_cast<int>(p.q);
  for (std::int64_t i = p.q; i >= 3; --i)
    word.letters.push_back({static_cast<int>(i), VarLabel::T});
  for (std::int64_t i = 0; i < 2 * p.k - 1; ++i) word.letters.push_back({2, VarLabel::T});
  for (std::int64_t i = 0; i < p.m; ++i) {
    word.letters.push_back({1, VarLabel::S});
    word.letters.push_back({1, VarLabel::T});
  }
  return word;
}

LaurentPolynomial delta_det(const FamilyParams& p, int dimension_cap) {
  return char_det(word_matrix(family_word(p)), LaurentPolynomial::variable_x(), dimension_cap);
}

LaurentPolynomial delta_one(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  const auto st = LaurentPolynomial::monomial(1, {0, 1, 1});
  return LaurentPolynomial(1) - LaurentPolynomial::variable_x() * pow(st, m);
}

LaurentPolynomial p_poly(std::int64_t k, std::int64_t m) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  const auto s = LaurentPolynomial::variable_s();
  const auto t = LaurentPolynomial::variable_t();
  const auto st = s * t;
  return LaurentPolynomial::variable_t(2 * k - 1) +
         (s - 1) * t * geometric_sum(-t, 2 * k - 1) * geometric_sum(st, m);
}

LaurentPolynomial d_poly(std::int64_t q, std::int64_t k, std::int64_t m) {
  if (q < 1) throw std::invalid_argument("q must be >= 1");
  const auto x = LaurentPolynomial::variable_x();
  const auto xt = LaurentPolynomial::monomial(1, {1, 0, 1});
  const auto st_m = LaurentPolynomial::monomial(1, {0, m, m});
  const auto t_pow = LaurentPolynomial::variable_t(2 * k - 1);
  return pow(xt, q - 1) * (x * p_poly(k, m) - x * x * st_m * t_pow);
}

LaurentPolynomial delta_closed(const FamilyParams& p) {
  p.validate();
  const auto x = LaurentPolynomial::variable_x();
  const auto s = LaurentPolynomial::variable_s();
  const auto t = LaurentPolynomial::variable_t();
  const auto xt = x * t;
  const auto st_m = LaurentPolynomial::monomial(1, {0, p.m, p.m});
  const auto t_pow = LaurentPolynomial::variable_t(2 * p.k - 1);
  const auto bracket = t_pow +
                       (s - 1) * t * geometric_sum(-t, 2 * p.k - 1) * geometric_sum(s * t, p.m) -
                       x * st_m * t_pow;
  return LaurentPolynomial(1) - x * st_m + x * geometric_sum(xt, p.q - 1) * bracket;
}

std::int64_t term_count_formula(const FamilyParams& p) {
  p.validate();
  if (p.m < 1) throw std::invalid_argument("term-count formula requires m >= 1");
  return 6 - 4 * p.q + 2 * p.k * (p.m + 1) * (p.q - 1);
}

LaurentPolynomial delta_embedded(const FamilyParams& p, const Embedding& e) {
  e.validate();
  const auto delta = delta_closed(p);
  return e.kind == EmbeddingKind::Psi ? delta : substitute(delta, Substitution::swap_xs());
}

}  // namespace braidalex
