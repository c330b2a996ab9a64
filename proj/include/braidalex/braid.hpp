#pragma once

// Colored braid words, their matrix representation, and exact determinants
// of polynomial matrices.

#include <Eigen/Core>
#include <cstddef>
#include <string>
#include <vector>

#include "braidalex/laurent.hpp"

namespace Eigen {

template <>
struct NumTraits<braidalex::LaurentPolynomial>
    : GenericNumTraits<braidalex::LaurentPolynomial> {
  using Real = braidalex::LaurentPolynomial;
  using NonInteger = braidalex::LaurentPolynomial;
  using Nested = braidalex::LaurentPolynomial;
  using Literal = braidalex::LaurentPolynomial;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static Real epsilon() { return Real(); }
  static Real dummy_precision() { return Real(); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace braidalex {

using PolyMatrix = Eigen::Matrix<LaurentPolynomial, Eigen::Dynamic, Eigen::Dynamic>;

enum class VarLabel { S, T };

LaurentPolynomial label_monomial(VarLabel label);
char label_char(VarLabel label);

// One letter sigma_i colored with s or t. Generator indices are 1-based and
// run up to the strand count: the row-i matrix exists for i = n via the
// boundary truncation rule.
struct BraidLetter {
  int generator = 1;
  VarLabel label = VarLabel::T;
};

struct ColoredBraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  void validate() const;

  // Text form "n: <strands>; w: t2 s1 t1" where each token is <label><generator>.
  static ColoredBraidWord parse(const std::string& text);
  std::string format() const;
};

// The n x n matrix that is the identity except in row i, where the entries at
// columns (i-1, i, i+1) are (a, -a, 1); out-of-range columns are dropped at
// the boundary rows i = 1 and i = n.
PolyMatrix c_matrix(int n, int i, VarLabel label);

PolyMatrix identity_matrix(int n);

// Product of the letters' matrices, first letter leftmost.
PolyMatrix word_matrix(const ColoredBraidWord& word);

inline constexpr int kDefaultDimensionCap = 16;

// Exact determinant by dynamic programming over column subsets
// (2^n * n polynomial operations); refuses dimensions above the cap.
LaurentPolynomial determinant(const PolyMatrix& m, int dimension_cap = kDefaultDimensionCap);

// det(I - v * M) for v one of the three ring variables.
LaurentPolynomial char_det(const PolyMatrix& m, const LaurentPolynomial& v,
                           int dimension_cap = kDefaultDimensionCap);

}  // namespace braidalex
