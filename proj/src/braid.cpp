#include "braidalex/braid.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace braidalex {

LaurentPolynomial label_monomial(VarLabel label) {
  return label == VarLabel::S ? LaurentPolynomial::variable_s() : LaurentPolynomial::variable_t();
}

char label_char(VarLabel label) { return label == VarLabel::S ? 's' : 't'; }

void ColoredBraidWord::validate() const {
  if (strands < 1) throw std::invalid_argument("braid word needs at least one strand");
  for (const auto& letter : letters) {
    if (letter.generator < 1 || letter.generator > strands)
      throw std::invalid_argument("generator index " + std::to_string(letter.generator) +
                                  " out of range for " + std::to_string(strands) + " strands");
  }
}

ColoredBraidWord ColoredBraidWord::parse(const std::string& text) {
  // "n: 2; w: t2 s1 t1"
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw std::invalid_argument("braid word: missing ';'");
  auto expect_key = [](std::istringstream& in, const std::string& key) {
    std::string tok;
    in >> tok;
    if (tok != key) throw std::invalid_argument("braid word: expected '" + key + "'");
  };

  ColoredBraidWord word;
  std::istringstream head(text.substr(0, semi));
  expect_key(head, "n:");
  if (!(head >> word.strands)) throw std::invalid_argument("braid word: bad strand count");

  std::istringstream body(text.substr(semi + 1));
  expect_key(body, "w:");
  std::string tok;
  while (body >> tok) {
    if (tok.size() < 2 || (tok[0] != 's' && tok[0] != 't'))
      throw std::invalid_argument("braid word: bad letter '" + tok + "'");
    BraidLetter letter;
    letter.label = tok[0] == 's' ? VarLabel::S : VarLabel::T;
    try {
      letter.generator = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("braid word: bad letter '" + tok + "'");
    }
    word.letters.push_back(letter);
  }
  word.validate();
  return word;
}

std::string ColoredBraidWord::format() const {
  std::string out = "n: " + std::to_string(strands) + "; w:";
  for (const auto& letter : letters) {
    out += ' ';
    out += label_char(letter.label);
    out += std::to_string(letter.generator);
  }
  return out;
}

PolyMatrix identity_matrix(int n) {
  PolyMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = LaurentPolynomial(r == c ? 1 : 0);
  return m;
}

PolyMatrix c_matrix(int n, int i, VarLabel label) {
  if (i < 1 || i > n) throw std::out_of_range("c_matrix: row index out of range");
  PolyMatrix m = identity_matrix(n);
  const LaurentPolynomial a = label_monomial(label);
  const int r = i - 1;
  m(r, r) = -a;
  if (r - 1 >= 0) m(r, r - 1) = a;
  if (r + 1 < n) m(r, r + 1) = LaurentPolynomial(1);
  return m;
}

PolyMatrix word_matrix(const ColoredBraidWord& word) {
  word.validate();
  PolyMatrix product = identity_matrix(word.strands);
  for (const auto& letter : word.letters)
    product = product * c_matrix(word.strands, letter.generator, letter.label);
  return product;
}

LaurentPolynomial determinant(const PolyMatrix& m, int dimension_cap) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const int n = static_cast<int>(m.rows());
  if (n > dimension_cap)
    throw std::invalid_argument("determinant: dimension " + std::to_string(n) +
                                " exceeds cap " + std::to_string(dimension_cap));
  if (n == 0) return LaurentPolynomial(1);

  // dp[mask] = determinant of the submatrix on rows 0..popcount(mask)-1 and
  // the column set mask.
  std::vector<LaurentPolynomial> dp(std::size_t{1} << n);
  dp[0] = LaurentPolynomial(1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int row = std::popcount(mask) - 1;
    LaurentPolynomial det;
    int position = 0;  // rank of column j within mask
    for (int j = 0; j < n; ++j) {
      if (!(mask & (std::uint32_t{1} << j))) continue;
      const LaurentPolynomial& entry = m(row, j);
      if (!entry.is_zero()) {
        LaurentPolynomial cofactor = entry * dp[mask ^ (std::uint32_t{1} << j)];
        if ((row + position) % 2 == 0)
          det += cofactor;
        else
          det -= cofactor;
      }
      ++position;
    }
    dp[mask] = std::move(det);
  }
  return dp[(std::uint32_t{1} << n) - 1];
}

LaurentPolynomial char_det(const PolyMatrix& m, const LaurentPolynomial& v, int dimension_cap) {
  const int n = static_cast<int>(m.rows());
  PolyMatrix shifted = identity_matrix(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) shifted(r, c) -= v * m(r, c);
  return determinant(shifted, dimension_cap);
}

}  // namespace braidalex
