#pragma once

// Seiberg-Witten invariants of the link surgery manifolds built on the
// B(q;k,m) family, basic-class extraction, and the distinguishing report.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidalex/family.hpp"
#include "braidalex/laurent.hpp"

namespace braidalex {

// Formal integer combination of classes in the (xi, tau, zeta) exponent
// lattice; the x/s/t slots of the underlying ring carry xi/tau/zeta.
struct SWInvariant {
  LaurentPolynomial value;
  int symmetry_sign = 0;  // +1 or -1: invert_variables(value) == sign * value

  static const VarNames& names();
  std::string render() const { return value.render(names()); }
  std::string to_json() const { return value.to_json(names()); }
};

// Squared-variable substitution of delta with the explicit monomial
// prefactor of the embedding; throws std::logic_error if the result fails
// the charge-conjugation symmetry check.
SWInvariant sw_invariant(const FamilyParams& p, const Embedding& e);

// Support of the invariant with coefficients, in graded-lex order.
std::vector<std::pair<ExponentVector, Coeff>> basic_classes(const SWInvariant& sw);

// Cross-check helper: the unique monomial shift (if any) centering the
// support so that it is symmetric under exponent negation.
std::optional<LaurentPolynomial> center_symmetrize(const LaurentPolynomial& p);

struct HomologyClass {
  std::int64_t fiber_coeff = 0;
  std::int64_t rim_coeff = 0;
  int rim_index = 1;

  bool primitive() const;
  std::string render() const;  // e.g. "2[F] + 1[R_1]"
};

// Phi -> q[F] + m[R_i]; Psi -> m[F] + q[R_i].
HomologyClass homology_class(std::int64_t q, std::int64_t m, const Embedding& e);

struct DistinguishRow {
  std::int64_t k = 0;
  std::int64_t basic_class_count = 0;
  SWInvariant sw;
};

struct DistinguishReport {
  std::int64_t q = 0;
  std::int64_t m = 0;
  Embedding embedding;
  HomologyClass homology;
  std::vector<DistinguishRow> rows;
  bool pairwise_distinct = false;

  std::string verdict() const {
    return pairwise_distinct ? "pairwise-non-isotopic" : "inconclusive";
  }
  std::string to_json() const;
  std::string to_text() const;
};

DistinguishReport distinguish(std::int64_t q, std::int64_t m,
                              const std::vector<std::int64_t>& k_values, const Embedding& e);

}  // namespace braidalex
