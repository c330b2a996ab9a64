#include "braidalex/swinv.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <stdexcept>

namespace braidalex {

const VarNames& SWInvariant::names() {
  static const VarNames names{"xi", "tau", "zeta"};
  return names;
}

SWInvariant sw_invariant(const FamilyParams& p, const Embedding& e) {
  p.validate();
  e.validate();
  if (p.m < 1) throw std::invalid_argument("sw_invariant requires m >= 1");

  // The determinant path is the symmetrizable invariant; the closed form
  // diverges from it for q >= 3, k >= 2 and fails the symmetry check there.
  const auto delta = delta_det(p);
  const std::int64_t zeta_shift = -(2 * p.k + p.q + p.m - 3);
  LaurentPolynomial value;
  if (e.kind == EmbeddingKind::Psi) {
    // xi^{-q} tau^{-m} zeta^{-(2k+q+m-3)} * delta(xi^2, tau^2, zeta^2)
    value = LaurentPolynomial::monomial(1, {-p.q, -p.m, zeta_shift}) *
            substitute(delta, Substitution::square());
  } else {
    // tau^{-q} xi^{-m} zeta^{-(2k+q+m-3)} * delta(tau^2, xi^2, zeta^2)
    const Substitution swap_square{{0, 2, 0}, {2, 0, 0}, {0, 0, 2}};
    value = LaurentPolynomial::monomial(1, {-p.m, -p.q, zeta_shift}) *
            substitute(delta, swap_square);
  }

  SWInvariant sw{std::move(value), 0};
  const auto inverted = invert_variables(sw.value);
  if (inverted == sw.value)
    sw.symmetry_sign = 1;
  else if (inverted == -sw.value)
    sw.symmetry_sign = -1;
  else
    throw std::logic_error("sw_invariant: symmetrization failed the symmetry check");
  return sw;
}

std::vector<std::pair<ExponentVector, Coeff>> basic_classes(const SWInvariant& sw) {
  std::vector<std::pair<ExponentVector, Coeff>> out;
  out.reserve(sw.value.term_count());
  for (const auto& [e, c] : sw.value.terms()) out.emplace_back(e, c);
  return out;
}

std::optional<LaurentPolynomial> center_symmetrize(const LaurentPolynomial& p) {
  if (p.is_zero()) return p;
  ExponentVector lo = p.terms().begin()->first;
  ExponentVector hi = lo;
  for (const auto& [e, c] : p.terms()) {
    lo = {std::min(lo.ex, e.ex), std::min(lo.es, e.es), std::min(lo.et, e.et)};
    hi = {std::max(hi.ex, e.ex), std::max(hi.es, e.es), std::max(hi.et, e.et)};
  }
  const ExponentVector span = hi + lo;
  if (span.ex % 2 != 0 || span.es % 2 != 0 || span.et % 2 != 0) return std::nullopt;
  const ExponentVector shift{-span.ex / 2, -span.es / 2, -span.et / 2};
  auto centered = LaurentPolynomial::monomial(1, shift) * p;
  const auto inverted = invert_variables(centered);
  if (inverted == centered || inverted == -centered) return centered;
  return std::nullopt;
}

bool HomologyClass::primitive() const { return std::gcd(fiber_coeff, rim_coeff) == 1; }

std::string HomologyClass::render() const {
  return std::to_string(fiber_coeff) + "[F] + " + std::to_string(rim_coeff) + "[R_" +
         std::to_string(rim_index) + "]";
}

HomologyClass homology_class(std::int64_t q, std::int64_t m, const Embedding& e) {
  e.validate();
  if (q < 2) throw std::invalid_argument("q must be >= 2");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (e.kind == EmbeddingKind::Phi) return {q, m, e.rim_index};
  return {m, q, e.rim_index};
}

DistinguishReport distinguish(std::int64_t q, std::int64_t m,
                              const std::vector<std::int64_t>& k_values, const Embedding& e) {
  if (k_values.empty()) throw std::invalid_argument("distinguish: empty k set");
  DistinguishReport report;
  report.q = q;
  report.m = m;
  report.embedding = e;
  report.homology = homology_class(q, m, e);

  std::set<std::int64_t> seen_counts;
  for (std::int64_t k : k_values) {
    const FamilyParams p{q, k, m};
    DistinguishRow row;
    row.k = k;
    row.sw = sw_invariant(p, e);
    row.basic_class_count = static_cast<std::int64_t>(row.sw.value.term_count());
    seen_counts.insert(row.basic_class_count);
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const DistinguishRow& a, const DistinguishRow& b) { return a.k < b.k; });
  report.pairwise_distinct = seen_counts.size() == report.rows.size();
  return report;
}

std::string DistinguishReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["q"] = q;
  doc["m"] = m;
  doc["embedding"] = embedding.kind == EmbeddingKind::Phi ? "phi" : "psi";
  doc["rim"] = embedding.rim_index;
  doc["homology"] = {{"F", homology.fiber_coeff},
                     {"R", homology.rim_coeff},
                     {"primitive", homology.primitive()}};
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    doc["rows"].push_back({{"k", row.k},
                           {"basic_classes", row.basic_class_count},
                           {"sw", nlohmann::ordered_json::parse(row.sw.to_json())}});
  }
  doc["verdict"] = verdict();
  return doc.dump(2);
}

std::string DistinguishReport::to_text() const {
  std::string out;
  out += "q=" + std::to_string(q) + " m=" + std::to_string(m) + " embedding=" +
         (embedding.kind == EmbeddingKind::Phi ? std::string("phi") : std::string("psi")) + "\n";
  out += "homology: " + homology.render() + (homology.primitive() ? " (primitive)" : "") + "\n";
  for (const auto& row : rows) {
    out += "k=" + std::to_string(row.k) +
           "  basic classes: " + std::to_string(row.basic_class_count) + "  SW = " +
           row.sw.render() + "\n";
  }
  out += "verdict: " + verdict() + "\n";
  return out;
}

}  // namespace braidalex
