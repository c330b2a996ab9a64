#include "braidalex/laurent.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace braidalex {

void LaurentPolynomial::insert_term(Coeff c, const ExponentVector& e) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, std::move(c));
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.insert_term(ca * cb, ea + eb);
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial pow(const LaurentPolynomial& p, std::uint64_t n) {
  LaurentPolynomial result(1);
  LaurentPolynomial base = p;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPolynomial geometric_sum(const LaurentPolynomial& base, std::uint64_t n) {
  LaurentPolynomial sum;
  LaurentPolynomial power(1);
  for (std::uint64_t i = 0; i < n; ++i) {
    sum += power;
    power *= base;
  }
  return sum;
}

LaurentPolynomial substitute(const LaurentPolynomial& p, const Substitution& sub) {
  LaurentPolynomial out;
  for (const auto& [e, c] : p.terms()) out += LaurentPolynomial::monomial(c, sub.apply(e));
  return out;
}

LaurentPolynomial invert_variables(const LaurentPolynomial& p) {
  LaurentPolynomial out;
  for (const auto& [e, c] : p.terms()) out += LaurentPolynomial::monomial(c, -e);
  return out;
}

namespace {

void append_power(std::string& out, const std::string& name, std::int64_t n) {
  if (n == 0) return;
  if (!out.empty()) out += '*';
  out += name;
  if (n != 1) {
    out += '^';
    out += std::to_string(n);
  }
}

}  // namespace

std::string LaurentPolynomial::render(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    append_power(factors, names.x, e.ex);
    append_power(factors, names.s, e.es);
    append_power(factors, names.t, e.et);
    if (factors.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += factors;
    }
  }
  return out;
}

std::string LaurentPolynomial::to_json(const VarNames& names) const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json term;
    term["c"] = c.str();
    term[names.x] = e.ex;
    term[names.s] = e.es;
    term[names.t] = e.et;
    terms.push_back(std::move(term));
  }
  nlohmann::ordered_json doc;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

LaurentPolynomial LaurentPolynomial::from_json(const std::string& text, const VarNames& names) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.contains("terms") || !doc["terms"].is_array())
    throw std::invalid_argument("polynomial JSON must contain a \"terms\" array");
  LaurentPolynomial out;
  for (const auto& term : doc["terms"]) {
    ExponentVector e{term.at(names.x).get<std::int64_t>(), term.at(names.s).get<std::int64_t>(),
                     term.at(names.t).get<std::int64_t>()};
    out += monomial(Coeff(term.at("c").get<std::string>()), e);
  }
  return out;
}

}  // namespace braidalex
