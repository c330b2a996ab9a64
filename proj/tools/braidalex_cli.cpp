// braidalex: compute the family Alexander polynomials, Seiberg-Witten
// invariants, and distinguishing reports from the command line.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "braidalex/braid.hpp"
#include "braidalex/family.hpp"
#include "braidalex/swinv.hpp"

namespace {

using namespace braidalex;

int dimension_cap_from_env() {
  if (const char* env = std::getenv("BRAID_ALEX_DIM_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("BRAID_ALEX_DIM_CAP must be an integer");
    }
  }
  return kDefaultDimensionCap;
}

Embedding make_embedding(const std::string& name, int rim) {
  Embedding e;
  if (name == "phi")
    e.kind = EmbeddingKind::Phi;
  else if (name == "psi")
    e.kind = EmbeddingKind::Psi;
  else
    throw std::invalid_argument("embedding must be phi or psi");
  e.rim_index = rim;
  e.validate();
  return e;
}

void print_poly(const LaurentPolynomial& p, const std::string& format, const VarNames& names) {
  if (format == "json")
    std::cout << p.to_json(names) << "\n";
  else
    std::cout << p.render(names) << "\n";
}

int run_alex(std::int64_t q, std::int64_t k, std::int64_t m, const std::string& method,
             const std::string& embedding, const std::string& format, const std::string& word) {
  if (!word.empty()) {
    const auto parsed = ColoredBraidWord::parse(word);
    const auto delta =
        char_det(word_matrix(parsed), LaurentPolynomial::variable_x(), dimension_cap_from_env());
    print_poly(delta, format, {});
    return 0;
  }
  const FamilyParams p{q, k, m};
  p.validate();
  LaurentPolynomial delta;
  if (method == "det")
    delta = delta_det(p, dimension_cap_from_env());
  else if (method == "closed")
    delta = delta_closed(p);
  else
    throw std::invalid_argument("method must be det or closed");
  const Embedding e = make_embedding(embedding, 1);
  if (e.kind == EmbeddingKind::Phi) delta = substitute(delta, Substitution::swap_xs());
  print_poly(delta, format, {});
  return 0;
}

int run_sw(std::int64_t q, std::int64_t k, std::int64_t m, const std::string& embedding, int rim,
           const std::string& format) {
  const FamilyParams p{q, k, m};
  const Embedding e = make_embedding(embedding, rim);
  const auto sw = sw_invariant(p, e);
  if (format == "json") {
    std::cout << "{\"sw\":" << sw.to_json() << ",\"basic_classes\":" << std::flush;
    std::string classes = "[";
    bool first = true;
    for (const auto& [vec, c] : basic_classes(sw)) {
      if (!first) classes += ',';
      first = false;
      classes += "{\"c\":\"" + c.str() + "\",\"xi\":" + std::to_string(vec.ex) +
                 ",\"tau\":" + std::to_string(vec.es) + ",\"zeta\":" + std::to_string(vec.et) +
                 "}";
    }
    classes += "]}";
    std::cout << classes << "\n";
  } else {
    std::cout << "SW = " << sw.render() << "\n";
    std::cout << "basic classes (" << sw.value.term_count() << "):\n";
    for (const auto& [vec, c] : basic_classes(sw))
      std::cout << "  (" << vec.ex << ", " << vec.es << ", " << vec.et << ")  coefficient " << c
                << "\n";
  }
  return 0;
}

int run_distinguish(std::int64_t q, std::int64_t m, std::int64_t k_min, std::int64_t k_max,
                    const std::string& embedding, int rim, const std::string& format) {
  if (k_min < 1 || k_max < k_min) throw std::invalid_argument("need 1 <= k-min <= k-max");
  std::vector<std::int64_t> ks;
  for (std::int64_t k = k_min; k <= k_max; ++k) ks.push_back(k);
  const auto report = distinguish(q, m, ks, make_embedding(embedding, rim));
  std::cout << (format == "json" ? report.to_json() : report.to_text()) << "\n";
  return 0;
}

struct Counterexample {
  bool found = false;
  FamilyParams at;
};

int run_verify(std::int64_t q_max, std::int64_t k_max, std::int64_t m_max) {
  if (q_max < 2 || k_max < 1 || m_max < 0) throw std::invalid_argument("bad verify bounds");
  const int cap = dimension_cap_from_env();
  bool all_pass = true;

  auto report = [&](const std::string& name, const Counterexample& cx) {
    if (!cx.found) {
      std::cout << "PASS " << name << "\n";
    } else {
      all_pass = false;
      std::cout << "FAIL " << name << " at (q=" << cx.at.q << ", k=" << cx.at.k
                << ", m=" << cx.at.m << ")\n";
    }
  };

  Counterexample equiv, recursion, count;
  const auto xt = LaurentPolynomial::monomial(1, {1, 0, 1});
  for (std::int64_t q = 2; q <= q_max && !equiv.found; ++q)
    for (std::int64_t k = 1; k <= k_max && !equiv.found; ++k)
      for (std::int64_t m = 0; m <= m_max && !equiv.found; ++m) {
        const FamilyParams p{q, k, m};
        if (!(delta_det(p, cap) == delta_closed(p))) equiv = {true, p};
      }
  for (std::int64_t k = 1; k <= k_max && !recursion.found; ++k)
    for (std::int64_t m = 0; m <= m_max && !recursion.found; ++m) {
      auto prev = delta_one(m);
      auto cur = delta_closed({2, k, m});
      for (std::int64_t q = 2; q < q_max; ++q) {
        const auto next = delta_closed({q + 1, k, m});
        if (!(next - cur == xt * (cur - prev))) {
          recursion = {true, {q, k, m}};
          break;
        }
        prev = cur;
        cur = next;
      }
    }
  for (std::int64_t q = 2; q <= q_max && !count.found; ++q)
    for (std::int64_t k = 1; k <= k_max && !count.found; ++k)
      for (std::int64_t m = 1; m <= m_max && !count.found; ++m) {
        const FamilyParams p{q, k, m};
        if (static_cast<std::int64_t>(delta_closed(p).term_count()) != term_count_formula(p))
          count = {true, p};
      }

  report("determinant-closed-form-equivalence", equiv);
  report("difference-recursion", recursion);
  report("term-count-formula", count);
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials and Seiberg-Witten invariants of the B(q;k,m) braid family"};
  app.require_subcommand(1);

  std::int64_t q = 2, k = 1, m = 1, k_min = 1, k_max = 1;
  std::int64_t q_max = 4, vk_max = 3, m_max = 3;
  std::string method = "closed", embedding = "psi", format = "text", word;
  int rim = 1;

  auto* alex = app.add_subcommand("alex", "Print the Alexander polynomial");
  alex->add_option("--q", q, "strand parameter (>= 2)");
  alex->add_option("--k", k, "twist parameter (>= 1)");
  alex->add_option("--m", m, "winding parameter (>= 0)");
  alex->add_option("--method", method, "det|closed")->default_str("closed");
  alex->add_option("--embedding", embedding, "phi|psi")->default_str("psi");
  alex->add_option("--format", format, "text|json")->default_str("text");
  alex->add_option("--word", word, "colored braid word, e.g. \"n: 2; w: t2 s1 t1\"");

  auto* sw = app.add_subcommand("sw", "Print the Seiberg-Witten invariant and basic classes");
  sw->add_option("--q", q)->required();
  sw->add_option("--k", k)->required();
  sw->add_option("--m", m)->required();
  sw->add_option("--embedding", embedding, "phi|psi");
  sw->add_option("--rim", rim, "rim torus index (1 or 2)");
  sw->add_option("--format", format, "text|json");

  auto* dist = app.add_subcommand("distinguish", "Report basic-class counts over a k range");
  dist->add_option("--q", q)->required();
  dist->add_option("--m", m)->required();
  dist->add_option("--k-min", k_min)->required();
  dist->add_option("--k-max", k_max)->required();
  dist->add_option("--embedding", embedding, "phi|psi");
  dist->add_option("--rim", rim, "rim torus index (1 or 2)");
  dist->add_option("--format", format, "text|json");

  auto* verify = app.add_subcommand("verify", "Run the equivalence/recursion/count sweeps");
  verify->add_option("--q-max", q_max);
  verify->add_option("--k-max", vk_max);
  verify->add_option("--m-max", m_max);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (alex->parsed()) return run_alex(q, k, m, method, embedding, format, word);
    if (sw->parsed()) return run_sw(q, k, m, embedding, rim, format);
    if (dist->parsed()) return run_distinguish(q, m, k_min, k_max, embedding, rim, format);
    return run_verify(q_max, vk_max, m_max);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
