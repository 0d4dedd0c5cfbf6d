// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <gmpxx.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cartierlab/artinian.hpp"
#include "cartierlab/cartier.hpp"
#include "cartierlab/cli.hpp"
#include "cartierlab/laurent.hpp"

using namespace cartierlab;
using nlohmann::json;

namespace {

std::string corpus(const std::string& f) { return std::string(CARTIERLAB_CORPUS_DIR) + "/" + f; }

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <class A, class B>
  void equal(const A& actual, const B& want, const std::string& what) {
    if (!(actual == want)) {
      std::ostringstream os;
      os << what << ": expected " << json(want).dump() << ", got " << json(actual).dump();
      failures.push_back(os.str());
    }
  }
};

int failed_criteria = 0;

void criterion(const std::string& id, const std::string& title, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  bool ok = c.failures.empty();
  if (!ok) ++failed_criteria;
  std::cout << (ok ? "PASS " : "FAIL ") << id << " " << title << "\n";
  for (const auto& f : c.failures) std::cout << "     " << f << "\n";
  std::cout.flush();
}

json run(const std::string& command, const std::string& file, CliOptions o = {}) {
  auto r = run_command(command, file.empty() ? "" : corpus(file), o);
  if (r.exit_code != 0) throw std::runtime_error(command + " " + file + " exited " + std::to_string(r.exit_code));
  return r.report["results"];
}

Extension load(const std::string& f) { return build_extension(load_extension_file(corpus(f))); }

std::vector<std::string> corpus_extensions() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(CARTIERLAB_CORPUS_DIR)) {
    std::string name = entry.path().filename().string();
    if (entry.path().extension() != ".toml" || name.rfind("bad_", 0) == 0 || name.rfind("base_", 0) == 0) continue;
    if (!load_extension_file(entry.path().string()).a) continue;
    out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Gröbner basis criterion on 20 random ideals in three orders.
void groebner_suite(Check& c) {
  std::mt19937_64 rng(20);
  const MonomialOrder orders[] = {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block_order(1)};
  int done = 0;
  for (int round = 0; done < 20; ++round) {
    Field k = round % 2 ? Field::prime(7) : Field::rationals();
    Ring r = PolyRing::make(k, {"x", "y", "z"}, orders[round % 3]);
    auto random_poly = [&](int terms) {
      Polynomial p(r);
      for (int i = 0; i < terms; ++i) {
        Exponents e{static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 3),
                    static_cast<std::uint32_t>(rng() % 3)};
        p += Polynomial::monomial(r, e, k.from_int(static_cast<long>(rng() % 9) - 4));
      }
      return p;
    };
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2 + round % 2; ++i) gens.push_back(random_poly(3));
    auto g = groebner_basis(r, gens);
    for (const auto& f : gens)
      c.expect(reduce(f, g).is_zero(), "generator " + f.to_string() + " does not reduce to 0");
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        c.expect(reduce(s_polynomial(g[i], g[j]), g).is_zero(), "S-pair does not reduce to 0");
    // reduced: monic, and no term of g_i divisible by another leading monomial
    for (std::size_t i = 0; i < g.size(); ++i) {
      c.expect(k.is_one(g[i].leading_coef()), "basis element not monic");
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      c.expect(reduce(g[i], others) == g[i], "basis not reduced");
    }
    ++done;
  }
}

std::size_t brute_force_components(const FiniteAlgebra& alg, std::uint64_t p) {
  const Field& k = alg.field();
  std::size_t total = 1;
  for (std::size_t i = 0; i < alg.dim(); ++i) total *= p;
  std::size_t idempotents = 0;
  for (std::size_t code = 0; code < total; ++code) {
    Vec v = alg.zero();
    std::size_t rest = code;
    for (std::size_t i = 0; i < alg.dim(); ++i) {
      v[i] = k.from_int(static_cast<std::int64_t>(rest % p));
      rest /= p;
    }
    if (alg.equal(alg.mul(v, v), v)) ++idempotents;
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < idempotents) ++n;
  return n;
}

void idempotent_suite(Check& c) {
  Field f5 = Field::prime(5);
  std::mt19937_64 rng(5);
  auto coef = [&]() { return f5.from_int(static_cast<std::int64_t>(rng() % 5)); };
  int tested = 0;
  for (int round = 0; tested < 10 && round < 500; ++round) {
    Ring r = PolyRing::make(f5, {"x", "y"});
    std::uint32_t a = 1 + rng() % 4, b = 1 + rng() % 2;
    Polynomial g1 = Polynomial::monomial(r, {a, 0}, f5.one());
    for (std::uint32_t i = 0; i < a; ++i) g1 += Polynomial::monomial(r, {i, 0}, coef());
    Polynomial g2 = Polynomial::monomial(r, {0, b}, f5.one());
    for (std::uint32_t i = 0; i < a; ++i)
      for (std::uint32_t j = 0; j < b; ++j) g2 += Polynomial::monomial(r, {i, j}, coef());
    Ideal id(r, {g1, g2});
    if (id.is_unit()) continue;
    auto alg = FiniteAlgebra::quotient(id);
    if (alg.dim() > 4) continue;
    auto n = component_count(alg);
    c.expect(n.known(), "component count unknown for " + id.to_string());
    if (n.known()) c.equal(*n.value, brute_force_components(alg, 5), "components of " + id.to_string());
    ++tested;
  }
  c.equal(tested, 10, "algebras tested");
}

void conductor_suite(Check& c) {
  int with_hints = 0;
  for (const auto& f : corpus_extensions()) {
    Extension e = load(f);
    if (e.hints().fractions.empty()) continue;
    ++with_hints;
    Conductor cd = conductor(e);
    // g * b_j lies in A for each conductor generator g and module generator b_j
    for (const auto& g : cd.generators) {
      Polynomial image = e.map(g);
      for (const auto& b : e.hints().module_generators)
        c.expect(e.contains(e.reduce_b(image * b)).member, f + ": " + g.to_string() + " * " + b.to_string());
    }
    // the fraction hints themselves: p_j = q_j * b_j in B
    for (std::size_t j = 0; j < e.hints().fractions.size(); ++j) {
      const auto& [p, q] = e.hints().fractions[j];
      c.expect(e.reduce_b(e.map(p) - e.map(q) * e.hints().module_generators[j]).is_zero(), f + ": fraction " +
                                                                                             std::to_string(j));
    }
  }
  c.expect(with_hints >= 4, "fewer than four corpus extensions carry fraction hints");
}

Vec random_unit(const Base& b, const std::vector<Vec>& idem, const std::vector<Vec>& nil, std::mt19937_64& rng) {
  const Field& k = b->field();
  Vec u = b->zero();
  for (const auto& e : idem) u = b->add(u, b->scale(e, k.from_int(static_cast<long>(rng() % 5) + 1)));
  for (const auto& n : nil) u = b->add(u, b->scale(n, k.from_int(static_cast<long>(rng() % 7) - 3)));
  return u;
}

void units_suite(Check& c) {
  std::mt19937_64 rng(50);
  std::vector<Base> bases;
  for (const char* f : {"base_dual.toml", "base_cube.toml", "base_split_dual.toml"})
    bases.push_back(load_base_file(corpus(f)));
  int made = 0;
  for (std::size_t bi = 0; bi < bases.size(); ++bi) {
    const Base& b = bases[bi];
    auto idem = ordered_idempotents(*b);
    auto nil = b->nilradical();
    if (!idem.known() || !nil.known()) {
      c.expect(false, "base " + std::to_string(bi) + " undecided");
      continue;
    }
    std::vector<LaurentElement> units;
    std::vector<std::vector<std::int64_t>> exps;
    int quota = bi < 2 ? 17 : 16;
    for (int i = 0; i < quota; ++i) {
      std::vector<std::int64_t> n;
      LaurentElement x(b);
      for (const auto& e : *idem.value) {
        n.push_back(static_cast<std::int64_t>(rng() % 7) - 3);
        x = x + LaurentElement::monomial(b, e, n.back());
      }
      x = x.scale(random_unit(b, *idem.value, *nil.value, rng));
      for (int f = 0; f < 2; ++f) {
        Vec a = b->zero();
        for (const auto& v : *nil.value) a = b->add(a, b->scale(v, b->field().from_int(static_cast<long>(rng() % 5) - 2)));
        std::int64_t deg = static_cast<std::int64_t>(1 + rng() % 3) * (f ? -1 : 1);
        x = x * (LaurentElement::constant(b, b->one()) + LaurentElement::monomial(b, a, deg));
      }
      auto d = bass_decompose(x);
      c.expect(d.recompose() == x, "round trip failed for " + x.to_string());
      c.equal(d.exponents, n, "exponents of " + x.to_string());
      units.push_back(x);
      exps.push_back(d.exponents);
      ++made;
    }
    for (std::size_t i = 0; i + 1 < units.size(); ++i) {
      auto d = bass_decompose(units[i] * units[i + 1]);
      std::vector<std::int64_t> sum(exps[i].size());
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = exps[i][j] + exps[i + 1][j];
      c.equal(d.exponents, sum, "additivity");
    }
  }
  c.equal(made, 50, "units tested");
}

void anodal_suite(Check& c) {
  int zero_ranks = 0;
  for (const auto& f : corpus_extensions()) {
    Extension e = load(f);
    LIResult li = li_auto(e, {}, true);
    if (!li.is_known() || *li.rank != 0) continue;
    ++zero_ranks;
    auto res = closure_search(e, WitnessKind::Anodal, 6);
    c.expect(res.witnesses.empty(), f + ": rank 0 but anodal witness " +
                                        (res.witnesses.empty() ? "" : res.witnesses.front().to_string()));
  }
  c.expect(zero_ranks >= 8, "only " + std::to_string(zero_ranks) + " rank-0 certificates in the corpus");
}

}  // namespace

int main() {
  criterion("1", "node: LI rank 1 via ConductorSquare and via five-term data", [](Check& c) {
    json r = run("li", "node.toml");
    c.equal(r["li"]["rank"], 1, "rank");
    c.equal(r["li"]["method"], "ConductorSquare", "method");
    CliOptions o;
    o.method = "fiveterm";
    json f = run("li", "node.toml", o);
    c.equal(f["li"]["rank"], 1, "five-term rank (file hints)");
    c.equal(f["li"]["method"], "FiveTermSequence", "five-term method");
    LIResult direct = li_five_term({1, 1, 1, 0, 1});
    c.equal(*direct.rank, 1, "five-term rank (literal data)");
  });

  criterion("2", "cusp: LI rank 0, seminormal witness t at bound 3", [](Check& c) {
    c.equal(run("li", "cusp.toml")["li"]["rank"], 0, "rank");
    CliOptions o;
    o.bound = 3;
    c.equal(run("seminormal", "cusp.toml", o)["witness"], "t", "witness");
  });

  criterion("3", "y^2 - x^2 over QQ[x]: stalks 0, 1, 1; five-term rank 0", [](Check& c) {
    CliOptions o;
    o.primes = "x; x-1";
    o.generic = true;
    json s = run("stalks", "lines.toml", o)["stalks"];
    c.equal(s[0]["stalk_rank"], 0, "stalk at (x)");
    c.equal(s[1]["stalk_rank"], 1, "stalk at (x - 1)");
    c.equal(s[2]["generic"], true, "third row is generic");
    c.equal(s[2]["stalk_rank"], 1, "generic stalk");
    CliOptions f;
    f.method = "fiveterm";
    c.equal(run("li", "lines.toml", f)["li"]["rank"], 0, "five-term rank");
  });

  criterion("4", "Laurent squaring: LI rank 0, stalk 1 at (s - 1)", [](Check& c) {
    c.equal(run("li", "laurent_square.toml")["li"]["rank"], 0, "rank");
    CliOptions o;
    o.primes = "s-1";
    c.equal(run("stalks", "laurent_square.toml", o)["stalks"][0]["stalk_rank"], 1, "stalk at (s - 1)");
  });

  criterion("5", "e^2 - e - bx over QQ[x]: fiber components 2 and 1; LI Unknown", [](Check& c) {
    CliOptions o;
    o.primes = "x; x-1";
    json s = run("stalks", "xnode_c.toml", o)["stalks"];
    c.equal(s[0]["fiber_components"], 2, "components at (x)");
    c.equal(s[1]["fiber_components"], 1, "components at (x - 1)");
    c.equal(s[0]["label"], "fiber components only", "label");
    json li = run("li", "xnode_c.toml");
    c.equal(li["li"]["status"], "Unknown", "status");
    c.equal(li["li"]["rank"], nullptr, "rank");
    c.equal(li["expected_rank_recorded"], 0, "recorded expectation");
  });

  criterion("6", "rank-data files: Z-example 1, 2-dim example 1", [](Check& c) {
    c.equal(run("li", "z_example.toml")["li"]["rank"], 1, "Z-example");
    c.equal(run("li", "two_dim.toml")["li"]["rank"], 1, "2-dim example");
  });

  criterion("7", "decomposition term counts for n = 0..5", [](Check& c) {
    for (unsigned n = 0; n <= 5; ++n) {
      std::vector<std::pair<std::string, mpz_class>> want{{"I", 1}};
      if (n) want.push_back({"L", n});
      mpz_class total = 0;
      for (unsigned i = 1; i <= n; ++i) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, i);
        mpz_class count = b << i;
        want.push_back({"N^" + std::to_string(i), count});
        total += count;
      }
      auto got = decomposition_terms(n);
      c.expect(got == want, "terms(" + std::to_string(n) + ")");
      mpz_class three_n;
      mpz_ui_pow_ui(three_n.get_mpz_t(), 3, n);
      c.expect(total == three_n - 1, "N-term total for n = " + std::to_string(n));
    }
  });

  criterion("8a", "Groebner bases of 20 random ideals", groebner_suite);
  criterion("8b", "F_5 idempotent counts against exhaustive enumeration", idempotent_suite);
  criterion("8c", "conductor certificates on corpus extensions", conductor_suite);
  criterion("8d", "Bass decomposition round trip and additivity on 50 units", units_suite);
  criterion("8e", "LI rank 0 implies no anodal witness up to degree 6", anodal_suite);

  criterion("8f", "tower check on A = QQ + x^2 QQ[t] inside node inside QQ[t]", [](Check& c) {
    LIResult ab = li_auto(load("tower_inner.toml"), {}, true);
    LIResult ac = li_auto(load("tower_outer.toml"), {}, true);
    LIResult bc = li_auto(load("node.toml"), {}, true);
    c.equal(ab.rank.value_or(-1), 0, "A in node");
    c.equal(ac.rank.value_or(-1), 1, "A in QQ[t]");
    c.equal(bc.rank.value_or(-1), 1, "node in QQ[t]");
    auto t = tower_check(ab, ac, bc);
    c.expect(t.known() && *t.value, "tower_check");
  });

  criterion("8g", "product rank of node x cusp", [](Check& c) {
    LIResult node = li_auto(load("node.toml"), {}, true);
    LIResult cusp = li_auto(load("cusp.toml"), {}, true);
    LIResult p = product_rank({node, cusp});
    c.expect(p.is_known(), "product rank unknown");
    c.equal(p.rank.value_or(-1), 1, "rank");
  });

  criterion("9", "QQ in QQ[u]/(u^2): reduced LI 0, NI nonzero from nilradicals", [](Check& c) {
    Extension e = load("nil_dual.toml");
    Extension red = li_reduce_red(e);
    c.equal(red.b().is_unit(), false, "reduced B is nonzero");
    LIResult li = li_auto(red, {}, true);
    c.equal(li.rank.value_or(-1), 0, "rank after reduction");
    NIVerdict ni = ni_verdict(e, 6);
    c.equal(to_string(ni.status), "NonZero", "NI status");
    auto nil = nil_comparison(e);
    c.equal(to_string(nil.status), to_string(NilStatus::Differ), "nilradicals");
    c.expect(ni.witness && nil.witness && *ni.witness == *nil.witness, "NI witness is the nilpotent");
  });

  std::cout << (failed_criteria ? "FAILED " : "ALL PASSED ") << failed_criteria << " criteria failing\n";
  return failed_criteria ? 1 : 0;
}
