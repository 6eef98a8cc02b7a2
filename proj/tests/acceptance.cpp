// Acceptance suite: end-to-end checks of the documented behavior, one
// verdict line per criterion. All arithmetic is exact, so every comparison
// is exact equality. Exits nonzero when any criterion fails.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "gen.hpp"
#include "teleseq/teleseq.hpp"

using namespace teleseq;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> failures;
  long long checks = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }

  template <typename F>
  void attempt(const std::string& what, F&& f) {
    ++checks;
    try {
      std::forward<F>(f)();
    } catch (const Error& e) {
      failures.push_back(what + " raised " + e.name() + ": " + e.what());
    }
  }
};

Sequence seq(const char* text) { return Sequence::parse(text); }

std::vector<Int> ints(std::initializer_list<long long> vs) {
  return std::vector<Int>(vs.begin(), vs.end());
}

void criterion_1(Criterion& c) {
  Sequence g = seq("660,550,352,50,201");
  c.expect(is_telescopic(g), "is_telescopic(660,550,352,50,201)");
  c.expect(gcd_profile(g).c == ints({6, 5, 11, 2}), "c(G) = (6,5,11,2)");
  Sequence mg = minimal_generators(g);
  c.expect(mg == seq("660,352,50,201"),
           "minimal_generators = (660,352,50,201), got " + mg.str());
  c.expect(!is_telescopic(seq("660,352,50,201")),
           "(660,352,50,201) is not telescopic");
  c.attempt("telescopic_reorder", [&] {
    Sequence r = telescopic_reorder(mg, g);
    c.expect(r == seq("660,50,352,201"),
             "reorder yields (660,50,352,201), got " + r.str());
    c.expect(is_telescopic(r), "reordered sequence is telescopic");
    c.expect(is_minimal_bf(r), "reordered sequence is minimal");
  });
}

void criterion_2(Criterion& c) {
  ConstructionRequest first;
  first.d = 4;
  first.c = ints({3, 2, 5, 3});
  first.z = ints({4, 4, 4, 4});
  c.attempt("build of the first construction", [&] {
    Sequence g = build(first);
    c.expect(g == seq("360,120,60,12,4"),
             "first construction = (360,120,60,12,4), got " + g.str());
    c.expect(is_telescopic(g), "first construction is telescopic");
    c.expect(g.gcd() == 4, "first construction has gcd 4");
    c.expect(gcd_profile(g).c == ints({3, 2, 5, 3}),
             "first construction has c = (3,2,5,3)");
    c.expect(!validate_minimal(first).minimal,
             "first construction fails the minimality conditions");
  });

  ConstructionRequest second;
  second.d = 4;
  second.c = ints({3, 2, 5, 3});
  second.z = ints({8, 20, 28, 44});
  c.attempt("build of the second construction", [&] {
    Sequence g = build(second);
    c.expect(g == seq("360,240,300,84,44"),
             "second construction = (360,240,300,84,44), got " + g.str());
  });
  // checked directly as well: the stated sequence itself
  c.expect(is_telescopic(seq("360,240,300,84,44")),
           "(360,240,300,84,44) is telescopic (it is not: 420 = c_4*g_4 is "
           "outside <360,240,300>)");
  c.attempt("validate_minimal of the second construction", [&] {
    c.expect(validate_minimal(second).minimal,
             "second construction passes the minimality conditions");
  });
}

void criterion_3(Criterion& c) {
  c.expect(rho(seq("660,550,352,50,201"), 2) == seq("110,352,50,201"),
           "rho_2(660,550,352,50,201) = (110,352,50,201)");
  c.expect(tau(seq("660,550,352,50,201"), 251, 3) ==
               seq("1980,1650,1056,150,603,251"),
           "tau_{251,3} = (1980,1650,1056,150,603,251)");
  c.expect(collapse(seq("4,6,9")).first == 1, "collapse(4,6,9) = 1");
  c.attempt("rebuild of (30,18,20,33)", [&] {
    auto [rebuilt, prog] = rebuild(z_decompose(seq("30,18,20,33")));
    c.expect(rebuilt == seq("30,18,20,33"),
             "rebuild returns (30,18,20,33), got " + rebuilt.str());
    c.expect(prog.steps.size() == 3, "rebuild uses three gluing steps");
  });
  c.attempt("morph both directions", [&] {
    Sequence g = seq("4,6,9"), h = seq("30,18,20,33");
    c.expect(apply_program(g, morph(g, h)) == h, "morph forward reaches H");
    c.expect(apply_program(h, morph(h, g)) == g, "morph backward reaches G");
  });
}

void criterion_4(Criterion& c) {
  auto [reduced, trace] = minimize_telescopic(seq("660,550,352,902,50,201"));
  c.expect(reduced == seq("660,50,352,201"),
           "minimization reaches (660,50,352,201), got " + reduced.str());
  c.expect(trace.size() == 2, "two reduction steps");
  for (const ReductionStep& step : trace) {
    c.expect(step.after == seq("660,550,352,50,201") ||
                 step.after == seq("660,50,352,902,201") ||
                 step.after == seq("660,50,352,201"),
             "intermediate " + step.after.str() + " is one of the documented "
             "sequences");
    c.expect(monoids_equal(step.before, step.after),
             "step preserves the monoid");
  }
}

void criterion_5(Criterion& c) {
  ConstructionRequest req;
  req.d = 1;
  req.c = ints({2, 3, 4, 5});
  req.z = ints({3, 5, 11, 22});
  c.attempt("build of the length-5 minimal example", [&] {
    Sequence g = build(req);
    c.expect(g == seq("120,180,100,55,22"),
             "build = (120,180,100,55,22), got " + g.str());
    c.expect(validate_minimal(req).minimal, "construction data is minimal");
    c.expect(is_telescopic(g), "result is telescopic");
  });
}

void criterion_6(Criterion& c) {
  std::mt19937 rng(9106);
  testgen::GenOptions opt;  // gcd 1, k <= 5, c_j <= 6, z_i <= 50
  opt.allow_unit_c = true;
  opt.zero_z_percent = 3;
  opt.min_k = 2;
  for (int iter = 0; iter < 500; ++iter) {
    Sequence g = testgen::random_telescopic(rng, opt);
    MonoidSummary s = gaps(g);
    Int fc = frobenius_closed(g);
    Int gc = genus_closed(g);
    if (fc != s.frobenius) {
      c.expect(false, g.str() + ": closed-form Frobenius " + fc.str() +
                          " != " + s.frobenius.str());
      continue;
    }
    if (gc != s.genus) {
      c.expect(false, g.str() + ": closed-form genus mismatch");
      continue;
    }
    if (fc != 2 * gc - 1) {
      c.expect(false, g.str() + ": not symmetric");
      continue;
    }
    std::vector<Int> bf = apery_bf(g, g.term(1));
    std::sort(bf.begin(), bf.end());
    if (apery_closed(g) != bf) {
      c.expect(false, g.str() + ": Apery sets differ");
      continue;
    }
    TelescopicView view(g);
    Int hi = s.frobenius + 2 * g.term(1);
    bool agree = true;
    for (Int n = 0; n <= hi && agree; ++n) {
      agree = view.contains(n) == contains(g, n);
    }
    c.expect(agree, g.str() + ": membership paths disagree");
  }
}

void criterion_7(Criterion& c) {
  std::mt19937 rng(9107);
  std::uniform_int_distribution<int> mult(1, 9);
  std::uniform_int_distribution<int> coeff(0, 3);
  testgen::GenOptions opt;
  opt.max_d = 4;
  opt.allow_unit_c = true;
  opt.min_k = 2;
  for (int done = 0; done < 500; ++done) {
    Sequence g = testgen::random_telescopic(rng, opt);
    while (g.size() < 2) g = testgen::random_telescopic(rng, opt);
    GcdProfile p = gcd_profile(g);
    std::size_t k = g.size();

    // round trip down-then-up at the last index
    Sequence down = rho(g, k);
    if (!(tau(down, g.term(k), p.c_value(k)) == g)) {
      c.expect(false, g.str() + ": tau(rho_k(G)) != G");
      continue;
    }
    // round trip up-then-down with a random valid gluing
    Int member = 0;
    for (const Int& t : g.terms()) member += coeff(rng) * t;
    if (member == 0) member = g.term(1);
    Int m(mult(rng));
    while (gcd(m, member / g.gcd()) != 1) m = mult(rng);
    Sequence up = tau(g, member, m);
    if (!(rho(up, k + 1) == g)) {
      c.expect(false, g.str() + ": rho(tau(G)) != G");
      continue;
    }

    // gcd and c bookkeeping
    std::uniform_int_distribution<std::size_t> pick(2, k);
    std::size_t n = pick(rng);
    Sequence contracted = rho(g, n);
    std::vector<Int> expected_c = p.c;
    expected_c.erase(expected_c.begin() + static_cast<std::ptrdiff_t>(n - 2));
    if (contracted.gcd() != g.gcd() ||
        gcd_profile(contracted).c != expected_c) {
      c.expect(false, g.str() + ": rho bookkeeping failed");
      continue;
    }
    std::vector<Int> glued_c = p.c;
    glued_c.push_back(m);
    if (up.gcd() != g.gcd() || gcd_profile(up).c != glued_c) {
      c.expect(false, g.str() + ": tau bookkeeping failed");
      continue;
    }

    // telescopy preservation
    bool preserved = is_telescopic(contracted) && is_telescopic(up);
    c.expect(preserved, g.str() + ": transform broke telescopy");
  }
}

std::vector<Sequence> reduction_corpus() {
  std::mt19937 rng(9108);
  testgen::GenOptions opt;
  opt.max_d = 3;
  opt.allow_unit_c = true;
  opt.case2_percent = 30;
  opt.zero_z_percent = 5;
  std::vector<Sequence> corpus;
  corpus.reserve(500);
  for (int iter = 0; iter < 500; ++iter) {
    corpus.push_back(testgen::random_telescopic(rng, opt));
  }
  return corpus;
}

void criterion_8(Criterion& c) {
  for (const Sequence& g : reduction_corpus()) {
    if (is_minimal_telescopic(g) != is_minimal_bf(g)) {
      c.expect(false, g.str() + ": minimality criteria disagree");
      continue;
    }
    auto [reduced, trace] = minimize_telescopic(g);
    bool ok = is_telescopic(reduced) && is_minimal_bf(reduced) &&
              monoids_equal(reduced, g) && trace.size() < g.size();
    c.expect(ok, g.str() + ": reduction output invalid");
  }
}

void criterion_9(Criterion& c) {
  std::mt19937 rng(9109);
  testgen::GenOptions opt;  // gcd 1 defaults
  opt.allow_unit_c = true;
  const std::vector<IntPolynomial> polys = {
      IntPolynomial::constant(1), IntPolynomial(ints({0, 1})),
      IntPolynomial(ints({0, 0, 1})), IntPolynomial(ints({0, 0, 0, 1}))};
  for (int iter = 0; iter < 100; ++iter) {
    Sequence g = testgen::random_telescopic(rng, opt);
    for (const IntPolynomial& f : polys) {
      auto [t_lhs, t_rhs] = tuenter_check(g, g.term(1), f);
      if (t_lhs != t_rhs) {
        c.expect(false, g.str() + ": Apery summation identity failed");
        continue;
      }
      auto [e_lhs, e_rhs] = gap_identity_check(g, f);
      c.expect(e_lhs == e_rhs, g.str() + ": explicit gap identity failed");
    }
  }
}

void criterion_10(Criterion& c) {
  for (const Sequence& g : reduction_corpus()) {
    if (g.size() < 2) continue;
    GcdProfile p = gcd_profile(g);
    for (std::size_t n = 1; n <= g.size(); ++n) {
      if (!contains(pi(g, n), g.term(n))) continue;
      bool case1 = n >= 2 && p.c_value(n) == 1;
      bool case2 = false;
      for (std::size_t m = n + 1; m <= g.size(); ++m) {
        if (g.term(n) == p.c_value(m) * g.term(m)) case2 = true;
      }
      c.expect(case1 || case2,
               g.str() + ": redundant index " + std::to_string(n) +
                   " admits neither removal case");
    }
  }
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<void(Criterion&)>>> table{
      {"minimal telescopic reordering of the 5-term example", criterion_1},
      {"gcd-4 constructions and their minimality verdicts", criterion_2},
      {"contraction, gluing, collapse, rebuild and morph examples",
       criterion_3},
      {"two-step reduction of the 6-term example", criterion_4},
      {"length-5 minimal construction example", criterion_5},
      {"closed forms vs oracles on 500 random instances", criterion_6},
      {"transform calculus on 500 random telescopic instances", criterion_7},
      {"minimization on 500 random telescopic instances", criterion_8},
      {"gap identities for polynomials up to degree 3", criterion_9},
      {"removal-case dichotomy audit over the reduction corpus",
       criterion_10}};

  int failed = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), table[i].first, {}, 0};
    table[i].second(c);
    if (c.failures.empty()) {
      std::cout << "criterion " << c.id << ": PASS (" << c.checks
                << " checks) - " << c.title << "\n";
    } else {
      ++failed;
      std::cout << "criterion " << c.id << ": FAIL - " << c.title << "\n";
      for (const std::string& f : c.failures) {
        std::cout << "    " << f << "\n";
      }
    }
  }
  if (failed) {
    std::cout << failed << " of " << table.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << table.size() << " criteria passed\n";
  return 0;
}
