#pragma once

// The acceptance suites. Each one draws its random inputs from the context
// and records exact checks; thresholds and limits are fixed here.

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arithtrace/oracles.hpp"
#include "arithtrace/suite.hpp"

namespace arithtrace::suites {

inline constexpr int kTraceQuadruples = 500;
inline constexpr long kSymbolGridBound = 10;
inline constexpr int kParityPairs = 200;
inline constexpr int kRandomGraphs = 20;
inline constexpr int kPathsPerGraph = 50;
inline constexpr int kMaxPathLength = 12;
inline constexpr int kKroneckerMaxIndex = 30;
inline constexpr int kKroneckerMaxDegree = 24;
inline constexpr int kKroneckerOracleSamples = 400;
inline constexpr int kKroneckerOraclePowers = 64;
inline constexpr int kPadicDigits = 16;
inline constexpr int kCongruenceMatrices = 100;
inline constexpr int kBorelSamples = 100;

namespace detail {

inline NumberField sqrt2_field() { return NumberField(ZPoly{Integer(-2), Integer(0), Integer(1)}); }
inline NumberField eisenstein_field() { return NumberField(ZPoly{Integer(1), Integer(1), Integer(1)}); }

inline AlgebraicNumber random_element(SuiteContext& ctx, const NumberField& K, long bound, long den = 1) {
  std::vector<Rational> c;
  for (int i = 0; i < K.degree(); ++i) c.push_back(ctx.small_rational(bound, den));
  return K.from_coords(std::move(c));
}

inline AlgebraicNumber random_nonzero(SuiteContext& ctx, const NumberField& K, long bound, long den = 1) {
  for (;;) {
    AlgebraicNumber a = random_element(ctx, K, bound, den);
    if (!a.is_zero()) return a;
  }
}

/// Upper unipotent, lower unipotent, diagonal, upper unipotent: determinant 1.
inline Mat2 random_sl2(SuiteContext& ctx, const NumberField& K, long bound, long den) {
  auto o = K.one(), z = K.zero();
  AlgebraicNumber r = random_nonzero(ctx, K, bound, den);
  Mat2 U({{o, random_element(ctx, K, bound, den)}, {z, o}});
  Mat2 L({{o, z}, {random_element(ctx, K, bound, den), o}});
  Mat2 D({{r, z}, {z, r.inverse()}});
  Mat2 V({{o, random_element(ctx, K, bound, den)}, {z, o}});
  return U * L * D * V;
}

inline Mat2 random_sl2_integral(SuiteContext& ctx, long bound) {
  NumberField Q;
  auto o = Q.one(), z = Q.zero();
  auto e = [&] { return Q.from_rational(Rational(ctx.uniform(-bound, bound))); };
  return Mat2({{o, e()}, {z, o}}) * Mat2({{o, z}, {e(), o}}) * Mat2({{o, e()}, {z, o}});
}

inline Quaternion random_invertible(SuiteContext& ctx, const HilbertSymbolAlgebra& alg) {
  for (;;) {
    const NumberField& K = alg.field();
    Quaternion q(alg, random_element(ctx, K, 3), random_element(ctx, K, 3), random_element(ctx, K, 3),
                 random_element(ctx, K, 3));
    if (!q.norm().is_zero()) return q;
  }
}

/// x y x^-1 y^-1 has norm one.
inline Quaternion random_norm_one(SuiteContext& ctx, const HilbertSymbolAlgebra& alg) {
  Quaternion x = random_invertible(ctx, alg), y = random_invertible(ctx, alg);
  return x * y * x.inverse() * y.inverse();
}

inline Digraph random_irreducible_graph(SuiteContext& ctx) {
  for (;;) {
    int n = static_cast<int>(ctx.uniform(1, 4));
    int e = static_cast<int>(ctx.uniform(n, 7));
    std::vector<Edge> edges;
    for (int i = 0; i < e; ++i) edges.push_back({static_cast<int>(ctx.uniform(0, n - 1)), static_cast<int>(ctx.uniform(0, n - 1))});
    Digraph g(n, std::move(edges));
    if (is_irreducible(g)) return g;
  }
}

inline Sl2Labeling random_labeling(SuiteContext& ctx, const Digraph& g, bool integral) {
  Sl2Labeling l;
  for (int e = 0; e < g.edge_count(); ++e)
    l.set(e, integral ? random_sl2_integral(ctx, 2) : random_sl2(ctx, NumberField(), 3, 3));
  return l;
}

/// Steps leaving v in the underlying undirected graph.
inline std::vector<Step> undirected_steps(const Digraph& g, int v) {
  std::vector<Step> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).tail == v) out.push_back({e, false});
    if (g.edge(e).head == v) out.push_back({e, true});
  }
  return out;
}

/// A random walk of length 1..8 closed up by a shortest undirected path.
inline CombPath random_closed_path(SuiteContext& ctx, const Digraph& g) {
  int start = static_cast<int>(ctx.uniform(0, g.vertex_count() - 1));
  std::vector<Step> steps;
  int v = start;
  long len = ctx.uniform(1, 8);
  for (long i = 0; i < len; ++i) {
    auto opts = undirected_steps(g, v);
    Step s = opts[static_cast<std::size_t>(ctx.uniform(0, static_cast<long>(opts.size()) - 1))];
    steps.push_back(s);
    v = CombPath::end_of(g, s);
  }
  // breadth-first search back to start
  std::vector<std::optional<Step>> via(static_cast<std::size_t>(g.vertex_count()));
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<int> q{v};
  seen[static_cast<std::size_t>(v)] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (const auto& s : undirected_steps(g, u)) {
      int w = CombPath::end_of(g, s);
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      via[static_cast<std::size_t>(w)] = s;
      q.push_back(w);
    }
  }
  std::vector<Step> back;
  for (int u = start; u != v;) {
    Step s = *via[static_cast<std::size_t>(u)];
    back.push_back(s);
    u = CombPath::start_of(g, s);
  }
  steps.insert(steps.end(), back.rbegin(), back.rend());
  return CombPath(g, std::move(steps));
}

/// The twenty graphs shared by the cycle-trace and normal-generation suites.
inline std::vector<Digraph> shared_graphs(std::uint64_t seed) {
  SuiteContext ctx(seed ^ 0x6a09e667f3bcc909ULL);
  std::vector<Digraph> out;
  for (int i = 0; i < kRandomGraphs; ++i) out.push_back(random_irreducible_graph(ctx));
  return out;
}

inline Mat2 parabolic_upper(const NumberField& K) { return Mat2({{K.one(), K.one()}, {K.zero(), K.one()}}); }

/// <[[1,1],[0,1]], [[1,0],[w,1]]> with w a primitive cube root of unity.
inline GroupRep parabolic_pair() {
  NumberField K = eisenstein_field();
  return GroupRep(K, {parabolic_upper(K), Mat2({{K.one(), K.zero()}, {K.generator(), K.one()}})});
}

inline GroupRep quaternion_group_rep() {
  NumberField K(ZPoly{Integer(1), Integer(0), Integer(1)});
  auto i = K.generator(), o = K.one(), z = K.zero();
  return GroupRep(K, {Mat2({{i, z}, {z, -i}}), Mat2({{z, o}, {-o, z}})});
}

inline Matrix<Rational> random_rational_matrix(SuiteContext& ctx, std::size_t n) {
  Matrix<Rational> m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ctx.small_rational(5, 3);
  return m;
}

inline Matrix<Rational> random_invertible_rational(SuiteContext& ctx, std::size_t n) {
  for (;;) {
    Matrix<Rational> m = random_rational_matrix(ctx, n);
    if (m.det() != 0) return m;
  }
}

inline std::string poly_name(const ZPoly& f) { return f.to_string(); }

}  // namespace detail

// 1
inline void suite_trace_relations(SuiteContext& ctx, Checker& c) {
  NumberField Q, K2 = detail::sqrt2_field();
  auto r2 = K2.generator();
  std::vector<HilbertSymbolAlgebra> algebras{
      HilbertSymbolAlgebra(Q.from_rational(-1), Q.from_rational(-1)),
      HilbertSymbolAlgebra(Q.from_rational(2), Q.from_rational(5)),
      HilbertSymbolAlgebra(K2.from_rational(-1), K2.from_rational(-1)),
      HilbertSymbolAlgebra(r2, K2.from_rational(-3)),
  };
  auto run_relations = [&](const auto& quad, const std::string& where) {
    for (auto r : all_trace_relations()) {
      std::size_t k = trace_relation_arity(r);
      std::vector<std::decay_t<decltype(quad[0])>> args(quad.begin(), quad.begin() + static_cast<std::ptrdiff_t>(k));
      c.expect(trace_relation_check(r, args), std::string(trace_relation_name(r)) + " fails in " + where);
    }
  };
  for (const NumberField& K : {Q, K2}) {
    std::string fname = K.is_rational_field() ? "Q" : "Q(sqrt 2)";
    for (int n = 0; n < kTraceQuadruples; ++n) {
      // Hilbert-symbol model, alternating between a definite and an indefinite algebra
      const auto& alg = algebras[(K.is_rational_field() ? 0 : 2) + static_cast<std::size_t>(n % 2)];
      std::vector<Quaternion> quad;
      for (int i = 0; i < 4; ++i) quad.push_back(detail::random_norm_one(ctx, alg));
      run_relations(quad, "quaternion model " + alg.to_string() + " over " + fname);
      // split model
      std::vector<Mat2> mats;
      for (int i = 0; i < 4; ++i) mats.push_back(detail::random_sl2(ctx, K, 3, 2));
      run_relations(mats, "matrix model over " + fname);
      Quaternion q = quaternion_from_matrix(mats[0]);
      c.expect(matrix_from_quaternion(q) == mats[0] && q.trace() == mats[0].trace() && q.norm() == mats[0].det(),
               "split model round trip over " + fname);
    }
  }
}

// 2
inline void suite_local_symbols(SuiteContext& ctx, Checker& c) {
  const std::vector<long> primes{2, 3, 5, 7, 11, 13, 0};
  for (long a = -kSymbolGridBound; a <= kSymbolGridBound; ++a)
    for (long b = -kSymbolGridBound; b <= kSymbolGridBound; ++b) {
      if (a == 0 || b == 0) continue;
      for (long p : primes) {
        RationalPlace place = p == 0 ? RationalPlace::infinity() : RationalPlace::prime(Integer(p));
        int formula = hilbert_symbol_local(Rational(a), Rational(b), place);
        int brute = oracles::brute_force_symbol(a, b, p);
        c.expect(formula == brute, "(" + std::to_string(a) + ", " + std::to_string(b) + ") at " +
                                       (p ? std::to_string(p) : std::string("inf")) + ": formula " +
                                       std::to_string(formula) + ", oracle " + std::to_string(brute));
      }
      // product formula over every place where the symbol can be -1
      int prod = hilbert_symbol_local(Rational(a), Rational(b), RationalPlace::infinity());
      for (const auto& p : prime_divisors(Integer(2 * a * b)))
        prod *= hilbert_symbol_local(Rational(a), Rational(b), RationalPlace::prime(p));
      c.expect(prod == 1, "product formula fails for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
  for (int n = 0; n < kParityPairs; ++n) {
    Rational a = make_rational(Integer(ctx.nonzero(60)), Integer(ctx.uniform(1, 12)));
    Rational b = make_rational(Integer(ctx.nonzero(60)), Integer(ctx.uniform(1, 12)));
    auto ram = ramification_set(HilbertSymbolAlgebra(a, b));
    c.expect(ram.size() % 2 == 0, "odd ramification for (" + to_string(a) + ", " + to_string(b) + ")");
  }
}

// 3
inline void suite_hamilton(SuiteContext&, Checker& c) {
  HilbertSymbolAlgebra H(Rational(-1), Rational(-1));
  auto ram = ramification_set(H);
  c.expect(ram.primes() == std::vector<Integer>{Integer(2)}, "finite ramification of (-1, -1) is not {2}");
  c.expect(ram.real_places.size() == 1, "(-1, -1) is not ramified at the real place");
  for (long p : {0L, 2L, 3L, 5L, 7L}) {
    int brute = oracles::brute_force_symbol(-1, -1, p);
    std::vector<Integer> ps = ram.primes();
    bool listed = p == 0 ? !ram.real_places.empty() : std::find(ps.begin(), ps.end(), Integer(p)) != ps.end();
    c.expect(listed == (brute == -1), "oracle disagrees with the ramification set at " + std::to_string(p));
  }
}

// 4
inline void suite_cycle_traces(SuiteContext& ctx, Checker& c) {
  NumberField Q;
  for (const auto& g : detail::shared_graphs(ctx.seed)) {
    Sl2Labeling labels = detail::random_labeling(ctx, g, false);
    Sl2Labeling other = detail::random_labeling(ctx, g, false);
    Sl2Labeling integral = detail::random_labeling(ctx, g, true);
    auto trace_under = [&](const Sl2Labeling& l) {
      return [&g, &l](const DynamicalCycle& cyc) {
        std::vector<Step> steps;
        for (int e : cyc.edges) steps.push_back({e, false});
        return holonomy(CombPath(g, std::move(steps)), l).trace();
      };
    };
    for (int n = 0; n < kPathsPerGraph; ++n) {
      CombPath path = detail::random_closed_path(ctx, g);
      std::string where = path.to_string(g);
      c.expect(path.is_closed() && static_cast<int>(path.steps().size()) <= kMaxPathLength, "bad sample path " + where);
      TraceReduction red = cycle_trace_reduce(g, path, labels);
      c.expect(red.value == holonomy(path, labels).trace(), "reduced value differs from the trace of " + where);
      // the polynomial does not depend on the labeling
      c.expect(red.polynomial.evaluate(Q, trace_under(other)) == holonomy(path, other).trace(),
               "polynomial of " + where + " fails under a second labeling");
      AlgebraicNumber zval = red.polynomial.evaluate(Q, trace_under(integral));
      c.expect(zval.rational_part().get_den() == 1 && zval == holonomy(path, integral).trace(),
               "integral labeling gives a non-integral value on " + where);
      DynamicalNormalForm nf = rewrite_to_dynamical_form(g, path);
      c.expect(holonomy(nf.to_path(g), labels) == holonomy(path, labels), "rewrite changes the holonomy of " + where);
    }
  }
}

// 5
inline void suite_normal_generation(SuiteContext& ctx, Checker& c) {
  std::map<int, int> needed;
  for (const auto& g : detail::shared_graphs(ctx.seed)) {
    int betti = g.edge_count() - g.vertex_count() + 1;
    std::optional<int> reached;
    for (int len = 1; len <= g.edge_count() + g.vertex_count(); ++len) {
      SpanResult r = cycle_span_rank(g, len);
      if (r.rank == betti && r.index && *r.index == 1) {
        reached = len;
        break;
      }
    }
    c.expect(reached.has_value(), "span never reaches full rank with index 1 by E + V");
    if (!reached) continue;
    ++needed[*reached];
    c.expect(stallings_generates(g, enumerate_dynamical_cycles(g, *reached)),
             "cycles up to length " + std::to_string(*reached) + " do not generate the free group");
  }
  std::string hist = "max_len reached:";
  for (const auto& [len, count] : needed) hist += " " + std::to_string(len) + "x" + std::to_string(count);
  c.note(hist);
}

// 6
inline void suite_alexander(SuiteContext& ctx, Checker& c) {
  const CyclotomicTable& phi = *ctx.phi;
  auto I = [](std::vector<std::vector<long>> m) {
    std::vector<std::vector<Integer>> out;
    for (auto& r : m) {
      std::vector<Integer> row;
      for (long v : r) row.push_back(Integer(v));
      out.push_back(row);
    }
    return out;
  };
  IntLaurentPoly tm1 = oracles::binomial_power_t_minus_1(1);
  IntLaurentPoly one = IntLaurentPoly::monomial(1, 0);

  IntLaurentPoly cat = alexander_from_monodromy(I({{2, 1}, {1, 1}}));
  c.expect(cat == IntLaurentPoly::from_poly(ZPoly{Integer(1), Integer(-3), Integer(1)}), "Delta of [[2,1],[1,1]] is " + cat.to_string());
  auto tau = reidemeister_torsion(cat);
  c.expect(tau.numerator == cat && tau.denominator == tm1 * tm1, "torsion of [[2,1],[1,1]] is " + tau.to_string());
  c.expect(!is_cyclotomic_product(cat, phi), "t^2 - 3t + 1 accepted as cyclotomic");
  c.expect(has_root_off_unit_circle(cat).off_circle, "t^2 - 3t + 1 not reported off the circle");

  for (int n = 1; n <= 4; ++n) {
    std::vector<std::vector<long>> id(static_cast<std::size_t>(n), std::vector<long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    IntLaurentPoly d = alexander_from_monodromy(I(id));
    c.expect(d == oracles::binomial_power_t_minus_1(n), "Delta of the identity of size " + std::to_string(n));
    auto t = reidemeister_torsion(d);
    bool reduced = n >= 2 ? (t.numerator == oracles::binomial_power_t_minus_1(n - 2) && t.denominator == one)
                          : (t.numerator == one && t.denominator == tm1);
    c.expect(reduced, "torsion of the identity of size " + std::to_string(n) + " is " + t.to_string());
    c.expect(is_cyclotomic_product(d, phi), "(t - 1)^n rejected");
  }
  c.expect(is_cyclotomic_product(alexander_from_monodromy(I({{0, 1}, {-1, 0}})), phi), "t^2 + 1 rejected");

  // every product of Phi_n, n <= 30, of degree <= 24
  std::vector<ZPoly> cyc;
  std::vector<int> deg;
  for (long n = 1; n <= kKroneckerMaxIndex; ++n) {
    cyc.push_back(cyclotomic_polynomial(n));
    deg.push_back(cyc.back().degree());
  }
  long total = 0, missed = 0;
  std::string first_miss;
  std::vector<ZPoly> samples;
  std::function<void(std::size_t, int, const ZPoly&)> walk = [&](std::size_t from, int d, const ZPoly& f) {
    if (d > 0) {
      ++total;
      if (!is_cyclotomic_product(IntLaurentPoly::from_poly(f), phi)) {
        if (missed++ == 0) first_miss = f.to_string();
      }
      if (ctx.uniform(0, 999) == 0) samples.push_back(f);
    }
    for (std::size_t i = from; i < cyc.size(); ++i)
      if (d + deg[i] <= kKroneckerMaxDegree) walk(i, d + deg[i], f * cyc[i]);
  };
  walk(0, 0, ZPoly::constant(Integer(1)));
  c.expect(missed == 0, std::to_string(missed) + " of " + std::to_string(total) + " cyclotomic products rejected, first " + first_miss);
  c.note(std::to_string(total) + " cyclotomic products checked");

  ZPoly lehmer{Integer(1), Integer(1), Integer(0), Integer(-1), Integer(-1), Integer(-1),
               Integer(-1), Integer(-1), Integer(0), Integer(1), Integer(1)};
  c.expect(!is_cyclotomic_product(IntLaurentPoly::from_poly(lehmer), phi), "Lehmer's polynomial accepted");
  c.expect(has_root_off_unit_circle(IntLaurentPoly::from_poly(lehmer)).off_circle, "Lehmer's polynomial not off the circle");

  // bounded power polynomials as an independent oracle, on sampled products
  // and on random monic polynomials with unit constant term
  for (const auto& f : samples)
    c.expect(oracles::power_polynomials_bounded(f, kKroneckerOraclePowers), "oracle rejects product " + f.to_string());
  for (int n = 0; n < kKroneckerOracleSamples; ++n) {
    int d = static_cast<int>(ctx.uniform(1, 8));
    std::vector<Integer> co{Integer(ctx.uniform(0, 1) ? 1 : -1)};
    for (int i = 1; i < d; ++i) co.push_back(Integer(ctx.uniform(-2, 2)));
    co.push_back(Integer(1));
    ZPoly f(co);
    bool lib = is_cyclotomic_product(IntLaurentPoly::from_poly(f), phi);
    bool oracle = oracles::power_polynomials_bounded(f, kKroneckerOraclePowers);
    c.expect(lib == oracle, "Kronecker test and power oracle disagree on " + f.to_string());
  }
}

// 7
inline void suite_padic(SuiteContext& ctx, Checker& c) {
  const int N = kPadicDigits;
  for (long pl : {3L, 5L, 7L}) {
    Integer p(pl);
    Integer mod = pow_int(p, static_cast<unsigned long>(N));
    for (int s = 0; s < 20; ++s) {
      PadicApprox lam(p, N, 1 + p * Integer(ctx.uniform(-1000000, 1000000)));
      for (long m = 0; m <= 20; ++m) {
        PadicApprox got = padic_binomial_pow(lam, PadicApprox(p, N, m));
        Integer want = mod_floor(pow_int(lam.residue(), static_cast<unsigned long>(m)), mod);
        c.expect(got.residue() == want, "lambda^" + std::to_string(m) + " at p = " + p.get_str());
      }
      PadicApprox inv = padic_binomial_pow(lam, PadicApprox(p, N, -1));
      c.expect(inv.residue() == invmod(lam.residue(), mod), "lambda^-1 at p = " + p.get_str());
      PadicApprox a(p, N, Integer(ctx.uniform(-1000000, 1000000))), b(p, N, Integer(ctx.uniform(-1000000, 1000000)));
      c.expect(padic_binomial_pow(lam, a + b) == padic_binomial_pow(lam, a) * padic_binomial_pow(lam, b),
               "lambda^(a+b) != lambda^a lambda^b at p = " + p.get_str());
    }
    for (int n = 0; n < kCongruenceMatrices; ++n) {
      auto e = [&] { return p * Integer(ctx.uniform(-50, 50)); };
      // unipotent products stay congruent to the identity mod p with determinant 1
      Integer x = e(), y = e(), z = e();
      Integer a11 = 1 + x * y, a12 = x + z + x * y * z, a21 = y, a22 = 1 + y * z;
      PadicMatrix A = {{{PadicApprox(p, N, a11), PadicApprox(p, N, a12)}, {PadicApprox(p, N, a21), PadicApprox(p, N, a22)}}};
      PadicMatrix Ai = sl2_padic_power(A, PadicApprox(p, N, -1));
      PadicApprox trA = A[0][0] + A[1][1], trAi = Ai[0][0] + Ai[1][1];
      c.expect(trA == trAi, "tr(A^-1) != tr(A) at p = " + p.get_str());
      c.expect(padic_matmul(A, Ai) == padic_identity(p, N), "A * A^-1 != 1 at p = " + p.get_str());
    }
  }
}

// 8
inline void suite_rep_invariants(SuiteContext&, Checker& c) {
  GroupRep rep = detail::parabolic_pair();
  ZPoly x2p3{Integer(3), Integer(0), Integer(1)};
  Subfield tf = trace_field(rep), itf = invariant_trace_field(rep);
  c.expect(tf.field().min_poly() == x2p3, "trace field is " + tf.field().min_poly().to_string());
  c.expect(itf.field().min_poly() == x2p3, "invariant trace field is " + itf.field().min_poly().to_string());
  Subfield words = oracles::word_trace_field(rep, 6);
  c.expect(words.field().min_poly() == tf.field().min_poly(), "word-trace oracle gives " + words.field().min_poly().to_string());
  Subfield squares = oracles::squared_trace_field(rep, 5);
  c.expect(squares.field().min_poly() == itf.field().min_poly(), "squared-trace oracle gives " + squares.field().min_poly().to_string());

  auto q = quaternion_algebra_of_rep(rep);
  auto iq = invariant_quaternion_algebra(rep);
  c.expect(q.verified, "symbol " + q.algebra.to_string() + " fails verification");
  c.expect(iq.verified, "invariant symbol " + iq.algebra.to_string() + " fails verification");
  auto base_ram = ramification_set(iq.algebra);

  auto compare = [&](const GroupRep& other, const std::string& what) {
    Subfield k = invariant_trace_field(other);
    c.expect(k.field().min_poly() == itf.field().min_poly(), what + ": invariant trace field " + k.field().min_poly().to_string());
    auto a = invariant_quaternion_algebra(other);
    c.expect(a.verified, what + ": invariant symbol fails verification");
    if (a.algebra.field() == iq.algebra.field())
      c.expect(same_ramification(ramification_set(a.algebra), base_ram), what + ": invariant algebra changes");
    auto full = quaternion_algebra_of_rep(other);
    c.expect(full.verified, what + ": symbol fails verification");
  };
  for (std::vector<int> s : {std::vector<int>{-1, 1}, {1, -1}, {-1, -1}}) {
    GroupRep tw = twist_rep(rep, s);
    compare(tw, "twist " + std::to_string(s[0]) + "," + std::to_string(s[1]));
    c.expect(pm1_equivalent(rep, tw), "twist not sign-equivalent");
  }
  for (std::vector<int> par : {std::vector<int>{1, 0}, {0, 1}, {1, 1}}) {
    GroupRep sub = restrict_rep(rep, index_two_subgroup(2, par));
    compare(sub, "index-two subgroup " + std::to_string(par[0]) + std::to_string(par[1]));
  }
  GroupRep q8 = detail::quaternion_group_rep();
  auto q8a = quaternion_algebra_of_rep(q8);
  c.expect(q8a.verified, "quaternion group symbol fails verification");
  c.expect(is_zariski_dense(q8).verdict == Verdict::False, "finite quaternion group reported dense");
}

// 9
inline void suite_census(SuiteContext&, Checker& c) {
  FiniteGroupTable C4 = FiniteGroupTable::cyclic(4);
  c.expect(zhat_equivalence_classes(C4).size() == 3, "C4 does not have 3 power classes");
  c.expect(zhat_equivalence_classes(FiniteGroupTable::cyclic(5)).size() == 2, "C5 does not have 2 power classes");
  c.expect(zhat_equivalence_classes(FiniteGroupTable::symmetric3()).size() == 3, "S3 does not have 3 power classes");
  Digraph rose = Digraph::rose(2);
  std::map<int, int> labels{{0, 1}, {1, 2}};
  // aa -> 2, ab -> 3 ~ 1, bb -> 0
  std::map<int, Integer> hand{{0, Integer(1)}, {1, Integer(1)}, {2, Integer(1)}};
  c.expect(orbit_class_census(rose, labels, C4, 2) == hand, "census at m = 2 differs from the hand count");
  for (int m = 1; m <= 6; ++m) {
    auto base = orbit_class_census(rose, labels, C4, m);
    c.expect(base == oracles::rose_census_brute_force(2, {1, 2}, 4, m), "census differs from brute force at m = " + std::to_string(m));
    for (int r = 1; r < m; ++r)
      c.expect(orbit_class_census(rose, labels, C4, m, {}, static_cast<std::size_t>(r)) == base,
               "census changes under rotation " + std::to_string(r) + " at m = " + std::to_string(m));
    auto trivial = orbit_class_census(rose, {{0, 0}, {1, 0}}, FiniteGroupTable::cyclic(1), m);
    Integer plain = 0;
    for (const auto& cyc : enumerate_dynamical_cycles(rose, m))
      if (static_cast<int>(cyc.length()) == m) plain += 1;
    c.expect(trivial.size() == 1 && trivial.begin()->second == plain, "trivial group census differs from the cycle count");
  }
}

// 10
inline void suite_borel(SuiteContext& ctx, Checker& c) {
  for (int n = 0; n < kBorelSamples; ++n) {
    auto X = detail::random_rational_matrix(ctx, static_cast<std::size_t>(ctx.uniform(1, 4)));
    c.expect(primitive_form_eval<Rational>({X}, 1) == X.trace(), "p_1 differs from the trace");
  }
  for (int n = 0; n < kBorelSamples; ++n) {
    std::size_t dim = static_cast<std::size_t>(ctx.uniform(2, 3));
    std::vector<Matrix<Rational>> X;
    for (int i = 0; i < 3; ++i) X.push_back(detail::random_rational_matrix(ctx, dim));
    Rational v = primitive_form_eval(X, 2);
    c.expect(v == oracles::borel_degree_two(X[0], X[1], X[2]), "p_2 differs from the closed form");
    std::vector<int> perm{0, 1, 2};
    do {
      int inv = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inv;
      std::vector<Matrix<Rational>> Y{X[static_cast<std::size_t>(perm[0])], X[static_cast<std::size_t>(perm[1])],
                                      X[static_cast<std::size_t>(perm[2])]};
      Rational w = primitive_form_eval(Y, 2);
      c.expect(w == (inv % 2 ? Rational(-v) : v), "p_2 is not antisymmetric");
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto g = detail::random_invertible_rational(ctx, dim);
    auto gi = g.inverse();
    std::vector<Matrix<Rational>> Z;
    for (const auto& x : X) Z.push_back(g * x * gi);
    c.expect(primitive_form_eval(Z, 2) == v, "p_2 is not conjugation invariant");
  }
}

inline const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> suites{
      {1, "trace-relations", {"quaternion", "trace"}, 10, suite_trace_relations},
      {2, "local-symbol-oracle", {"quaternion", "hilbert"}, 60, suite_local_symbols},
      {3, "hamilton", {"quaternion", "hilbert"}, 1, suite_hamilton},
      {4, "cycle-trace-reduction", {"symdyn", "dynamics"}, 60, suite_cycle_traces},
      {5, "normal-generation", {"symdyn", "homology", "stallings"}, 30, suite_normal_generation},
      {6, "alexander-torsion", {"torsion", "kronecker", "cyclotomic"}, 20, suite_alexander},
      {7, "padic-power", {"padic", "torsion"}, 20, suite_padic},
      {8, "rep-invariants", {"rep", "quaternion"}, 120, suite_rep_invariants},
      {9, "census", {"symdyn", "census", "group"}, 5, suite_census},
      {10, "borel-form", {"borel"}, 5, suite_borel},
  };
  return suites;
}

inline constexpr double kTotalLimitSeconds = 360;

}  // namespace arithtrace::suites
