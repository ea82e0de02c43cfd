#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "fangood/coloring.hpp"
#include "fangood/errors.hpp"
#include "fangood/graph.hpp"

namespace fangood {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long p, long long q = 1) { return Rational(p, q); }

inline std::string to_string(const Rational& r) {
  const BigInt p = boost::multiprecision::numerator(r), q = boost::multiprecision::denominator(r);
  return q == 1 ? p.str() : p.str() + "/" + q.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline long long burr_lower_bound(long long n, long long k, long long t) {
  (void)k;
  if (t < 1 || n < t) throw HypothesisError("burr bound needs n >= t >= 1");
  return 2 * (n - 1) + t;
}

inline Rational lemma26_upper(long long n, long long m, long long k) {
  if (n < 2) throw HypothesisError("order must be at least 2");
  return Rational(n) + Rational(2 * m * k) - Rational(2 * m, n);
}

inline Rational cor53_upper(long long n, long long m, long long k, long long t) {
  return lemma26_upper(n, m, k) + Rational((t - 1) * (2 * k + 1));
}

inline long long cor52_upper(long long n, long long k, long long t) {
  return 2 * n - 1 + (t - 1) * (2 * k + 1);
}

struct Section6Constants {
  Rational c, g, f, G, F;
};

inline Section6Constants section6_eval(long long k, long long t, const Rational& c) {
  if (k < 1 || t < 1) throw HypothesisError("k and t must be positive");
  if (c <= 0) throw HypothesisError("c must be positive");
  const Rational K(k), T(t);
  Section6Constants s;
  s.c = c;
  s.g = (2 * c + 12) * K * K * K + (c + 30) * K * K - 4 * K - 9;
  s.f = (8 * K * K * K + 4 * K * K - 36 * K + 19) * s.g / (c * K * K);
  s.G = 2 * (c + 6) * K * K * K * T + (c + 30) * K * K * T - 6 * K * K + 18 * K * T + 3 * T -
        13 * K - 6 + c / 4;
  s.F = (8 * K * T + 34 * T - 6) * s.G / c;
  return s;
}

// One theorem's verdict for an instance.
struct Applicability {
  std::string theorem;
  bool applies = false;
  std::string reason;  // failing inequality, or "hypotheses hold"
};

struct BoundsReport {
  long long n = 0, m = 0, k = 0, t = 0;
  long long burr_lower = 0;
  std::optional<Rational> lemma26_upper, cor53_upper;  // need n >= 2, no isolated vertex
  long long cor52_upper = 0;
  std::optional<long long> theorem_value;
  std::optional<std::string> chosen;  // theorem supplying theorem_value
  std::vector<Applicability> applicable;
  Section6Constants section6;
  bool section6_fan_applies = false;   // n >= f(k,c), e <= n(1+1/g)
  bool section6_tfan_applies = false;  // n >= max{f+3kt-k-2, F}, e <= n(1+1/G)
};

namespace detail {

inline bool is_tree(const Graph& g) { return is_connected(g) && g.size() + 1 == g.order(); }

inline bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (!is_tree(g)) return false;
  if (n <= 2) return true;
  return g.max_degree() == n - 1;
}

// e(G) <= n(1 + 1/den) exactly.
inline bool edges_within(long long n, long long m, const Rational& den) {
  return Rational(m) <= Rational(n) * (1 + 1 / den);
}

}  // namespace detail

inline BoundsReport applicability(const Graph& g, long long k, long long t,
                                 const Rational& c = Rational(96)) {
  if (!is_connected(g)) throw HypothesisError("graph is not connected");
  if (k < 1 || t < 1) throw HypothesisError("k and t must be positive");
  BoundsReport r;
  r.n = static_cast<long long>(g.order());
  r.m = static_cast<long long>(g.size());
  r.k = k;
  r.t = t;
  const long long n = r.n, m = r.m;
  r.burr_lower = n >= t ? burr_lower_bound(n, k, t) : 2 * (n - 1) + t;
  if (n >= 2 && !has_isolated_vertex(g)) {
    r.lemma26_upper = lemma26_upper(n, m, k);
    r.cor53_upper = cor53_upper(n, m, k, t);
  }
  r.cor52_upper = cor52_upper(n, k, t);

  auto add = [&](std::string name, std::vector<std::pair<bool, std::string>> conds) {
    Applicability a{std::move(name), true, "hypotheses hold"};
    for (auto& [ok, what] : conds)
      if (!ok) {
        a.applies = false;
        a.reason = what;
        break;
      }
    r.applicable.push_back(std::move(a));
  };
  const bool tree = detail::is_tree(g);
  const long long K = k, T = t;
  add("1.1", {{t == 1, "t = 1 fails"}, {k == 1, "k = 1 fails"}, {tree, "G is not a tree"}});
  const bool small_k = k >= 3 && k <= 5;
  add("1.2", {{t == 1, "t = 1 fails"},
              {detail::is_star(g), "G is not a star"},
              {small_k ? n >= 6 * (k - 1) : n >= k * k - k + 1,
               small_k ? "n >= 6(k-1) fails" : "n >= k^2-k+1 fails"}});
  add("1.3", {{t == 1, "t = 1 fails"},
              {tree, "G is not a tree"},
              {n >= 3 * k * k - 2 * k - 1, "n >= 3k^2-2k-1 fails"}});
  add("1.4", {{t == 1, "t = 1 fails"},
              {is_connected(g) && m == n, "G is not unicyclic"},
              {k >= 18, "k >= 18 fails"},
              {n >= k * k - k + 1, "n >= k^2-k+1 fails"}});
  add("1.5", {{t == 1, "t = 1 fails"},
              {n >= 36 * K * K * K * K, "n >= 36k^4 fails"},
              {detail::edges_within(n, m, Rational(204 * K * K * K + 126 * K * K)),
               "e(G) <= n(1+1/(204k^3+126k^2)) fails"}});
  add("1.6", {{detail::is_star(g), "G is not a star"},
              {n >= std::max(12 * T * K + 2 * K, 4 * T * K * K), "n >= max{12tk+2k, 4tk^2} fails"}});
  add("1.7", {{n >= 161 * T * T * K * K * K * K, "n >= 161t^2k^4 fails"},
              {detail::edges_within(n, m, Rational(204 * T * K * K * K + 147 * T * K * K)),
               "e(G) <= n(1+1/(204tk^3+147tk^2)) fails"}});
  for (const char* name : {"1.1", "1.2", "1.3", "1.4", "1.5", "1.6", "1.7"})
    for (const auto& a : r.applicable)
      if (a.theorem == name && a.applies && !r.chosen) {
        r.chosen = a.theorem;
        r.theorem_value = 2 * n + t - 2;
      }

  r.section6 = section6_eval(k, t, c);
  const auto& s6 = r.section6;
  r.section6_fan_applies = t == 1 && Rational(n) >= s6.f && detail::edges_within(n, m, s6.g);
  const Rational lower = std::max<Rational>(s6.f + 3 * K * T - K - 2, s6.F);
  r.section6_tfan_applies = Rational(n) >= lower && detail::edges_within(n, m, s6.G);
  return r;
}

// Two red cliques of order n-1 and t-1 extra vertices, everything else blue.
inline TwoColoring build_extremal_coloring(std::size_t n, std::size_t k, std::size_t t) {
  if (n < 2 || k < 1 || t < 1) throw HypothesisError("extremal coloring needs n >= 2, k, t >= 1");
  const std::size_t N = 2 * n + t - 3;
  TwoColoring c(N);
  const VertexId a = static_cast<VertexId>(n - 1), b = static_cast<VertexId>(2 * n - 2);
  for (VertexId u = 0; u < N; ++u)
    for (VertexId v = u + 1; v < N; ++v)
      if ((v < a) || (u >= a && v < b)) c.set_red(u, v);
  return c;
}

}  // namespace fangood
