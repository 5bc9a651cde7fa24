// Ready-made algebra definitions used throughout the test corpus and the CLI.
//
//   kronecker : two vertices, two parallel arrows a,b: 2 -> 1
//   a_n       : linear quiver 1 -> 2 -> ... -> n
//   h_n       : two vertices with a,b: 2 -> 1, loops c at 1 and d at 2,
//               relations c^n, d^n, ca - ad, cb - bd
//
// h_1's defining relations would contain the length-one paths c and d, which
// no admissible ideal may contain; the quotient they describe is the plain
// Kronecker algebra, so h_n(1) returns exactly that quiver instead.

#pragma once

#include <string>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/fields.hpp"
#include "tautilt/rep.hpp"

namespace tautilt::builtins {

inline AlgebraDef kronecker() {
  AlgebraDef def;
  def.name = "kronecker";
  def.vertices = {"1", "2"};
  def.arrows = {{"a", "2", "1"}, {"b", "2", "1"}};
  def.nilpotency_bound = 2;
  return def;
}

inline AlgebraDef a_n(int n) {
  if (n < 1) throw UsageError("a_n needs n >= 1");
  AlgebraDef def;
  def.name = "a" + std::to_string(n);
  for (int i = 1; i <= n; ++i) def.vertices.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    def.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)});
  def.nilpotency_bound = n;
  return def;
}

inline AlgebraDef h_n(int n) {
  if (n < 1) throw UsageError("h_n needs n >= 1");
  if (n == 1) {
    AlgebraDef def = kronecker();
    def.name = "h1";
    return def;
  }
  AlgebraDef def;
  def.name = "h" + std::to_string(n);
  def.vertices = {"1", "2"};
  def.arrows = {{"a", "2", "1"}, {"b", "2", "1"}, {"c", "1", "1"}, {"d", "2", "2"}};
  std::vector<std::string> cn(static_cast<size_t>(n), "c");
  std::vector<std::string> dn(static_cast<size_t>(n), "d");
  def.relations.push_back({{"1", cn}});
  def.relations.push_back({{"1", dn}});
  def.relations.push_back({{"1", {"c", "a"}}, {"-1", {"a", "d"}}});
  def.relations.push_back({{"1", {"c", "b"}}, {"-1", {"b", "d"}}});
  def.nilpotency_bound = n + 1;
  return def;
}

// The band module family V_λ, λ = (λ_1, ..., λ_n) over h_n (or the Kronecker
// algebra when n = 1): both vertex components are K^n, the arrow a acts as the
// identity, b as the lower-triangular Toeplitz matrix Σ_k λ_k N^(k-1), and the
// loops c, d as the nilpotent lower shift N.
template <class S>
Representation<S> v_lambda(AlgebraPtr<S> alg, const std::vector<S>& lambda) {
  const auto& ctx = alg->ctx();
  Index n = static_cast<Index>(lambda.size());
  if (n == 0) throw UsageError("v_lambda needs at least one coefficient");
  if (alg->num_vertices() != 2) throw UsageError("v_lambda expects a two-vertex algebra");
  int v1 = alg->vertex_index("1"), v2 = alg->vertex_index("2");
  Mat<S> shift = detail::zero_mat(ctx, n, n);
  for (Index i = 0; i + 1 < n; ++i) shift(i + 1, i) = ctx.from_int(1);
  Mat<S> toeplitz = detail::zero_mat(ctx, n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j <= i; ++j) toeplitz(i, j) = lambda[static_cast<size_t>(i - j)];
  IVec dims = IVec::Zero(2);
  dims(v1) = n;
  dims(v2) = n;
  std::vector<Mat<S>> arrows(static_cast<size_t>(alg->num_arrows()));
  for (int k = 0; k < alg->num_arrows(); ++k) {
    const auto& a = alg->arrow(k);
    if (a.name == "a")
      arrows[static_cast<size_t>(k)] = detail::identity_mat(ctx, n);
    else if (a.name == "b")
      arrows[static_cast<size_t>(k)] = toeplitz;
    else if (a.name == "c" || a.name == "d")
      arrows[static_cast<size_t>(k)] = shift;
    else
      throw UsageError("v_lambda: unexpected arrow '" + a.name + "'");
  }
  return make_rep(alg, std::move(dims), std::move(arrows));
}

// Lookup by CLI name: "kronecker", "a<n>", "h<n>".
inline AlgebraDef by_name(const std::string& name) {
  if (name == "kronecker") return kronecker();
  auto tail_int = [&](size_t off) -> int {
    if (name.size() <= off) throw UsageError("unknown builtin algebra '" + name + "'");
    for (size_t i = off; i < name.size(); ++i)
      if (name[i] < '0' || name[i] > '9')
        throw UsageError("unknown builtin algebra '" + name + "'");
    return std::stoi(name.substr(off));
  };
  if (name[0] == 'a') return a_n(tail_int(1));
  if (name[0] == 'h') return h_n(tail_int(1));
  throw UsageError("unknown builtin algebra '" + name + "' (try kronecker, a2, h2, ...)");
}

}  // namespace tautilt::builtins
