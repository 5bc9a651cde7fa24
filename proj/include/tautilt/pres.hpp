// Two-term complexes of projectives P1 -> P0 ("presentations"): minimal
// presentations, g-vectors, homotopy-category invariants h and e, cokernels,
// uniform sampling at a fixed g-vector, and the numerical component handle
// obtained by sampling.

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/fields.hpp"
#include "tautilt/linalg.hpp"
#include "tautilt/rep.hpp"
#include "tautilt/rng.hpp"

namespace tautilt {

// γ = γ0 - γ1 with γ0, γ1 >= 0 of disjoint support.
inline std::pair<IVec, IVec> split_gvector(const IVec& gamma) {
  IVec g0 = gamma, g1 = gamma;
  for (Index i = 0; i < gamma.size(); ++i) {
    g0(i) = gamma(i) > 0 ? gamma(i) : 0;
    g1(i) = gamma(i) < 0 ? -gamma(i) : 0;
  }
  return {g0, g1};
}

// ⊕_i P_i^{mult_i}, copies stacked vertex-by-vertex, each copy contiguous.
template <class S>
Representation<S> proj_of_class(AlgebraPtr<S> alg, const IVec& mult) {
  if (mult.size() != alg->num_vertices()) throw UsageError("projective class length mismatch");
  Representation<S> out = zero_rep(alg);
  for (int i = 0; i < alg->num_vertices(); ++i) {
    if (mult(i) < 0) throw UsageError("projective class must be non-negative");
    for (long long c = 0; c < mult(i); ++c) out = direct_sum(out, projective(alg, i));
  }
  return out;
}

template <class S>
struct Presentation {
  AlgebraPtr<S> alg;
  IVec gamma;   // [P0] - [P1]
  IVec g0, g1;  // multiplicities of P0 and P1
  Representation<S> P0, P1;
  std::vector<Mat<S>> p;  // per-vertex intertwiner P1_i -> P0_i
};

namespace detail {

// Flatten a per-vertex matrix tuple into one vector (vertex blocks, row-major).
template <class S>
Vec<S> flatten_maps(const FieldContext<S>& ctx, const std::vector<Mat<S>>& f) {
  Index n = 0;
  for (const auto& m : f) n += m.rows() * m.cols();
  Vec<S> v(n);
  Index at = 0;
  for (const auto& m : f)
    for (Index r = 0; r < m.rows(); ++r)
      for (Index c = 0; c < m.cols(); ++c) v(at++) = m(r, c);
  while (at < n) v(at++) = ctx.from_int(0);
  return v;
}

template <class S>
std::vector<Mat<S>> compose_maps(const std::vector<Mat<S>>& g, const std::vector<Mat<S>>& f) {
  std::vector<Mat<S>> out;
  for (size_t i = 0; i < g.size(); ++i) out.push_back(g[i] * f[i]);
  return out;
}

template <class S>
Mat<S> path_action_or_id(const Representation<S>& V, const Path& rho, int vertex) {
  if (rho.empty()) return identity_mat(V.alg->ctx(), V.dims(vertex));
  return path_action(V, rho);
}

}  // namespace detail

// The module map ⊕P_i^{mult_i} -> V sending the generator of copy (i, c) to
// gens[i].col(c); column layout matches proj_of_class.
template <class S>
std::vector<Mat<S>> cover_map(const Representation<S>& V, const IVec& mult,
                              const std::vector<Mat<S>>& gens) {
  const auto& alg = *V.alg;
  const auto& ctx = alg.ctx();
  int nv = alg.num_vertices();
  std::vector<Mat<S>> cols(static_cast<size_t>(nv));
  for (int j = 0; j < nv; ++j) {
    Index total = 0;
    for (int i = 0; i < nv; ++i) total += mult(i) * alg.bucket_dim(i, j);
    cols[static_cast<size_t>(j)] = detail::zero_mat(ctx, V.dims(j), total);
  }
  std::vector<Index> at(static_cast<size_t>(nv), 0);
  for (int i = 0; i < nv; ++i) {
    for (long long c = 0; c < mult(i); ++c) {
      for (int j = 0; j < nv; ++j) {
        for (Index b = 0; b < alg.bucket_dim(i, j); ++b) {
          const Path& rho = alg.basis_path(alg.bucket(i, j)[static_cast<size_t>(b)]);
          Mat<S> act = detail::path_action_or_id(V, rho, i);
          cols[static_cast<size_t>(j)].col(at[static_cast<size_t>(j)]++) =
              act * gens[static_cast<size_t>(i)].col(c);
        }
      }
    }
  }
  return cols;
}

// rad V = sum of the arrow images, as a submodule
template <class S>
SubRep<S> radical_of(const Representation<S>& W) {
  const auto& alg = *W.alg;
  const auto& ctx = alg.ctx();
  std::vector<Mat<S>> seeds;
  for (int j = 0; j < alg.num_vertices(); ++j) {
    Index cols = 0;
    for (int k = 0; k < alg.num_arrows(); ++k)
      if (alg.arrow(k).to == j) cols += W.dims(alg.arrow(k).from);
    Mat<S> m = detail::zero_mat(ctx, W.dims(j), cols);
    Index at = 0;
    for (int k = 0; k < alg.num_arrows(); ++k) {
      if (alg.arrow(k).to != j) continue;
      const Mat<S>& a = W.arrows[static_cast<size_t>(k)];
      if (a.cols() > 0) m.block(0, at, W.dims(j), a.cols()) = a;
      at += a.cols();
    }
    seeds.push_back(std::move(m));
  }
  return submodule_closure(W, seeds);
}

template <class S>
QuotRep<S> top_of(const Representation<S>& V) {
  return quotient(V, radical_of(V));
}

// Minimal projective presentation P1 -> P0 -> V -> 0.
template <class S>
Presentation<S> min_presentation(const Representation<S>& V) {
  AlgebraPtr<S> alg = V.alg;
  int nv = alg->num_vertices();

  auto top = top_of(V);
  IVec t0 = top.rep.dims;
  std::vector<Mat<S>> gens0 = top.lift;  // columns: lifted basis of top V
  std::vector<Mat<S>> cover = cover_map(V, t0, gens0);
  Representation<S> P0 = proj_of_class(alg, t0);

  // kernel of the cover, as a submodule of P0
  std::vector<Mat<S>> kseeds;
  for (int j = 0; j < nv; ++j) kseeds.push_back(kernel_basis(cover[static_cast<size_t>(j)]));
  auto K = submodule_closure(P0, kseeds);

  auto topK = top_of(K.rep);
  IVec t1 = topK.rep.dims;
  // generators of K in P0 coordinates
  std::vector<Mat<S>> gens1;
  for (int j = 0; j < nv; ++j)
    gens1.push_back(K.incl[static_cast<size_t>(j)] * topK.lift[static_cast<size_t>(j)]);
  std::vector<Mat<S>> p = cover_map(P0, t1, gens1);
  Representation<S> P1 = proj_of_class(alg, t1);

  Presentation<S> out;
  out.alg = alg;
  out.g0 = t0;
  out.g1 = t1;
  out.gamma = t0 - t1;
  out.P0 = std::move(P0);
  out.P1 = std::move(P1);
  out.p = std::move(p);
  return out;
}

template <class S>
IVec g_vector(const Representation<S>& V) {
  return min_presentation(V).gamma;
}

template <class S>
IVec g_vector_pair(const Representation<S>& V, const IVec& proj_class) {
  return IVec(g_vector(V) - proj_class);
}

// Presentation from hom-basis coordinates at a given g-vector.
template <class S>
Presentation<S> make_presentation(AlgebraPtr<S> alg, const IVec& gamma, const Vec<S>& coords) {
  auto [g0, g1] = split_gvector(gamma);
  Presentation<S> out;
  out.alg = alg;
  out.gamma = gamma;
  out.g0 = g0;
  out.g1 = g1;
  out.P0 = proj_of_class(alg, g0);
  out.P1 = proj_of_class(alg, g1);
  auto hb = hom_basis(out.P1, out.P0);
  if (coords.size() != hb.dim())
    throw UsageError("presentation coordinates: expected " + std::to_string(hb.dim()) +
                     " entries, got " + std::to_string(coords.size()));
  std::vector<Mat<S>> p;
  for (int i = 0; i < alg->num_vertices(); ++i)
    p.push_back(detail::zero_mat(alg->ctx(), out.P0.dims(i), out.P1.dims(i)));
  for (Index k = 0; k < hb.dim(); ++k)
    for (int i = 0; i < alg->num_vertices(); ++i)
      p[static_cast<size_t>(i)] += coords(k) * hb.elems[static_cast<size_t>(k)][static_cast<size_t>(i)];
  out.p = std::move(p);
  return out;
}

// Coordinates of a presentation's map in the canonical hom_basis(P1, P0)
// ordering (used for serialization).
template <class S>
Vec<S> presentation_coords(const Presentation<S>& P) {
  auto hb = hom_basis(P.P1, P.P0);
  const auto& ctx = P.alg->ctx();
  Index n = 0;
  for (const auto& m : P.p) n += m.rows() * m.cols();
  Mat<S> basis(n, hb.dim());
  for (Index k = 0; k < hb.dim(); ++k)
    basis.col(k) = detail::flatten_maps(ctx, hb.elems[static_cast<size_t>(k)]);
  auto sol = solve(basis, detail::flatten_maps(ctx, P.p));
  if (!sol) throw ComputeError("presentation map is not an intertwiner");
  return *sol;
}

// Uniform random presentation at γ over a finite field.
template <class S>
Presentation<S> sample_presentation(AlgebraPtr<S> alg, const IVec& gamma, Rng& rng) {
  if (!FieldContext<S>::finite) throw UsageError("sampling requires a finite field");
  auto [g0, g1] = split_gvector(gamma);
  auto P0 = proj_of_class(alg, g0);
  auto P1 = proj_of_class(alg, g1);
  auto hb = hom_basis(P1, P0);
  Vec<S> coords(hb.dim());
  for (Index k = 0; k < hb.dim(); ++k) coords(k) = alg->ctx().sample_uniform(rng);
  return make_presentation(alg, gamma, coords);
}

// dim Hom_{K^b}(P, Q): chain maps (f1, f0) with f0 p = q f1, modulo the
// null-homotopic pairs (h p, q h), h: P0 -> Q1.
template <class S>
Index hom_k(const Presentation<S>& P, const Presentation<S>& Q) {
  if (P.alg.get() != Q.alg.get()) throw UsageError("hom_k: different algebras");
  const auto& ctx = P.alg->ctx();
  auto F1 = hom_basis(P.P1, Q.P1);
  auto F0 = hom_basis(P.P0, Q.P0);
  Index m1 = F1.dim(), m0 = F0.dim();
  // rows: entries of f0 p - q f1 per vertex
  Index rows = 0;
  int nv = P.alg->num_vertices();
  for (int i = 0; i < nv; ++i) rows += Q.P0.dims(i) * P.P1.dims(i);
  Mat<S> sys = detail::zero_mat(ctx, rows, m1 + m0);
  for (Index k = 0; k < m1; ++k) {
    auto qf = detail::compose_maps(Q.p, F1.elems[static_cast<size_t>(k)]);
    sys.col(k) = -detail::flatten_maps(ctx, qf);
  }
  for (Index k = 0; k < m0; ++k) {
    auto fp = detail::compose_maps(F0.elems[static_cast<size_t>(k)], P.p);
    sys.col(m1 + k) = detail::flatten_maps(ctx, fp);
  }
  Index chain_dim = m1 + m0 - rank(sys);
  // homotopies: (h p, q h) for h in Hom(P0, Q1), as coordinate vectors
  auto H = hom_basis(P.P0, Q.P1);
  if (H.dim() == 0) return chain_dim;
  Index n1 = 0, n0 = 0;
  for (int i = 0; i < nv; ++i) {
    n1 += Q.P1.dims(i) * P.P1.dims(i);
    n0 += Q.P0.dims(i) * P.P0.dims(i);
  }
  Mat<S> f1_basis(n1, m1), f0_basis(n0, m0);
  for (Index k = 0; k < m1; ++k)
    f1_basis.col(k) = detail::flatten_maps(ctx, F1.elems[static_cast<size_t>(k)]);
  for (Index k = 0; k < m0; ++k)
    f0_basis.col(k) = detail::flatten_maps(ctx, F0.elems[static_cast<size_t>(k)]);
  Mat<S> homot = detail::zero_mat(ctx, m1 + m0, H.dim());
  for (Index l = 0; l < H.dim(); ++l) {
    auto hp = detail::compose_maps(H.elems[static_cast<size_t>(l)], P.p);
    auto qh = detail::compose_maps(Q.p, H.elems[static_cast<size_t>(l)]);
    auto a = solve(f1_basis, detail::flatten_maps(ctx, hp));
    auto b = solve(f0_basis, detail::flatten_maps(ctx, qh));
    if (!a || !b) throw std::logic_error("homotopy outside hom span");
    if (m1 > 0) homot.block(0, l, m1, 1) = *a;
    if (m0 > 0) homot.block(m1, l, m0, 1) = *b;
  }
  return chain_dim - rank(homot);
}

// dim Hom_{K^b}(P, ΣQ): maps P1 -> Q0 modulo q∘Hom(P1,Q1) + Hom(P0,Q0)∘p.
template <class S>
Index e_inv(const Presentation<S>& P, const Presentation<S>& Q) {
  if (P.alg.get() != Q.alg.get()) throw UsageError("e_inv: different algebras");
  const auto& ctx = P.alg->ctx();
  auto full = hom_basis(P.P1, Q.P0);
  if (full.dim() == 0) return 0;
  auto U = hom_basis(P.P1, Q.P1);
  auto W = hom_basis(P.P0, Q.P0);
  Index n = 0;
  for (int i = 0; i < P.alg->num_vertices(); ++i) n += Q.P0.dims(i) * P.P1.dims(i);
  Mat<S> span = detail::zero_mat(ctx, n, U.dim() + W.dim());
  for (Index k = 0; k < U.dim(); ++k)
    span.col(k) = detail::flatten_maps(ctx, detail::compose_maps(Q.p, U.elems[static_cast<size_t>(k)]));
  for (Index k = 0; k < W.dim(); ++k)
    span.col(U.dim() + k) =
        detail::flatten_maps(ctx, detail::compose_maps(W.elems[static_cast<size_t>(k)], P.p));
  return full.dim() - rank(span);
}

// Plamondon's cokernel: P0 / im(p), a module.
template <class S>
Representation<S> cokernel(const Presentation<S>& P) {
  std::vector<Mat<S>> seeds;
  for (size_t i = 0; i < P.p.size(); ++i) seeds.push_back(P.p[i]);
  auto img = submodule_closure(P.P0, seeds);
  return quotient(P.P0, img).rep;
}

// dim Ext^1(V, W) via the presentation formula
// hom(P1, W) - hom(P0, W) + hom(V, W).
template <class S>
Index ext1_dim(const Representation<S>& V, const Representation<S>& W) {
  auto pr = min_presentation(V);
  Index h1 = 0, h0 = 0;
  for (int i = 0; i < V.alg->num_vertices(); ++i) {
    h1 += pr.g1(i) * W.dims(i);
    h0 += pr.g0(i) * W.dims(i);
  }
  return h1 - h0 + hom_dim(V, W);
}

// Numerical handle of the component sampled at γ: the observed generic
// g-vector γ', the defect δ = γ' - γ, and the modal cokernel dimensions.
struct ComponentHandle {
  IVec gamma;        // requested
  IVec gamma_prime;  // observed generic g-vector of the cokernels
  IVec delta;        // gamma_prime - gamma, zero iff γ is a genuine generic g-vector
  IVec dim_vector;   // modal cokernel dimension vector
  int samples = 0;
};

template <class S>
ComponentHandle component_of(AlgebraPtr<S> alg, const IVec& gamma, int samples, Rng& rng) {
  if (samples < 1) throw UsageError("component_of needs at least one sample");
  struct Obs {
    IVec g, dims;
  };
  std::vector<Obs> obs;
  for (int s = 0; s < samples; ++s) {
    Rng sub = make_rng(derive_seed(rng(), static_cast<uint64_t>(s)));
    auto pres = sample_presentation(alg, gamma, sub);
    auto cok = cokernel(pres);
    obs.push_back(Obs{g_vector(cok), cok.dims});
  }
  // minimum L1 defect, then most frequent g-vector, then lexicographic
  auto l1 = [&](const IVec& g) {
    long long s = 0;
    for (Index i = 0; i < g.size(); ++i) s += std::abs(g(i) - gamma(i));
    return s;
  };
  auto key_of = [](const IVec& v) {
    std::string k;
    for (Index i = 0; i < v.size(); ++i) k += std::to_string(v(i)) + ",";
    return k;
  };
  std::map<std::string, std::pair<int, IVec>> freq;
  for (const auto& o : obs) {
    auto& e = freq[key_of(o.g)];
    e.first += 1;
    e.second = o.g;
  }
  long long best_l1 = -1;
  int best_count = 0;
  std::string best_key;
  for (const auto& [k, v] : freq) {
    long long d = l1(v.second);
    bool better = best_l1 < 0 || d < best_l1 || (d == best_l1 && v.first > best_count) ||
                  (d == best_l1 && v.first == best_count && k < best_key);
    if (better) {
      best_l1 = d;
      best_count = v.first;
      best_key = k;
    }
  }
  ComponentHandle out;
  out.gamma = gamma;
  out.gamma_prime = freq[best_key].second;
  out.delta = out.gamma_prime - gamma;
  out.samples = samples;
  // modal dims among the samples that realized gamma_prime
  std::map<std::string, std::pair<int, IVec>> dfreq;
  for (const auto& o : obs)
    if (key_of(o.g) == best_key) {
      auto& e = dfreq[key_of(o.dims)];
      e.first += 1;
      e.second = o.dims;
    }
  int bc = 0;
  for (const auto& [k, v] : dfreq)
    if (v.first > bc) {
      bc = v.first;
      out.dim_vector = v.second;
    }
  return out;
}

}  // namespace tautilt
