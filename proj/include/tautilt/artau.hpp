#pragma once
// Auslander-Reiten translate through the Nakayama functor: dualize a minimal
// presentation into a map of injectives and take per-vertex kernels.  On top
// of that: hom^tau pairings, tau-rigidity tests, the AR g-vector identity as
// a residual check, and a sampling-based search for rigid indecomposables.

#include <tautilt/pres.hpp>

namespace tautilt {

// ⊕_i I_i^{mult_i}, copies stacked vertex-by-vertex, each copy contiguous.
template <class S>
Representation<S> inj_of_class(AlgebraPtr<S> alg, const IVec& mult) {
  if (mult.size() != alg->num_vertices()) throw UsageError("injective class length mismatch");
  Representation<S> out = zero_rep(alg);
  for (int i = 0; i < alg->num_vertices(); ++i) {
    if (mult(i) < 0) throw UsageError("injective class must be non-negative");
    for (long long c = 0; c < mult(i); ++c) out = direct_sum(out, injective(alg, i));
  }
  return out;
}

template <class S>
struct TauResult {
  Representation<S> tau;             // kernel of nu_p
  Representation<S> nu_p1, nu_p0;    // injective envelopes of the presentation
  std::vector<Mat<S>> nu_p;          // per-vertex maps (nu P1)_m -> (nu P0)_m
  std::vector<Mat<S>> incl;          // inclusion of tau into nu P1
};

namespace detail {

// Slot layout of ⊕P_i^{mult_i} / ⊕I_i^{mult_i}: one entry per copy.
inline std::vector<int> class_slots(const IVec& mult) {
  std::vector<int> slots;
  for (Eigen::Index i = 0; i < mult.size(); ++i)
    for (long long c = 0; c < mult(i); ++c) slots.push_back(static_cast<int>(i));
  return slots;
}

}  // namespace detail

// tau(V) = ker(nu p) for a minimal presentation p: P1 -> P0.  A map between
// projectives is a matrix of algebra elements x_{kl}; its image under the
// Nakayama functor acts on dual path spaces by transposed left multiplication.
template <class S>
TauResult<S> tau(const Representation<S>& V) {
  AlgebraPtr<S> alg = V.alg;
  const auto& ctx = alg->ctx();
  int nv = alg->num_vertices();
  Presentation<S> pr = min_presentation(V);
  std::vector<int> s1 = detail::class_slots(pr.g1);
  std::vector<int> s0 = detail::class_slots(pr.g0);

  TauResult<S> out;
  out.nu_p1 = inj_of_class(alg, pr.g1);
  out.nu_p0 = inj_of_class(alg, pr.g0);

  // x_{kl}: path coefficients of the slot-(k,l) entry of p, read off the
  // image of the k-th generator (the trivial path of slot k in (P1)_{v}).
  struct Entry {
    S coeff;
    Path path;
  };
  std::vector<std::vector<std::vector<Entry>>> x(s1.size(),
                                                 std::vector<std::vector<Entry>>(s0.size()));
  for (size_t k = 0; k < s1.size(); ++k) {
    int v = s1[k];
    Index genRow = 0;
    for (size_t k2 = 0; k2 < k; ++k2) genRow += alg->bucket_dim(s1[k2], v);
    const auto& diag = alg->bucket(v, v);
    Index tpos = -1;
    for (Index b = 0; b < static_cast<Index>(diag.size()); ++b)
      if (diag[static_cast<size_t>(b)] == alg->trivial_idx(v)) tpos = b;
    genRow += tpos;
    Index at = 0;
    for (size_t l = 0; l < s0.size(); ++l) {
      const auto& bk = alg->bucket(s0[l], v);
      for (Index b = 0; b < static_cast<Index>(bk.size()); ++b, ++at) {
        S c = pr.p[static_cast<size_t>(v)](at, genRow);
        if (!(c == ctx.from_int(0)))
          x[k][l].push_back(Entry{c, alg->basis_path(bk[static_cast<size_t>(b)])});
      }
    }
  }

  // nu(p) at vertex m, block (l, k): sum of coeff * left_mult^T over x_{kl}
  out.nu_p.reserve(static_cast<size_t>(nv));
  for (int m = 0; m < nv; ++m) {
    Mat<S> mat = detail::zero_mat(ctx, out.nu_p0.dims(m), out.nu_p1.dims(m));
    Index roff = 0;
    for (size_t l = 0; l < s0.size(); ++l) {
      Index rdim = alg->bucket_dim(m, s0[l]);
      Index coff = 0;
      for (size_t k = 0; k < s1.size(); ++k) {
        Index cdim = alg->bucket_dim(m, s1[k]);
        if (rdim > 0 && cdim > 0) {
          for (const Entry& e : x[k][l]) {
            Mat<S> lm = alg->left_mult_matrix(e.path, m);
            mat.block(roff, coff, rdim, cdim) += e.coeff * lm.transpose();
          }
        }
        coff += cdim;
      }
      roff += rdim;
    }
    out.nu_p.push_back(std::move(mat));
  }

  IVec tdims(nv);
  for (int m = 0; m < nv; ++m) {
    out.incl.push_back(kernel_basis(out.nu_p[static_cast<size_t>(m)]));
    tdims(m) = out.incl.back().cols();
  }
  std::vector<Mat<S>> tarrows;
  for (int k = 0; k < alg->num_arrows(); ++k) {
    int u = alg->arrow(k).from, w = alg->arrow(k).to;
    Mat<S> img = out.nu_p1.arrows[static_cast<size_t>(k)] * out.incl[static_cast<size_t>(u)];
    auto sol = solve_many(out.incl[static_cast<size_t>(w)], img);
    if (!sol) throw ComputeError("AR translate: kernel is not arrow-stable");
    tarrows.push_back(std::move(*sol));
  }
  out.tau = make_rep(alg, tdims, std::move(tarrows));
  return out;
}

// dim Hom(W, tau V)
template <class S>
Index hom_tau(const Representation<S>& V, const Representation<S>& W) {
  return hom_dim(W, tau(V).tau);
}

template <class S>
bool is_tau_rigid(const Representation<S>& V) {
  return hom_tau(V, V) == 0;
}

// Multiplicities of the indecomposable projective summands; rejects
// non-projective input (detected by a non-trivial relation part).
template <class S>
IVec proj_class_of(const Representation<S>& P) {
  Presentation<S> pr = min_presentation(P);
  if (pr.P1.total_dim() != 0) throw UsageError("proj_class_of: module is not projective");
  return pr.g0;
}

template <class S>
bool is_tau_rigid_pair(const Representation<S>& V, const Representation<S>& P) {
  proj_class_of(P);  // validates projectivity
  return is_tau_rigid(V) && hom_dim(P, V) == 0;
}

// <g(V) - [P], dims X> - hom(V, X) + hom(X, tau V) + hom(P, X); zero when the
// g-vector pairing identity holds.
template <class S>
long long ar_formula_check(const Representation<S>& V, const Representation<S>& X,
                           const IVec& proj_class) {
  IVec g = g_vector_pair(V, proj_class);
  long long lhs = euler_pair(g, X.dims);
  long long homP = 0;  // hom from ⊕P_i^{t_i} counts vertex components
  for (Eigen::Index i = 0; i < proj_class.size(); ++i) homP += proj_class(i) * X.dims(i);
  long long rhs = static_cast<long long>(hom_dim(V, X)) -
                  static_cast<long long>(hom_dim(X, tau(V).tau)) - homP;
  return lhs - rhs;
}

template <class S>
long long ar_formula_check(const Representation<S>& V, const Representation<S>& X,
                           const Representation<S>& P) {
  return ar_formula_check(V, X, proj_class_of(P));
}

// Sampling search for indecomposable rigid modules: walk g-vector lattice
// points in a box, keep cokernels of self-orthogonal sampled presentations,
// reject split candidates, dedup by dimension vector plus iso test.
// Deterministic for a fixed seed state; each lattice point derives its own
// stream so results do not depend on traversal bookkeeping.
template <class S>
std::vector<Representation<S>> rigid_search(AlgebraPtr<S> alg, long long max_total_dim,
                                            int box_radius, Rng& rng, int samples_per_point = 8,
                                            std::uint64_t budget = 100000) {
  if (!FieldContext<S>::finite) throw UsageError("rigid search needs a finite field");
  if (box_radius < 0) throw UsageError("rigid search: box radius must be non-negative");
  int nv = alg->num_vertices();
  std::uint64_t points = 1;
  for (int i = 0; i < nv; ++i) points *= static_cast<std::uint64_t>(2 * box_radius + 1);
  if (points * static_cast<std::uint64_t>(samples_per_point) > budget)
    throw ComputeError("rigid search budget exceeded: " + std::to_string(points) + " points x " +
                       std::to_string(samples_per_point) + " samples > " + std::to_string(budget));

  std::uint64_t root = rng();
  std::vector<Representation<S>> found;
  IVec gamma = IVec::Constant(nv, -box_radius);
  for (std::uint64_t idx = 0; idx < points; ++idx) {
    Rng local = make_rng(derive_seed(root, idx));
    for (int s = 0; s < samples_per_point; ++s) {
      auto P = sample_presentation(alg, gamma, local);
      auto V = cokernel(P);
      if (V.total_dim() == 0 || V.total_dim() > max_total_dim) continue;
      if (e_inv(P, P) != 0) continue;
      if (try_split(V, local).split) continue;
      bool dup = false;
      for (const auto& U : found) {
        if (U.dims != V.dims || hom_dim(U, U) != hom_dim(V, V)) continue;
        if (probably_isomorphic(U, V, local)) {
          dup = true;
          break;
        }
      }
      if (!dup) found.push_back(std::move(V));
    }
    for (int i = 0; i < nv; ++i) {  // odometer step
      if (gamma(i) < box_radius) {
        gamma(i) += 1;
        break;
      }
      gamma(i) = -box_radius;
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return std::lexicographical_compare(a.dims.data(), a.dims.data() + a.dims.size(),
                                        b.dims.data(), b.dims.data() + b.dims.size());
  });
  return found;
}

}  // namespace tautilt
