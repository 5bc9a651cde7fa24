// Quiver representations (= left modules) and their linear algebra:
// relation checking, Hom spaces, submodule machinery, quotients, traces,
// direct sums, and a probabilistic Fitting-decomposition splitter.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/algebra.hpp"
#include "tautilt/fields.hpp"
#include "tautilt/linalg.hpp"
#include "tautilt/rng.hpp"

namespace tautilt {

template <class S>
struct Representation {
  AlgebraPtr<S> alg;
  IVec dims;                   // one entry per vertex
  std::vector<Mat<S>> arrows;  // arrows[k]: dims[to(k)] x dims[from(k)]

  Index total_dim() const {
    Index s = 0;
    for (Index i = 0; i < dims.size(); ++i) s += dims(i);
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
};

namespace detail {

template <class S>
Mat<S> zero_mat(const FieldContext<S>& ctx, Index r, Index c) {
  Mat<S> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = ctx.from_int(0);
  return m;
}

template <class S>
Mat<S> identity_mat(const FieldContext<S>& ctx, Index n) {
  Mat<S> m = zero_mat(ctx, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = ctx.from_int(1);
  return m;
}

}  // namespace detail

template <class S>
Representation<S> make_rep(AlgebraPtr<S> alg, IVec dims, std::vector<Mat<S>> arrows) {
  if (dims.size() != alg->num_vertices()) throw UsageError("dims length != vertex count");
  for (Index i = 0; i < dims.size(); ++i)
    if (dims(i) < 0) throw UsageError("negative dimension");
  if (static_cast<int>(arrows.size()) != alg->num_arrows())
    throw UsageError("arrow matrix count != arrow count");
  for (int k = 0; k < alg->num_arrows(); ++k) {
    const auto& a = alg->arrow(k);
    if (arrows[static_cast<size_t>(k)].rows() != dims(a.to) ||
        arrows[static_cast<size_t>(k)].cols() != dims(a.from))
      throw UsageError("arrow '" + a.name + "' matrix has shape " +
                       std::to_string(arrows[static_cast<size_t>(k)].rows()) + "x" +
                       std::to_string(arrows[static_cast<size_t>(k)].cols()) + ", expected " +
                       std::to_string(dims(a.to)) + "x" + std::to_string(dims(a.from)));
  }
  return Representation<S>{std::move(alg), std::move(dims), std::move(arrows)};
}

template <class S>
Representation<S> zero_rep(AlgebraPtr<S> alg) {
  IVec dims = IVec::Zero(alg->num_vertices());
  std::vector<Mat<S>> arrows;
  for (int k = 0; k < alg->num_arrows(); ++k)
    arrows.push_back(detail::zero_mat(alg->ctx(), 0, 0));
  return Representation<S>{std::move(alg), std::move(dims), std::move(arrows)};
}

template <class S>
Representation<S> simple(AlgebraPtr<S> alg, int vertex) {
  IVec dims = IVec::Zero(alg->num_vertices());
  dims(vertex) = 1;
  std::vector<Mat<S>> arrows;
  for (int k = 0; k < alg->num_arrows(); ++k) {
    const auto& a = alg->arrow(k);
    arrows.push_back(detail::zero_mat(alg->ctx(), dims(a.to), dims(a.from)));
  }
  return Representation<S>{std::move(alg), std::move(dims), std::move(arrows)};
}

// P_i: vertex-j component spanned by basis paths i -> j, arrows act by
// composition in the quotient.
template <class S>
Representation<S> projective(AlgebraPtr<S> alg, int i) {
  IVec dims(alg->num_vertices());
  for (int j = 0; j < alg->num_vertices(); ++j) dims(j) = alg->bucket_dim(i, j);
  std::vector<Mat<S>> arrows;
  for (int k = 0; k < alg->num_arrows(); ++k)
    arrows.push_back(alg->left_mult_matrix(alg->arrow_as_path(k), i));
  return Representation<S>{std::move(alg), std::move(dims), std::move(arrows)};
}

// I_i: vertex-j component is the dual of the span of basis paths j -> i;
// arrows act as transposed right multiplication.
template <class S>
Representation<S> injective(AlgebraPtr<S> alg, int i) {
  IVec dims(alg->num_vertices());
  for (int j = 0; j < alg->num_vertices(); ++j) dims(j) = alg->bucket_dim(j, i);
  std::vector<Mat<S>> arrows;
  for (int k = 0; k < alg->num_arrows(); ++k)
    arrows.push_back(alg->right_mult_matrix(alg->arrow_as_path(k), i).transpose());
  return Representation<S>{std::move(alg), std::move(dims), std::move(arrows)};
}

// Evaluate one path (composition order) on V.
template <class S>
Mat<S> path_action(const Representation<S>& V, const Path& p) {
  const auto& alg = *V.alg;
  if (p.empty()) throw std::logic_error("path_action needs a non-trivial path");
  Mat<S> m = V.arrows[static_cast<size_t>(p.back())];
  for (size_t k = p.size() - 1; k-- > 0;) m = V.arrows[static_cast<size_t>(p[k])] * m;
  (void)alg;
  return m;
}

// nullopt when V satisfies every relation; otherwise a description of the
// first violation found.
template <class S>
std::optional<std::string> check(const Representation<S>& V) {
  const auto& alg = *V.alg;
  const auto& rels = alg.parsed_relations();
  for (size_t r = 0; r < rels.size(); ++r) {
    const auto& rel = rels[r];
    int sv = 0, tv = 0;
    {
      const Path& p = rel[0].path;
      sv = alg.arrow(p.back()).from;
      tv = alg.arrow(p.front()).to;
    }
    Mat<S> acc = detail::zero_mat(alg.ctx(), V.dims(tv), V.dims(sv));
    for (const auto& term : rel) acc += term.coeff * path_action(V, term.path);
    for (Index i = 0; i < acc.rows(); ++i)
      for (Index j = 0; j < acc.cols(); ++j)
        if (!(acc(i, j) == S(0)))
          return "relation " + std::to_string(r) + " fails at entry (" + std::to_string(i) +
                 "," + std::to_string(j) + "), value " + alg.ctx().to_string(acc(i, j));
  }
  return std::nullopt;
}

// A basis of the intertwiner space Hom(V, W): per element, one matrix per
// vertex, with f_t V_a = W_a f_s for every arrow a: s -> t.
template <class S>
struct HomBasis {
  std::vector<std::vector<Mat<S>>> elems;
  Index dim() const { return static_cast<Index>(elems.size()); }
};

template <class S>
HomBasis<S> hom_basis(const Representation<S>& V, const Representation<S>& W) {
  if (V.alg.get() != W.alg.get()) throw UsageError("hom_basis: different algebras");
  const auto& alg = *V.alg;
  const auto& ctx = alg.ctx();
  int nv = alg.num_vertices();
  // unknown layout: vertex blocks, f_i entry (r, c) at off_i + r * dimV_i + c
  std::vector<Index> off(static_cast<size_t>(nv) + 1, 0);
  for (int i = 0; i < nv; ++i)
    off[static_cast<size_t>(i) + 1] = off[static_cast<size_t>(i)] + V.dims(i) * W.dims(i);
  Index unknowns = off[static_cast<size_t>(nv)];
  Index rows = 0;
  for (int k = 0; k < alg.num_arrows(); ++k)
    rows += V.dims(alg.arrow(k).from) * W.dims(alg.arrow(k).to);
  Mat<S> sys = detail::zero_mat(ctx, rows, unknowns);
  Index row0 = 0;
  for (int k = 0; k < alg.num_arrows(); ++k) {
    int s = alg.arrow(k).from, t = alg.arrow(k).to;
    const Mat<S>& Va = V.arrows[static_cast<size_t>(k)];
    const Mat<S>& Wa = W.arrows[static_cast<size_t>(k)];
    // equation entry (r, c): sum_m f_t(r, m) Va(m, c) - sum_m Wa(r, m) f_s(m, c) = 0
    for (Index r = 0; r < W.dims(t); ++r) {
      for (Index c = 0; c < V.dims(s); ++c) {
        Index row = row0 + r * V.dims(s) + c;
        for (Index m = 0; m < V.dims(t); ++m)
          sys(row, off[static_cast<size_t>(t)] + r * V.dims(t) + m) += Va(m, c);
        for (Index m = 0; m < W.dims(s); ++m)
          sys(row, off[static_cast<size_t>(s)] + m * V.dims(s) + c) -= Wa(r, m);
      }
    }
    row0 += V.dims(s) * W.dims(t);
  }
  Mat<S> ker = kernel_basis(sys);
  HomBasis<S> out;
  for (Index e = 0; e < ker.cols(); ++e) {
    std::vector<Mat<S>> f;
    for (int i = 0; i < nv; ++i) {
      Mat<S> fi = detail::zero_mat(ctx, W.dims(i), V.dims(i));
      for (Index r = 0; r < W.dims(i); ++r)
        for (Index c = 0; c < V.dims(i); ++c)
          fi(r, c) = ker(off[static_cast<size_t>(i)] + r * V.dims(i) + c, e);
      f.push_back(std::move(fi));
    }
    out.elems.push_back(std::move(f));
  }
  return out;
}

template <class S>
Index hom_dim(const Representation<S>& V, const Representation<S>& W) {
  return hom_basis(V, W).dim();
}

template <class S>
Representation<S> direct_sum(const Representation<S>& V, const Representation<S>& W) {
  if (V.alg.get() != W.alg.get()) throw UsageError("direct_sum: different algebras");
  const auto& alg = *V.alg;
  IVec dims = V.dims + W.dims;
  std::vector<Mat<S>> arrows;
  for (int k = 0; k < alg.num_arrows(); ++k) {
    int s = alg.arrow(k).from, t = alg.arrow(k).to;
    Mat<S> m = detail::zero_mat(alg.ctx(), dims(t), dims(s));
    m.block(0, 0, V.dims(t), V.dims(s)) = V.arrows[static_cast<size_t>(k)];
    m.block(V.dims(t), V.dims(s), W.dims(t), W.dims(s)) = W.arrows[static_cast<size_t>(k)];
    arrows.push_back(std::move(m));
  }
  return Representation<S>{V.alg, std::move(dims), std::move(arrows)};
}

// A submodule U of some ambient V, with per-vertex inclusion matrices.
template <class S>
struct SubRep {
  Representation<S> rep;
  std::vector<Mat<S>> incl;  // incl[i]: ambient dims(i) x rep.dims(i), canonical column echelon
};

// Smallest arrow-stable graded subspace of V containing the given per-vertex
// seed columns.  Inclusions are canonical (reduced column echelon), so equal
// submodules produce identical SubReps.
template <class S>
SubRep<S> submodule_closure(const Representation<S>& V, const std::vector<Mat<S>>& seeds) {
  const auto& alg = *V.alg;
  const auto& ctx = alg.ctx();
  int nv = alg.num_vertices();
  if (static_cast<int>(seeds.size()) != nv) throw UsageError("submodule_closure: seed count");
  std::vector<Mat<S>> span;
  for (int i = 0; i < nv; ++i) {
    if (seeds[static_cast<size_t>(i)].rows() != V.dims(i))
      throw UsageError("submodule_closure: seed rows at vertex " + std::to_string(i));
    span.push_back(column_space(seeds[static_cast<size_t>(i)]));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int k = 0; k < alg.num_arrows(); ++k) {
      int s = alg.arrow(k).from, t = alg.arrow(k).to;
      if (span[static_cast<size_t>(s)].cols() == 0) continue;
      Mat<S> image = V.arrows[static_cast<size_t>(k)] * span[static_cast<size_t>(s)];
      Mat<S> joined(V.dims(t), span[static_cast<size_t>(t)].cols() + image.cols());
      joined << span[static_cast<size_t>(t)], image;
      Mat<S> cs = column_space(joined);
      if (cs.cols() != span[static_cast<size_t>(t)].cols()) {
        span[static_cast<size_t>(t)] = std::move(cs);
        grew = true;
      }
    }
  }
  IVec dims(nv);
  for (int i = 0; i < nv; ++i) dims(i) = span[static_cast<size_t>(i)].cols();
  std::vector<Mat<S>> arrows;
  for (int k = 0; k < alg.num_arrows(); ++k) {
    int s = alg.arrow(k).from, t = alg.arrow(k).to;
    Mat<S> rhs = V.arrows[static_cast<size_t>(k)] * span[static_cast<size_t>(s)];
    auto sol = solve_many(span[static_cast<size_t>(t)], rhs);
    if (!sol) throw std::logic_error("closure not arrow-stable; internal error");
    arrows.push_back(std::move(*sol));
  }
  (void)ctx;
  return SubRep<S>{Representation<S>{V.alg, std::move(dims), std::move(arrows)}, std::move(span)};
}

// True when the SubRep's inclusions really carry a submodule of V (shapes,
// stability, intertwining); used to validate user-supplied subs.
template <class S>
bool is_submodule_of(const Representation<S>& V, const SubRep<S>& U) {
  const auto& alg = *V.alg;
  if (static_cast<int>(U.incl.size()) != alg.num_vertices()) return false;
  for (int i = 0; i < alg.num_vertices(); ++i) {
    if (U.incl[static_cast<size_t>(i)].rows() != V.dims(i)) return false;
    if (U.incl[static_cast<size_t>(i)].cols() != U.rep.dims(i)) return false;
    if (rank(U.incl[static_cast<size_t>(i)]) != U.rep.dims(i)) return false;
  }
  for (int k = 0; k < alg.num_arrows(); ++k) {
    int s = alg.arrow(k).from, t = alg.arrow(k).to;
    Mat<S> lhs = V.arrows[static_cast<size_t>(k)] * U.incl[static_cast<size_t>(s)];
    Mat<S> rhs = U.incl[static_cast<size_t>(t)] * U.rep.arrows[static_cast<size_t>(k)];
    if (!is_zero_matrix(Mat<S>(lhs - rhs))) return false;
  }
  return true;
}

// V/U with per-vertex projection matrices; quotient coordinates are the
// non-pivot rows of the inclusion's echelon form.
template <class S>
struct QuotRep {
  Representation<S> rep;
  std::vector<Mat<S>> proj;  // proj[i]: rep.dims(i) x ambient dims(i)
  std::vector<Mat<S>> lift;  // lift[i]: ambient dims(i) x rep.dims(i), proj * lift = id
};

template <class S>
QuotRep<S> quotient(const Representation<S>& V, const SubRep<S>& U) {
  const auto& alg = *V.alg;
  const auto& ctx = alg.ctx();
  if (!is_submodule_of(V, U)) throw UsageError("quotient: not a submodule");
  int nv = alg.num_vertices();
  std::vector<Mat<S>> proj, lift;
  IVec dims(nv);
  for (int i = 0; i < nv; ++i) {
    Index d = V.dims(i);
    Mat<S> ech = U.incl[static_cast<size_t>(i)].transpose();
    auto pivots = reduced_row_echelon(ech);
    std::vector<bool> is_piv(static_cast<size_t>(d), false);
    for (Index c : pivots) is_piv[static_cast<size_t>(c)] = true;
    std::vector<Index> freec;
    for (Index c = 0; c < d; ++c)
      if (!is_piv[static_cast<size_t>(c)]) freec.push_back(c);
    dims(i) = static_cast<Index>(freec.size());
    Mat<S> p = detail::zero_mat(ctx, dims(i), d);
    for (Index j = 0; j < d; ++j) {
      Vec<S> v = detail::zero_mat(ctx, d, Index(1)).col(0);
      v(j) = ctx.from_int(1);
      for (size_t r = 0; r < pivots.size(); ++r) {
        Index pc = pivots[r];
        if (!(v(pc) == S(0))) v -= v(pc) * ech.row(static_cast<Index>(r)).transpose();
      }
      for (size_t fi = 0; fi < freec.size(); ++fi) p(static_cast<Index>(fi), j) = v(freec[fi]);
    }
    Mat<S> l = detail::zero_mat(ctx, d, dims(i));
    for (size_t fi = 0; fi < freec.size(); ++fi) l(freec[fi], static_cast<Index>(fi)) = ctx.from_int(1);
    proj.push_back(std::move(p));
    lift.push_back(std::move(l));
  }
  std::vector<Mat<S>> arrows;
  for (int k = 0; k < alg.num_arrows(); ++k) {
    int s = alg.arrow(k).from, t = alg.arrow(k).to;
    arrows.push_back(proj[static_cast<size_t>(t)] * V.arrows[static_cast<size_t>(k)] *
                     lift[static_cast<size_t>(s)]);
  }
  return QuotRep<S>{Representation<S>{V.alg, std::move(dims), std::move(arrows)}, std::move(proj),
                    std::move(lift)};
}

// Sum of the images of all homomorphisms V -> X, as a submodule of X.
template <class S>
SubRep<S> trace_of(const Representation<S>& V, const Representation<S>& X) {
  const auto& alg = *X.alg;
  auto hb = hom_basis(V, X);
  int nv = alg.num_vertices();
  std::vector<Mat<S>> seeds;
  for (int i = 0; i < nv; ++i) {
    Index cols = 0;
    for (const auto& f : hb.elems) cols += f[static_cast<size_t>(i)].cols();
    Mat<S> m(X.dims(i), cols);
    Index at = 0;
    for (const auto& f : hb.elems) {
      const Mat<S>& fi = f[static_cast<size_t>(i)];
      if (fi.cols() > 0) m.block(0, at, X.dims(i), fi.cols()) = fi;
      at += fi.cols();
    }
    seeds.push_back(std::move(m));
  }
  return submodule_closure(X, seeds);
}

namespace detail {

// Canonical text signature of a SubRep's inclusions; used for dedup.
template <class S>
std::string sub_signature(const FieldContext<S>& ctx, const SubRep<S>& u) {
  std::string sig;
  for (const auto& m : u.incl) {
    sig += std::to_string(m.cols()) + ":";
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) sig += ctx.to_string(m(r, c)) + ",";
    sig += ";";
  }
  return sig;
}

}  // namespace detail

// All submodules of V (including 0 and V) by exact brute force over a prime
// field: cyclic closures of every nonzero graded vector, then closure under
// pairwise sums.  Deterministic output order: (total dim, signature).
template <class S>
std::vector<SubRep<S>> all_submodules(const Representation<S>& V,
                                      unsigned long long budget = 2000000ULL) {
  const auto& ctx = V.alg->ctx();
  if (!FieldContext<S>::finite)
    throw UsageError("submodule enumeration needs a prime field");
  unsigned long long p = ctx.spec.p;
  long double total = 1.0L;
  for (Index i = 0; i < V.dims.size(); ++i)
    for (Index r = 0; r < V.dims(i); ++r) total *= static_cast<long double>(p);
  if (total > static_cast<long double>(budget))
    throw ComputeError("submodule enumeration budget exceeded: needs about " +
                       std::to_string(static_cast<unsigned long long>(total)) +
                       " vectors, budget " + std::to_string(budget));
  int nv = V.alg->num_vertices();
  std::map<std::string, SubRep<S>> found;
  auto add = [&](SubRep<S> u) -> bool {
    std::string sig = detail::sub_signature(ctx, u);
    if (found.count(sig)) return false;
    found.emplace(std::move(sig), std::move(u));
    return true;
  };
  // zero submodule
  {
    std::vector<Mat<S>> seeds;
    for (int i = 0; i < nv; ++i) seeds.push_back(detail::zero_mat(ctx, V.dims(i), 0));
    add(submodule_closure(V, seeds));
  }
  // cyclic closures of per-vertex vectors (a general vector generates the sum
  // of the closures of its graded components, so these seeds suffice)
  for (int i = 0; i < nv; ++i) {
    Index d = V.dims(i);
    if (d == 0) continue;
    std::vector<unsigned long long> digits(static_cast<size_t>(d), 0);
    while (true) {
      // advance odometer
      size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (pos == digits.size()) break;
      std::vector<Mat<S>> seeds;
      for (int j = 0; j < nv; ++j) seeds.push_back(detail::zero_mat(ctx, V.dims(j), j == i ? 1 : 0));
      for (Index r = 0; r < d; ++r)
        seeds[static_cast<size_t>(i)](r, 0) = ctx.from_int(static_cast<long long>(digits[static_cast<size_t>(r)]));
      add(submodule_closure(V, seeds));
    }
  }
  // close under pairwise sums until fixpoint
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<const SubRep<S>*> cur;
    for (const auto& [sig, u] : found) cur.push_back(&u);
    for (size_t x = 0; x < cur.size() && !grew; ++x) {
      for (size_t y = x + 1; y < cur.size() && !grew; ++y) {
        std::vector<Mat<S>> seeds;
        for (int i = 0; i < nv; ++i) {
          const Mat<S>& a = cur[x]->incl[static_cast<size_t>(i)];
          const Mat<S>& b = cur[y]->incl[static_cast<size_t>(i)];
          Mat<S> m(V.dims(i), a.cols() + b.cols());
          m << a, b;
          seeds.push_back(std::move(m));
        }
        grew = add(submodule_closure(V, seeds));
      }
    }
  }
  std::vector<SubRep<S>> out;
  for (auto& [sig, u] : found) out.push_back(std::move(u));
  std::sort(out.begin(), out.end(), [&](const SubRep<S>& a, const SubRep<S>& b) {
    Index da = a.rep.total_dim(), db = b.rep.total_dim();
    if (da != db) return da < db;
    return detail::sub_signature(ctx, a) < detail::sub_signature(ctx, b);
  });
  return out;
}

// Result of try_split: either a nontrivial decomposition V ≅ U ⊕ W or the
// verdict "probably indecomposable" (split == false).
template <class S>
struct SplitResult {
  bool split = false;
  Representation<S> first, second;
};

template <class S>
SplitResult<S> try_split(const Representation<S>& V, Rng& rng, int trials = 20) {
  const auto& ctx = V.alg->ctx();
  int nv = V.alg->num_vertices();
  Index D = V.total_dim();
  SplitResult<S> out;
  if (D == 0) return out;
  auto endos = hom_basis(V, V);
  auto attempt = [&](const std::vector<Mat<S>>& phi) -> bool {
    std::vector<Mat<S>> kseeds, iseeds;
    Index kdim = 0;
    for (int i = 0; i < nv; ++i) {
      Mat<S> power = matrix_power(phi[static_cast<size_t>(i)], D);
      Mat<S> k = kernel_basis(power);
      kdim += k.cols();
      kseeds.push_back(std::move(k));
      iseeds.push_back(column_space(power));
    }
    if (kdim == 0 || kdim == D) return false;
    auto ker = submodule_closure(V, kseeds);
    auto im = submodule_closure(V, iseeds);
    // Fitting: both are submodules and dims are complementary
    if (ker.rep.total_dim() + im.rep.total_dim() != D) return false;
    out.split = true;
    out.first = ker.rep;
    out.second = im.rep;
    return true;
  };
  for (const auto& f : endos.elems)
    if (attempt(f)) return out;
  for (int t = 0; t < trials; ++t) {
    std::vector<Mat<S>> phi;
    for (int i = 0; i < nv; ++i) phi.push_back(detail::zero_mat(ctx, V.dims(i), V.dims(i)));
    for (const auto& f : endos.elems) {
      S c = ctx.sample_uniform(rng);
      for (int i = 0; i < nv; ++i) phi[static_cast<size_t>(i)] += c * f[static_cast<size_t>(i)];
    }
    if (attempt(phi)) return out;
  }
  return out;
}

// Iterate every representation with the given dimension vector over a prime
// field (arrow entries range over F_p; only those satisfying the relations
// are passed to fn).  Budget counts entry assignments.
template <class S, class Fn>
void for_each_rep(AlgebraPtr<S> alg, const IVec& dims, unsigned long long budget, Fn&& fn) {
  const auto& ctx = alg->ctx();
  if (!FieldContext<S>::finite) throw UsageError("representation enumeration needs a prime field");
  unsigned long long p = ctx.spec.p;
  Index entries = 0;
  for (int k = 0; k < alg->num_arrows(); ++k)
    entries += dims(alg->arrow(k).to) * dims(alg->arrow(k).from);
  long double total = 1.0L;
  for (Index e = 0; e < entries; ++e) total *= static_cast<long double>(p);
  if (total > static_cast<long double>(budget))
    throw ComputeError("representation enumeration budget exceeded: needs about " +
                       std::to_string(static_cast<unsigned long long>(total)) +
                       " assignments, budget " + std::to_string(budget));
  std::vector<unsigned long long> digits(static_cast<size_t>(entries), 0);
  while (true) {
    std::vector<Mat<S>> arrows;
    Index at = 0;
    for (int k = 0; k < alg->num_arrows(); ++k) {
      Mat<S> m = detail::zero_mat(ctx, dims(alg->arrow(k).to), dims(alg->arrow(k).from));
      for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
          m(r, c) = ctx.from_int(static_cast<long long>(digits[static_cast<size_t>(at++)]));
      arrows.push_back(std::move(m));
    }
    Representation<S> V{alg, dims, std::move(arrows)};
    if (!check(V)) fn(V);
    size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
    if (digits.empty() || pos == digits.size()) break;
  }
}

// Search for an isomorphism V -> W among hom-basis elements and random
// combinations.  A false answer is certain only up to the randomness of the
// search; callers use it for small grouping tasks.
template <class S>
bool probably_isomorphic(const Representation<S>& V, const Representation<S>& W, Rng& rng,
                         int trials = 20) {
  if (V.dims != W.dims) return false;
  if (V.total_dim() == 0) return true;
  auto hb = hom_basis(V, W);
  if (hb.dim() == 0) return false;
  auto invertible = [&](const std::vector<Mat<S>>& f) {
    for (const auto& fi : f)
      if (fi.cols() > 0 && !is_invertible(fi)) return false;
    return true;
  };
  for (const auto& f : hb.elems)
    if (invertible(f)) return true;
  const auto& ctx = V.alg->ctx();
  for (int t = 0; t < trials; ++t) {
    std::vector<Mat<S>> f;
    for (int i = 0; i < V.alg->num_vertices(); ++i)
      f.push_back(detail::zero_mat(ctx, W.dims(i), V.dims(i)));
    for (const auto& g : hb.elems) {
      S c = ctx.sample_uniform(rng);
      for (size_t i = 0; i < f.size(); ++i) f[i] += c * g[i];
    }
    if (invertible(f)) return true;
  }
  return false;
}

}  // namespace tautilt
