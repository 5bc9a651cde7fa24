#pragma once
// King stability at integer weights: (semi)stability tests by submodule
// enumeration, the two perpendicular-category membership tests, a Serre
// inclusion verifier, stable factors, the constructive infinite-family
// algorithm, and a brute-force count of stable isomorphism classes.

#include <map>

#include <tautilt/generic.hpp>

namespace tautilt {

using Weight = IVec;

template <class S>
long long theta_value(const Weight& th, const Representation<S>& V) {
  return euler_pair(th, V.dims);
}

// θ(V) = 0 and θ(U) ≤ 0 for every proper nonzero submodule U.  The zero
// module is semistable by convention and never stable.
template <class S>
bool is_semistable(const Representation<S>& V, const Weight& th,
                   std::uint64_t sub_budget = 2000000) {
  if (theta_value(th, V) != 0) return false;
  for (const auto& U : all_submodules(V, sub_budget)) {
    Index d = U.rep.total_dim();
    if (d == 0 || d == V.total_dim()) continue;
    if (theta_value(th, U.rep) > 0) return false;
  }
  return true;
}

template <class S>
bool is_stable(const Representation<S>& V, const Weight& th, std::uint64_t sub_budget = 2000000) {
  if (V.total_dim() == 0) return false;
  if (theta_value(th, V) != 0) return false;
  for (const auto& U : all_submodules(V, sub_budget)) {
    Index d = U.rep.total_dim();
    if (d == 0 || d == V.total_dim()) continue;
    if (theta_value(th, U.rep) >= 0) return false;
  }
  return true;
}

template <class S>
bool in_W_theta(const Representation<S>& V, const Weight& th, std::uint64_t sub_budget = 2000000) {
  return is_semistable(V, th, sub_budget);
}

// X ∈ W(V,P): no homs from V, none into τV, none from P.
template <class S>
bool in_W_pair(const Representation<S>& X, const Representation<S>& V,
               const Representation<S>& P) {
  proj_class_of(P);  // validates the projectivity precondition
  Representation<S> tv = tau(V).tau;
  return hom_dim(V, X) == 0 && hom_dim(X, tv) == 0 && hom_dim(P, X) == 0;
}

struct SerreReport {
  Weight theta;
  long long inspected = 0;   // modules enumerated
  long long members = 0;     // of those, members of W(V,P)
  long long sub_tests = 0;   // semistable submodules checked for membership
  long long quot_tests = 0;  // semistable quotients checked for membership
  long long violations = 0;
  std::vector<std::string> notes;
};

// Exhaustively verifies, over all X with dims ≤ dim_bound, that W(V,P) sits
// inside W(θ) for θ dual to g(V)-[P], and is closed under semistable
// submodules and quotients.  Contractually violation-free.
template <class S>
SerreReport serre_inclusion_check(const Representation<S>& V, const Representation<S>& P,
                                  const IVec& dim_bound, std::uint64_t budget = 2000000) {
  AlgebraPtr<S> alg = V.alg;
  int nv = alg->num_vertices();
  if (dim_bound.size() != nv) throw UsageError("dimension bound length mismatch");
  SerreReport rep;
  rep.theta = dual_weight(g_vector_pair(V, proj_class_of(P)));
  Representation<S> tv = tau(V).tau;
  auto member = [&](const Representation<S>& X) {
    return hom_dim(V, X) == 0 && hom_dim(X, tv) == 0 && hom_dim(P, X) == 0;
  };
  auto note_violation = [&](const std::string& what, const IVec& dims) {
    rep.violations += 1;
    std::string d = "(";
    for (int i = 0; i < nv; ++i) d += (i ? "," : "") + std::to_string(dims(i));
    rep.notes.push_back(what + " at dims " + d + ")");
  };

  IVec d = IVec::Zero(nv);
  bool more = true;
  while (more) {
    for_each_rep(alg, d, budget, [&](const Representation<S>& X) {
      rep.inspected += 1;
      if (X.total_dim() == 0 || !member(X)) return;
      rep.members += 1;
      if (!is_semistable(X, rep.theta, budget)) note_violation("member not semistable", X.dims);
      for (const auto& U : all_submodules(X, budget)) {
        if (is_semistable(U.rep, rep.theta, budget)) {
          rep.sub_tests += 1;
          if (!member(U.rep)) note_violation("semistable submodule escapes", U.rep.dims);
        }
        auto Q = quotient(X, U).rep;
        if (is_semistable(Q, rep.theta, budget)) {
          rep.quot_tests += 1;
          if (!member(Q)) note_violation("semistable quotient escapes", Q.dims);
        }
      }
    });
    more = false;  // odometer over 0 ≤ d ≤ dim_bound
    for (int i = 0; i < nv; ++i) {
      if (d(i) < dim_bound(i)) {
        d(i) += 1;
        more = true;
        break;
      }
      d(i) = 0;
    }
  }
  return rep;
}

// Quotient by θ-zero proper submodules (first in canonical enumeration order)
// until none is left; the result is θ-stable.
template <class S>
Representation<S> stable_factor(Representation<S> X, const Weight& th,
                                std::uint64_t sub_budget = 2000000) {
  if (X.total_dim() == 0 || !is_semistable(X, th, sub_budget))
    throw UsageError("stable factor needs a nonzero semistable module");
  for (;;) {
    const SubRep<S>* pick = nullptr;
    auto subs = all_submodules(X, sub_budget);
    for (const auto& U : subs) {
      Index d = U.rep.total_dim();
      if (d == 0 || d == X.total_dim()) continue;
      if (theta_value(th, U.rep) == 0) {
        pick = &U;
        break;
      }
    }
    if (!pick) return X;
    X = quotient(X, *pick).rep;
  }
}

struct StableFamilyOptions {
  int component_samples = 32;  // draws for the generic g-vector resolution
  int precheck_samples = 32;   // draws for the rigidity / pairwise prechecks
  int retries = 50;            // resampling attempts per family slot
  std::uint64_t sub_budget = 2000000;
};

template <class S>
struct StableFamilyReport {
  IVec gamma;        // requested
  IVec gamma_prime;  // observed generic g-vector, source of θ
  IVec delta;
  Weight theta;
  std::vector<std::string> warnings;
  bool attempted = false;  // false: rigid component, construction skipped
  std::vector<Representation<S>> factors;      // stable factor per slot
  std::vector<std::vector<Index>> hom_matrix;  // hom dims over factors
  std::vector<bool> stable_flags;
  std::vector<Index> end_dims;
  std::vector<Representation<S>> members;  // largest same-dims group
  IVec family_dims;
};

// Constructive infinite-family algorithm at a g-vector: resolve the observed
// generic g-vector and its weight, sample pairwise hom^τ-orthogonal modules,
// strip mutual traces, pass to stable factors, and certify the outcome.
template <class S>
StableFamilyReport<S> stable_family(AlgebraPtr<S> alg, const IVec& gamma, int m, Rng& rng,
                                    const StableFamilyOptions& opts = {}) {
  if (!FieldContext<S>::finite) throw UsageError("stable family needs a finite field");
  if (m < 1) throw UsageError("stable family needs at least one member");
  StableFamilyReport<S> rep;
  rep.gamma = gamma;

  auto comp = component_of(alg, gamma, opts.component_samples, rng);
  rep.gamma_prime = comp.gamma_prime;
  rep.delta = comp.delta;
  rep.theta = dual_weight(comp.gamma_prime);
  if (rep.gamma_prime != gamma)
    rep.warnings.push_back(
        "observed generic g-vector differs from the request; the stability weight follows the "
        "observed one");

  auto ediag = e_generic_self(alg, rep.gamma_prime, opts.precheck_samples, rng);
  auto epair = e_generic(alg, rep.gamma_prime, rep.gamma_prime, opts.precheck_samples, rng);
  if (ediag.value == 0) {
    rep.warnings.push_back(
        "component is generically rigid (diagonal e-invariant 0): no continuous family to "
        "construct");
    return rep;
  }
  if (epair.value != 0)
    rep.warnings.push_back(
        "independent-pair e-invariant estimate is positive: pairwise orthogonality may be "
        "unreachable");
  rep.attempted = true;

  // slot filling: each new module must be hom^τ-orthogonal to all previous
  std::vector<Representation<S>> V;
  std::vector<TauResult<S>> T;
  for (int i = 0; i < m; ++i) {
    bool filled = false;
    for (int t = 0; t < opts.retries && !filled; ++t) {
      auto cand = cokernel(sample_presentation(alg, rep.gamma_prime, rng));
      if (cand.total_dim() == 0) continue;
      if (g_vector(cand) != rep.gamma_prime) continue;
      auto tc = tau(cand);
      bool orth = true;
      for (size_t j = 0; j < V.size() && orth; ++j) {
        if (hom_dim(V[j], tc.tau) != 0) orth = false;        // hom^τ(cand, V_j)
        if (orth && hom_dim(cand, T[j].tau) != 0) orth = false;  // hom^τ(V_j, cand)
      }
      if (!orth) continue;
      V.push_back(std::move(cand));
      T.push_back(std::move(tc));
      filled = true;
    }
    if (!filled)
      throw ComputeError("could not realize pairwise hom^tau vanishing (is e(gamma,gamma) = 0?)");
  }

  // trace stripping and stable factors
  for (int i = 0; i < m; ++i) {
    Representation<S> X = V[static_cast<size_t>(i)];
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      X = quotient(X, trace_of(V[static_cast<size_t>(j)], X)).rep;
    }
    if (X.total_dim() == 0)
      throw ComputeError("construction degenerated (component may not satisfy hypotheses)");
    try {
      X = stable_factor(std::move(X), rep.theta, opts.sub_budget);
    } catch (const UsageError&) {
      throw ComputeError("construction degenerated (component may not satisfy hypotheses)");
    }
    rep.factors.push_back(std::move(X));
  }

  // certificates
  size_t n = rep.factors.size();
  rep.hom_matrix.assign(n, std::vector<Index>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      rep.hom_matrix[i][j] = hom_dim(rep.factors[i], rep.factors[j]);
  for (size_t i = 0; i < n; ++i) {
    rep.stable_flags.push_back(is_stable(rep.factors[i], rep.theta, opts.sub_budget));
    rep.end_dims.push_back(rep.hom_matrix[i][i]);
  }

  // group by dimension vector; report the largest group as the family
  std::map<std::vector<long long>, std::vector<size_t>> groups;
  for (size_t i = 0; i < n; ++i) {
    std::vector<long long> key(rep.factors[i].dims.data(),
                               rep.factors[i].dims.data() + rep.factors[i].dims.size());
    groups[key].push_back(i);
  }
  const std::vector<size_t>* best = nullptr;
  for (const auto& kv : groups)
    if (!best || kv.second.size() > best->size()) best = &kv.second;
  if (best) {
    for (size_t i : *best) rep.members.push_back(rep.factors[i]);
    rep.family_dims = rep.members.front().dims;
  }
  return rep;
}

// Brute-force count of θ-stable isomorphism classes at a dimension vector.
template <class S>
long long count_stables(AlgebraPtr<S> alg, const IVec& d, const Weight& th,
                        std::uint64_t budget = 2000000) {
  std::vector<Representation<S>> classes;
  Rng rng = make_rng(0x57AB1E5);  // internal stream for the iso dedup only
  for_each_rep(alg, d, budget, [&](const Representation<S>& V) {
    if (V.total_dim() == 0) return;
    if (!is_stable(V, th, budget)) return;
    for (const auto& U : classes)
      if (probably_isomorphic(U, V, rng)) return;
    classes.push_back(V);
  });
  return static_cast<long long>(classes.size());
}

}  // namespace tautilt
