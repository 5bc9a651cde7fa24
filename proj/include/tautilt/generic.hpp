#pragma once
// Monte-Carlo estimators for generic values of semicontinuous invariants over
// presentation spaces, fan membership, and box probes.  Estimates are minima
// over derived-seed samples: an observed 0 is a certificate (the functions are
// non-negative), a positive value is an upper bound for the generic value.
//
// Seed discipline: every estimator draws one root from the caller's stream,
// then derives per-sample seeds from (root, index).  Diagonal quantities use
// one presentation against itself; paired quantities use two independent
// draws per index.  This distinction is load-bearing and must not be fused.

#include <tautilt/artau.hpp>

namespace tautilt {

struct GenericEstimate {
  std::string quantity;
  Index value = 0;
  int samples = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;          // root seed of the sample streams
  std::uint64_t witness_seed = 0;  // per-sample seed attaining the minimum
  bool exact = false;              // true iff value == 0 (certified by witness)
};

namespace detail {

inline GenericEstimate finish_estimate(std::string quantity, Index value, int samples,
                                       std::uint64_t prime, std::uint64_t root,
                                       std::uint64_t witness) {
  GenericEstimate e;
  e.quantity = std::move(quantity);
  e.value = value;
  e.samples = samples;
  e.prime = prime;
  e.seed = root;
  e.witness_seed = witness;
  e.exact = (value == 0);
  return e;
}

// min over samples of fn(per-sample rng); fn returns the sampled value
template <class F>
GenericEstimate min_estimate(const std::string& quantity, std::uint64_t prime, int samples,
                             Rng& rng, F&& fn) {
  if (samples < 1) throw UsageError("estimators need at least one sample");
  std::uint64_t root = rng();
  Index best = -1;
  std::uint64_t witness = 0;
  for (int s = 0; s < samples; ++s) {
    std::uint64_t seed = derive_seed(root, static_cast<std::uint64_t>(s));
    Rng local = make_rng(seed);
    Index v = fn(local);
    if (best < 0 || v < best) {
      best = v;
      witness = seed;
    }
    if (best == 0) break;  // certified minimum, nothing smaller exists
  }
  return finish_estimate(quantity, best, samples, prime, root, witness);
}

template <class S>
std::uint64_t prime_of(const AlgebraPtr<S>& alg) {
  return alg->ctx().spec.p;
}

}  // namespace detail

// e(γ): one presentation paired with itself per sample
template <class S>
GenericEstimate e_generic_self(AlgebraPtr<S> alg, const IVec& gamma, int samples, Rng& rng) {
  return detail::min_estimate("e_diag", detail::prime_of(alg), samples, rng, [&](Rng& local) {
    auto P = sample_presentation(alg, gamma, local);
    return e_inv(P, P);
  });
}

// e(γ,γ'): two independent presentations per sample
template <class S>
GenericEstimate e_generic(AlgebraPtr<S> alg, const IVec& gamma, const IVec& gamma2, int samples,
                          Rng& rng) {
  return detail::min_estimate("e", detail::prime_of(alg), samples, rng, [&](Rng& local) {
    auto P = sample_presentation(alg, gamma, local);
    auto Q = sample_presentation(alg, gamma2, local);
    return e_inv(P, Q);
  });
}

// c(γ): dim Hom(V, τV) for V the cokernel of one sample
template <class S>
GenericEstimate c_generic(AlgebraPtr<S> alg, const IVec& gamma, int samples, Rng& rng) {
  return detail::min_estimate("c", detail::prime_of(alg), samples, rng, [&](Rng& local) {
    auto V = cokernel(sample_presentation(alg, gamma, local));
    return hom_dim(V, tau(V).tau);
  });
}

template <class S>
GenericEstimate end_generic(AlgebraPtr<S> alg, const IVec& gamma, int samples, Rng& rng) {
  return detail::min_estimate("end", detail::prime_of(alg), samples, rng, [&](Rng& local) {
    auto V = cokernel(sample_presentation(alg, gamma, local));
    return hom_dim(V, V);
  });
}

template <class S>
GenericEstimate ext1_generic(AlgebraPtr<S> alg, const IVec& gamma, int samples, Rng& rng) {
  return detail::min_estimate("ext1", detail::prime_of(alg), samples, rng, [&](Rng& local) {
    auto V = cokernel(sample_presentation(alg, gamma, local));
    return ext1_dim(V, V);
  });
}

template <class S>
GenericEstimate hom_generic(AlgebraPtr<S> alg, const IVec& gamma, const IVec& gamma2, int samples,
                            Rng& rng) {
  return detail::min_estimate("hom", detail::prime_of(alg), samples, rng, [&](Rng& local) {
    auto V = cokernel(sample_presentation(alg, gamma, local));
    auto W = cokernel(sample_presentation(alg, gamma2, local));
    return hom_dim(V, W);
  });
}

template <class S>
GenericEstimate hom_tau_generic(AlgebraPtr<S> alg, const IVec& gamma, const IVec& gamma2,
                                int samples, Rng& rng) {
  return detail::min_estimate("hom_tau", detail::prime_of(alg), samples, rng, [&](Rng& local) {
    auto V = cokernel(sample_presentation(alg, gamma, local));
    auto W = cokernel(sample_presentation(alg, gamma2, local));
    return hom_tau(V, W);
  });
}

struct FanVerdict {
  bool in_fan = false;
  GenericEstimate estimate;  // diagonal e estimate; witness is exact when 0
};

// γ lies in the g-vector fan iff the diagonal e-invariant vanishes
// generically; a zero estimate carries an exactly checkable witness.
template <class S>
FanVerdict in_fan(AlgebraPtr<S> alg, const IVec& gamma, int samples, Rng& rng) {
  FanVerdict v;
  v.estimate = e_generic_self(alg, gamma, samples, rng);
  v.in_fan = (v.estimate.value == 0);
  return v;
}

struct ProbePoint {
  IVec gamma;
  Index e_self = -1;  // diagonal estimate (fan membership)
  Index c_val = -1;   // cokernel-side hom^tau estimate
  Index e_pair = -1;  // independent-pair estimate
  bool flagged = false;
  std::uint64_t witness_seed = 0;
  bool witness_indecomposable = false;
  std::string attachment;
};

struct ProbeReport {
  std::string kind;  // "fan" or "etame"
  int radius = 0;
  int samples = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  long long visited = 0;
  std::vector<ProbePoint> points;      // lattice order
  std::vector<std::size_t> flags;      // indices into points
  std::string verdict;
};

namespace detail {

// odometer over the closed box ‖γ‖_∞ ≤ R, lattice order from (-R,...,-R)
inline bool box_step(IVec& gamma, int radius) {
  for (Eigen::Index i = 0; i < gamma.size(); ++i) {
    if (gamma(i) < radius) {
      gamma(i) += 1;
      return true;
    }
    gamma(i) = -radius;
  }
  return false;
}

}  // namespace detail

// Fan membership over a lattice box.  Flagged points get an attachment: a
// split test on cokernel samples, since a generically decomposable flag says
// less than an indecomposable one.
template <class S>
ProbeReport demonet_probe(AlgebraPtr<S> alg, int radius, int samples, Rng& rng) {
  if (radius < 0) throw UsageError("probe radius must be non-negative");
  ProbeReport rep;
  rep.kind = "fan";
  rep.radius = radius;
  rep.samples = samples;
  rep.prime = detail::prime_of(alg);
  rep.seed = rng();
  IVec gamma = IVec::Constant(alg->num_vertices(), -radius);
  std::uint64_t idx = 0;
  bool more = true;
  while (more) {
    Rng local = make_rng(derive_seed(rep.seed, idx));
    ProbePoint pt;
    pt.gamma = gamma;
    auto e = e_generic_self(alg, gamma, samples, local);
    auto c = c_generic(alg, gamma, samples, local);
    pt.e_self = e.value;
    pt.c_val = c.value;
    pt.witness_seed = e.witness_seed;
    pt.flagged = (e.value > 0);
    if (pt.flagged) {
      for (int t = 0; t < 3 && !pt.witness_indecomposable; ++t) {
        auto V = cokernel(sample_presentation(alg, gamma, local));
        if (V.total_dim() > 0 && !try_split(V, local).split) pt.witness_indecomposable = true;
      }
      pt.attachment = pt.witness_indecomposable
                          ? "indecomposable witness"
                          : "decomposable witness (inspect summand g-vectors)";
      rep.flags.push_back(rep.points.size());
    }
    rep.points.push_back(std::move(pt));
    ++rep.visited;
    ++idx;
    more = detail::box_step(gamma, radius);
  }
  rep.verdict = rep.flags.empty()
                    ? "no flags: box lies in the fan"
                    : std::to_string(rep.flags.size()) + " lattice points outside the fan";
  return rep;
}

// Independent-pair e(γ,γ) over a lattice box; positives contradict E-tameness.
// The diagonal and c estimates ride along so the two notions stay comparable
// point by point.
template <class S>
ProbeReport etame_probe(AlgebraPtr<S> alg, int radius, int samples, Rng& rng) {
  if (radius < 0) throw UsageError("probe radius must be non-negative");
  ProbeReport rep;
  rep.kind = "etame";
  rep.radius = radius;
  rep.samples = samples;
  rep.prime = detail::prime_of(alg);
  rep.seed = rng();
  IVec gamma = IVec::Constant(alg->num_vertices(), -radius);
  std::uint64_t idx = 0;
  bool more = true;
  while (more) {
    Rng local = make_rng(derive_seed(rep.seed, idx));
    ProbePoint pt;
    pt.gamma = gamma;
    auto ep = e_generic(alg, gamma, gamma, samples, local);
    auto es = e_generic_self(alg, gamma, samples, local);
    auto c = c_generic(alg, gamma, samples, local);
    pt.e_pair = ep.value;
    pt.e_self = es.value;
    pt.c_val = c.value;
    pt.witness_seed = ep.witness_seed;
    pt.flagged = (ep.value > 0);
    if (pt.flagged) rep.flags.push_back(rep.points.size());
    rep.points.push_back(std::move(pt));
    ++rep.visited;
    ++idx;
    more = detail::box_step(gamma, radius);
  }
  rep.verdict = rep.flags.empty()
                    ? "no flags: no E-tameness counterevidence in the box"
                    : std::to_string(rep.flags.size()) + " positive pairwise e-invariant points";
  return rep;
}

}  // namespace tautilt
