#pragma once
// Release gate. Every check the project promises is encoded here with its
// expectations and time budgets pinned in code, shared between the acceptance
// binary and the `paper-suite` CLI subcommand.  Quick mode trims sample
// counts for smoke runs; expectations themselves never change.

#include <chrono>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <tautilt/builtins.hpp>
#include <tautilt/generic.hpp>
#include <tautilt/stability.hpp>

namespace tautilt {

struct SuiteCheck {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

struct SuiteResult {
  bool quick = false;
  std::vector<SuiteCheck> checks;
  [[nodiscard]] bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace suite_detail {

// first failure wins; the describe lambda runs only when it fires
struct Gate {
  bool ok = true;
  std::string why;
  template <class F>
  void check(bool cond, F&& describe) {
    if (!cond && ok) {
      ok = false;
      why = describe();
    }
  }
};

inline AlgebraPtr<Fp> build_fp(const AlgebraDef& def, std::uint64_t p) {
  return Algebra<Fp>::build(def, FieldContext<Fp>(FieldSpec::prime(p)));
}

inline IVec iv2(long long a, long long b) {
  IVec v(2);
  v << a, b;
  return v;
}

inline IVec rand_gamma(int nv, int radius, Rng& rng) {
  IVec g(nv);
  for (int i = 0; i < nv; ++i)
    g(i) = -radius + static_cast<long long>(rng() % (2 * static_cast<std::uint64_t>(radius) + 1));
  return g;
}

inline std::string ivec_str(const IVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + ")";
}

constexpr std::uint64_t kBigPrime = 2147483647ULL;

template <class F>
SuiteCheck timed(int id, std::string name, std::optional<double> limit, F&& body) {
  SuiteCheck c;
  c.id = id;
  c.name = std::move(name);
  Gate g;
  std::string detail;
  auto t0 = std::chrono::steady_clock::now();
  try {
    detail = body(g);
  } catch (const std::exception& e) {
    g.check(false, [&] { return std::string("exception: ") + e.what(); });
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.pass = g.ok;
  c.detail = g.ok ? detail : g.why;
  if (limit && c.seconds > *limit) {
    c.pass = false;
    std::ostringstream os;
    os << c.detail << " [over time budget: " << std::fixed << std::setprecision(1) << c.seconds
       << "s > " << *limit << "s]";
    c.detail = os.str();
  }
  return c;
}

// hom table of the n-dimensional band modules: blocks vanish off the leading
// parameter, the diagonal has dimension n
inline SuiteCheck c1_band_hom_table(bool) {
  return timed(1, "band hom table", 10.0, [&](Gate& g) {
    long long entries = 0;
    for (int n = 1; n <= 3; ++n) {
      auto h = build_fp(builtins::h_n(n), kBigPrime);
      const auto& ctx = h->ctx();
      std::vector<std::vector<Fp>> lams;
      for (int i = 0; i < 5; ++i) {
        std::vector<Fp> lam;
        lam.push_back(ctx.from_int(2 + 3 * i));  // distinct leading parameters
        for (int k = 1; k < n; ++k) lam.push_back(ctx.from_int(1 + i + k));
        lams.push_back(std::move(lam));
      }
      std::vector<Representation<Fp>> mods;
      for (const auto& lam : lams) mods.push_back(builtins::v_lambda(h, lam));
      for (size_t i = 0; i < mods.size(); ++i)
        for (size_t j = 0; j < mods.size(); ++j) {
          Index expect = (i == j) ? n : 0;
          Index got = hom_dim(mods[i], mods[j]);
          ++entries;
          g.check(got == expect, [&] {
            return "h" + std::to_string(n) + " hom(" + std::to_string(i) + "," +
                   std::to_string(j) + ") = " + std::to_string(got) + ", expected " +
                   std::to_string(expect);
          });
        }
    }
    return std::to_string(entries) + " hom entries exact over F_" + std::to_string(kBigPrime);
  });
}

// generic invariant chain on the band component: c = end = ext1 = n
inline SuiteCheck c2_band_chain(bool quick) {
  return timed(2, "band parameter chain", std::nullopt, [&](Gate& g) {
    int samples = quick ? 8 : 32;
    for (int n = 1; n <= 3; ++n) {
      auto h = build_fp(builtins::h_n(n), kBigPrime);
      IVec gamma = iv2(-1, 1);
      Rng rng = make_rng(0xC2000ULL + static_cast<std::uint64_t>(n));
      GenericEstimate cg = c_generic(h, gamma, samples, rng);
      GenericEstimate eg = end_generic(h, gamma, samples, rng);
      GenericEstimate xg = ext1_generic(h, gamma, samples, rng);
      auto expect = [&](const GenericEstimate& e) {
        g.check(e.value == n, [&] {
          return "h" + std::to_string(n) + " " + e.quantity + " = " + std::to_string(e.value) +
                 ", expected " + std::to_string(n);
        });
      };
      expect(cg);
      expect(eg);
      expect(xg);
    }
    return "c = end = ext1 = n for n = 1..3 at " + std::to_string(samples) + " samples";
  });
}

// pairing identity <g(V)-[P], dim X> = hom(V,X) - hom(X, tau V) - hom(P, X)
inline SuiteCheck c3_ar_identity(bool quick) {
  return timed(3, "ar g-vector identity", 30.0, [&](Gate& g) {
    std::vector<AlgebraDef> defs = {builtins::kronecker(), builtins::a_n(2), builtins::a_n(3),
                                    builtins::h_n(2)};
    int per = quick ? 32 : 128;
    long long triples = 0;
    for (const auto& def : defs) {
      auto alg = build_fp(def, kBigPrime);
      int nv = alg->num_vertices();
      Rng rng = make_rng(0xC3000ULL + static_cast<std::uint64_t>(alg->dim()));
      for (int t = 0; t < per; ++t) {
        auto V = cokernel(sample_presentation(alg, rand_gamma(nv, 2, rng), rng));
        auto X = cokernel(sample_presentation(alg, rand_gamma(nv, 2, rng), rng));
        IVec pc(nv);
        for (int i = 0; i < nv; ++i) pc(i) = static_cast<long long>(rng() % 3);
        long long res = ar_formula_check(V, X, pc);
        ++triples;
        g.check(res == 0, [&] {
          return def.name + " residual " + std::to_string(res) + " at V dims " +
                 ivec_str(V.dims) + ", X dims " + ivec_str(X.dims) + ", P " + ivec_str(pc);
        });
      }
    }
    return std::to_string(triples) + " random triples, residual identically zero";
  });
}

// minimal-presentation e-invariant against the module-level tau pairing
inline SuiteCheck c4_tau_hom_oracle(bool quick) {
  return timed(4, "tau-hom oracle", std::nullopt, [&](Gate& g) {
    std::vector<AlgebraDef> defs = {builtins::kronecker(), builtins::a_n(2), builtins::a_n(3),
                                    builtins::h_n(2)};
    int per = quick ? 48 : 200;
    long long pairs = 0;
    for (const auto& def : defs) {
      auto alg = build_fp(def, kBigPrime);
      int nv = alg->num_vertices();
      Rng rng = make_rng(0xC4000ULL + static_cast<std::uint64_t>(alg->dim()));
      for (int t = 0; t < per; ++t) {
        auto V = cokernel(sample_presentation(alg, rand_gamma(nv, 2, rng), rng));
        auto W = cokernel(sample_presentation(alg, rand_gamma(nv, 2, rng), rng));
        Index lhs = e_inv(min_presentation(V), min_presentation(W));
        Index rhs = hom_tau(V, W);
        ++pairs;
        g.check(lhs == rhs, [&] {
          return def.name + " e = " + std::to_string(lhs) + " vs hom tau = " +
                 std::to_string(rhs) + " at V dims " + ivec_str(V.dims) + ", W dims " +
                 ivec_str(W.dims);
        });
      }
    }
    return std::to_string(pairs) + " random pairs, e-invariant matches the tau pairing";
  });
}

struct ProbeBundle {
  std::vector<ProbeReport> fan;    // a2, a3, kronecker
  std::vector<ProbeReport> etame;  // kronecker, a2, h2
  double fan_seconds = 0.0;
  double etame_seconds = 0.0;
};

inline ProbeBundle compute_probes(bool quick) {
  ProbeBundle b;
  int samples = quick ? 8 : 32;
  auto t0 = std::chrono::steady_clock::now();
  {
    Rng r1 = make_rng(0xFA200);
    b.fan.push_back(demonet_probe(build_fp(builtins::a_n(2), kBigPrime), 2, samples, r1));
    Rng r2 = make_rng(0xFA300);
    b.fan.push_back(demonet_probe(build_fp(builtins::a_n(3), kBigPrime), 2, samples, r2));
    Rng r3 = make_rng(0xFA400);
    b.fan.push_back(demonet_probe(build_fp(builtins::kronecker(), kBigPrime), 2, samples, r3));
  }
  auto t1 = std::chrono::steady_clock::now();
  {
    Rng r1 = make_rng(0xE7100);
    b.etame.push_back(etame_probe(build_fp(builtins::kronecker(), kBigPrime), 2, samples, r1));
    Rng r2 = make_rng(0xE7200);
    b.etame.push_back(etame_probe(build_fp(builtins::a_n(2), kBigPrime), 2, samples, r2));
    Rng r3 = make_rng(0xE7300);
    b.etame.push_back(etame_probe(build_fp(builtins::h_n(2), kBigPrime), 2, samples, r3));
  }
  auto t2 = std::chrono::steady_clock::now();
  b.fan_seconds = std::chrono::duration<double>(t1 - t0).count();
  b.etame_seconds = std::chrono::duration<double>(t2 - t1).count();
  return b;
}

// every probed lattice point: cokernel-side c agrees with the diagonal e
inline SuiteCheck c5_c_equals_e(const ProbeBundle& b) {
  return timed(5, "diagonal e equals c on probe grid", std::nullopt, [&](Gate& g) {
    long long points = 0;
    auto scan = [&](const ProbeReport& r, const char* label) {
      for (const auto& pt : r.points) {
        ++points;
        g.check(pt.c_val >= 0 && pt.e_self >= 0 && pt.c_val == pt.e_self, [&] {
          return std::string(label) + " point " + ivec_str(pt.gamma) + ": c = " +
                 std::to_string(pt.c_val) + ", e = " + std::to_string(pt.e_self);
        });
      }
    };
    for (const auto& r : b.fan) scan(r, "fan");
    for (const auto& r : b.etame) scan(r, "etame");
    return std::to_string(points) + " probed points, c = e throughout";
  });
}

inline SuiteCheck c6_fan_probes(const ProbeBundle& b) {
  SuiteCheck c = timed(6, "fan probes", std::nullopt, [&](Gate& g) {
    const ProbeReport& a2 = b.fan[0];
    const ProbeReport& a3 = b.fan[1];
    const ProbeReport& kr = b.fan[2];
    g.check(a2.flags.empty(),
            [&] { return "a2 box flagged " + std::to_string(a2.flags.size()) + " points"; });
    g.check(a3.flags.empty(),
            [&] { return "a3 box flagged " + std::to_string(a3.flags.size()) + " points"; });
    g.check(kr.flags.size() == 2, [&] {
      return "kronecker box flagged " + std::to_string(kr.flags.size()) + " points, expected 2";
    });
    if (kr.flags.size() == 2) {
      const ProbePoint& p1 = kr.points[kr.flags[0]];
      const ProbePoint& p2 = kr.points[kr.flags[1]];
      g.check(p1.gamma == iv2(-1, 1) && p1.e_self == 1, [&] {
        return "first flag " + ivec_str(p1.gamma) + " with e = " + std::to_string(p1.e_self);
      });
      g.check(p2.gamma == iv2(-2, 2) && p2.e_self == 2, [&] {
        return "second flag " + ivec_str(p2.gamma) + " with e = " + std::to_string(p2.e_self);
      });
      g.check(p1.witness_indecomposable && p1.attachment == "indecomposable witness",
              [&] { return "(-1,1) witness attachment: " + p1.attachment; });
    }
    return "a2 and a3 boxes clean; kronecker flags exactly (-1,1) and (-2,2)";
  });
  c.seconds = b.fan_seconds;
  if (b.fan_seconds > 60.0) {
    c.pass = false;
    c.detail += " [over time budget: fan probes took " + std::to_string(b.fan_seconds) + "s]";
  }
  return c;
}

inline SuiteCheck c7_etame_probes(const ProbeBundle& b) {
  SuiteCheck c = timed(7, "e-tameness probes", std::nullopt, [&](Gate& g) {
    const char* names[] = {"kronecker", "a2", "h2"};
    long long visited = 0;
    for (size_t i = 0; i < b.etame.size(); ++i) {
      visited += b.etame[i].visited;
      g.check(b.etame[i].flags.empty(), [&] {
        return std::string(names[i]) + " pairwise-e box flagged " +
               std::to_string(b.etame[i].flags.size()) + " points";
      });
    }
    return std::to_string(visited) + " lattice points, no positive pairwise e-invariant";
  });
  c.seconds = b.etame_seconds;
  return c;
}

inline SuiteCheck c8_stable_family(bool) {
  return timed(8, "stable family construction", 10.0, [&](Gate& g) {
    auto kr = build_fp(builtins::kronecker(), 101);
    auto run = [&] {
      Rng rng = make_rng(42);
      return stable_family(kr, iv2(-1, 1), 4, rng);
    };
    auto rep = run();
    g.check(rep.attempted && rep.warnings.empty(),
            [&] { return "construction skipped or warned"; });
    g.check(rep.members.size() == 4,
            [&] { return std::to_string(rep.members.size()) + " members, expected 4"; });
    g.check(rep.family_dims.size() == 2 && rep.family_dims == iv2(1, 1),
            [&] { return "family dims " + ivec_str(rep.family_dims); });
    for (size_t i = 0; i < rep.factors.size(); ++i) {
      g.check(rep.stable_flags[i], [&] { return "slot " + std::to_string(i) + " not stable"; });
      g.check(rep.end_dims[i] == 1, [&] {
        return "slot " + std::to_string(i) + " End dimension " + std::to_string(rep.end_dims[i]);
      });
      for (size_t j = 0; j < rep.factors.size(); ++j)
        if (i != j)
          g.check(rep.hom_matrix[i][j] == 0, [&] {
            return "hom(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                   std::to_string(rep.hom_matrix[i][j]);
          });
    }
    auto rep2 = run();
    bool same = rep2.members.size() == rep.members.size();
    for (size_t i = 0; same && i < rep.members.size(); ++i) {
      same = rep.members[i].dims == rep2.members[i].dims;
      for (size_t k = 0; same && k < rep.members[i].arrows.size(); ++k)
        same = rep.members[i].arrows[k] == rep2.members[i].arrows[k];
    }
    g.check(same, [] { return std::string("re-run with the same seed diverged"); });
    return "4 stable (1,1)-modules over F_101, hom-orthogonal, End = k, deterministic";
  });
}

inline SuiteCheck c9_stable_counts(bool) {
  return timed(9, "stable count growth", std::nullopt, [&](Gate& g) {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
      auto kr = build_fp(builtins::kronecker(), p);
      long long n = count_stables(kr, iv2(1, 1), iv2(-1, 1));
      g.check(n == static_cast<long long>(p) + 1, [&] {
        return "F_" + std::to_string(p) + ": " + std::to_string(n) + " stables, expected " +
               std::to_string(p + 1);
      });
    }
    return "count at dims (1,1) is p + 1 for p = 2, 3, 5";
  });
}

inline SuiteCheck c10_serre_inclusion(bool) {
  return timed(10, "serre inclusion", std::nullopt, [&](Gate& g) {
    auto a2 = build_fp(builtins::a_n(2), 2);
    auto zero2 = zero_rep(a2);
    long long modules = 0, violations = 0;
    IVec bound = iv2(2, 2);
    IVec d = IVec::Zero(2);
    bool more = true;
    while (more) {
      for_each_rep(a2, d, 2000000ULL, [&](const Representation<Fp>& X) {
        ++modules;
        SerreReport rep = serre_inclusion_check(X, zero2, bound);
        violations += rep.violations;
        g.check(rep.violations == 0, [&] {
          return "a2 pair at dims " + ivec_str(X.dims) + ": " + std::to_string(rep.violations) +
                 " violations; first: " + (rep.notes.empty() ? "" : rep.notes.front());
        });
      });
      more = false;
      for (Index i = 0; i < d.size(); ++i) {
        if (d(i) < bound(i)) {
          d(i) += 1;
          more = true;
          break;
        }
        d(i) = 0;
      }
    }
    auto kr = build_fp(builtins::kronecker(), 5);
    auto zerok = zero_rep(kr);
    const auto& ctx = kr->ctx();
    long long spot = 0;
    for (int lam = 0; lam < 3; ++lam) {
      auto R = builtins::v_lambda(kr, std::vector<Fp>{ctx.from_int(lam)});
      SerreReport rep = serre_inclusion_check(R, zerok, iv2(2, 1));
      spot += rep.inspected;
      g.check(rep.violations == 0, [&] {
        return "kronecker band " + std::to_string(lam) + ": " +
               std::to_string(rep.violations) + " violations";
      });
    }
    return std::to_string(modules) + " exhaustive a2 pairs over F_2 plus " +
           std::to_string(spot) + " kronecker spot modules, zero violations";
  });
}

inline SuiteCheck c11_rigid_inventory(bool) {
  return timed(11, "rigid search inventory", std::nullopt, [&](Gate& g) {
    auto a2 = build_fp(builtins::a_n(2), 101);
    Rng rng = make_rng(515);
    auto found = rigid_search(a2, 2, 3, rng);
    auto dims_of = [](const std::vector<Representation<Fp>>& v) {
      std::vector<std::pair<long long, long long>> ds;
      for (const auto& m : v) ds.emplace_back(m.dims(0), m.dims(1));
      std::sort(ds.begin(), ds.end());
      return ds;
    };
    std::vector<std::pair<long long, long long>> expect_a2 = {{0, 1}, {1, 0}, {1, 1}};
    g.check(dims_of(found) == expect_a2, [&] {
      return "a2 inventory has " + std::to_string(found.size()) + " modules";
    });
    auto kr = build_fp(builtins::kronecker(), 101);
    auto kfound = rigid_search(kr, 3, 3, rng);
    std::vector<std::pair<long long, long long>> expect_kr = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
    g.check(dims_of(kfound) == expect_kr, [&] {
      return "kronecker inventory has " + std::to_string(kfound.size()) + " modules";
    });
    for (const auto& V : kfound) {
      g.check(is_tau_rigid(V), [&] { return "non-rigid member at dims " + ivec_str(V.dims); });
      Rng r2 = make_rng(derive_seed(99, static_cast<std::uint64_t>(V.dims(0))));
      g.check(!try_split(V, r2).split,
              [&] { return "decomposable member at dims " + ivec_str(V.dims); });
    }
    return "a2: simples plus the projective cover; kronecker: the four rigids of total dim <= 3";
  });
}

}  // namespace suite_detail

inline SuiteResult run_suite(bool quick) {
  using namespace suite_detail;
  SuiteResult res;
  res.quick = quick;
  res.checks.push_back(c1_band_hom_table(quick));
  res.checks.push_back(c2_band_chain(quick));
  res.checks.push_back(c3_ar_identity(quick));
  res.checks.push_back(c4_tau_hom_oracle(quick));
  ProbeBundle probes = compute_probes(quick);
  res.checks.push_back(c5_c_equals_e(probes));
  res.checks.push_back(c6_fan_probes(probes));
  res.checks.push_back(c7_etame_probes(probes));
  res.checks.push_back(c8_stable_family(quick));
  res.checks.push_back(c9_stable_counts(quick));
  res.checks.push_back(c10_serre_inclusion(quick));
  res.checks.push_back(c11_rigid_inventory(quick));
  std::sort(res.checks.begin(), res.checks.end(),
            [](const SuiteCheck& a, const SuiteCheck& b) { return a.id < b.id; });
  return res;
}

inline void print_suite(const SuiteResult& res, std::ostream& out) {
  for (const auto& c : res.checks) {
    out << "[" << std::setw(2) << c.id << "] " << (c.pass ? "PASS" : "FAIL") << "  "
        << std::fixed << std::setprecision(2) << std::setw(7) << c.seconds << "s  " << c.name
        << ": " << c.detail << "\n";
  }
  out << (res.all_pass() ? "suite: all checks passed" : "suite: FAILURES present")
      << (res.quick ? " (quick mode)" : "") << "\n";
}

}  // namespace tautilt
