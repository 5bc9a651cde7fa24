#include <doctest.h>

#include <set>
#include <tautilt/builtins.hpp>
#include <tautilt/rep.hpp>
#include <tautilt/rng.hpp>

using namespace tautilt;

namespace {

template <class S>
AlgebraPtr<S> build(const AlgebraDef& def, const FieldSpec& fs) {
  return build_algebra<S>(def, FieldContext<S>{fs});
}

// R_λ on the Kronecker algebra: dims (1,1), a = 1, b = λ.
template <class S>
Representation<S> band(AlgebraPtr<S> alg, long long lam) {
  return builtins::v_lambda(alg, std::vector<S>{alg->ctx().from_int(lam)});
}

IVec dims2(long long a, long long b) {
  IVec d(2);
  d << a, b;
  return d;
}

// Independent oracle: every arrow-stable tuple of graded subspaces, found by
// enumerating all per-vertex subspaces as column spaces of small matrices.
// Only usable for tiny dims over tiny primes.
int count_stable_subspace_tuples(const Representation<Fp>& V) {
  auto& ctx = V.alg->ctx();
  unsigned long long p = ctx.spec.p;
  int nv = V.alg->num_vertices();
  std::vector<std::vector<Mat<Fp>>> per_vertex(static_cast<size_t>(nv));
  for (int i = 0; i < nv; ++i) {
    Index d = V.dims(i);
    std::set<std::string> seen;
    std::vector<unsigned long long> digits(static_cast<size_t>(d * d), 0);
    while (true) {
      Mat<Fp> m = detail::zero_mat(ctx, d, d);
      Index at = 0;
      for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c)
          m(r, c) = ctx.from_int(static_cast<long long>(digits[static_cast<size_t>(at++)]));
      Mat<Fp> cs = column_space(m);
      std::string key = std::to_string(cs.cols()) + ":";
      for (Index c = 0; c < cs.cols(); ++c)
        for (Index r = 0; r < cs.rows(); ++r) key += ctx.to_string(cs(r, c)) + ",";
      if (seen.insert(key).second) per_vertex[static_cast<size_t>(i)].push_back(cs);
      size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p) digits[pos++] = 0;
      if (digits.empty() || pos == digits.size()) break;
    }
  }
  // cross product, filter arrow stability: V_a(U_s) ⊆ U_t for all arrows
  std::vector<size_t> idx(static_cast<size_t>(nv), 0);
  int count = 0;
  while (true) {
    bool stable = true;
    for (int k = 0; k < V.alg->num_arrows() && stable; ++k) {
      int s = V.alg->arrow(k).from, t = V.alg->arrow(k).to;
      const Mat<Fp>& Us = per_vertex[static_cast<size_t>(s)][idx[static_cast<size_t>(s)]];
      const Mat<Fp>& Ut = per_vertex[static_cast<size_t>(t)][idx[static_cast<size_t>(t)]];
      Mat<Fp> img = V.arrows[static_cast<size_t>(k)] * Us;
      Mat<Fp> joined(img.rows(), img.cols() + Ut.cols());
      joined << Ut, img;
      stable = rank(joined) == Ut.cols();
    }
    if (stable) ++count;
    size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == per_vertex[pos].size()) idx[pos++] = 0;
    if (idx.empty() || pos == idx.size()) break;
  }
  return count;
}

}  // namespace

TEST_CASE("projectives and injectives") {
  auto kr = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  CHECK(projective(kr, 0).dims == dims2(1, 0));
  CHECK(projective(kr, 1).dims == dims2(2, 1));
  CHECK(injective(kr, 0).dims == dims2(1, 2));
  CHECK(injective(kr, 1).dims == dims2(0, 1));
  auto a2 = build<Rat>(builtins::a_n(2), FieldSpec::rational());
  CHECK(projective(a2, 0).dims == dims2(1, 1));
  CHECK(injective(a2, 1).dims == dims2(1, 1));
  for (int n = 2; n <= 3; ++n) {
    auto hn = build<Fp>(builtins::h_n(n), FieldSpec::prime(101));
    CHECK(projective(hn, 0).dims == dims2(n, 0));
    CHECK(projective(hn, 1).dims == dims2(2 * n, n));
    CHECK(injective(hn, 0).dims == dims2(n, 2 * n));
    CHECK(injective(hn, 1).dims == dims2(0, n));
    // sum of projective dims = dim A = sum of injective dims
    CHECK(projective(hn, 0).total_dim() + projective(hn, 1).total_dim() == hn->dim());
    CHECK(injective(hn, 0).total_dim() + injective(hn, 1).total_dim() == hn->dim());
    CHECK(!check(projective(hn, 0)));
    CHECK(!check(projective(hn, 1)));
    CHECK(!check(injective(hn, 0)));
    CHECK(!check(injective(hn, 1)));
  }
}

TEST_CASE("relation check") {
  auto h2 = build<Rat>(builtins::h_n(2), FieldSpec::rational());
  auto ctx = h2->ctx();
  CHECK(!check(zero_rep(h2)));
  auto V = builtins::v_lambda(h2, std::vector<Rat>{Rat(3), Rat(1)});
  CHECK(!check(V));
  // break the c-loop: make it non-nilpotent
  auto bad = V;
  bad.arrows[static_cast<size_t>(h2->arrow_index("c"))] = detail::identity_mat(ctx, 2);
  auto report = check(bad);
  REQUIRE(report.has_value());
  CHECK(report->find("relation 0") != std::string::npos);
}

TEST_CASE("hom dimensions") {
  auto kr = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  auto s1 = simple(kr, 0), s2 = simple(kr, 1);
  CHECK(hom_dim(s1, s1) == 1);
  CHECK(hom_dim(s1, s2) == 0);
  CHECK(hom_dim(s2, s1) == 0);
  auto r2 = band<Rat>(kr, 2), r3 = band<Rat>(kr, 3);
  CHECK(hom_dim(r2, r3) == 0);
  CHECK(hom_dim(r2, r2) == 1);
  for (int n = 2; n <= 3; ++n) {
    auto hn = build<Fp>(builtins::h_n(n), FieldSpec::prime(101));
    auto& ctx = hn->ctx();
    std::vector<Fp> lam, mu, same1;
    for (int k = 0; k < n; ++k) {
      lam.push_back(ctx.from_int(2 + k));
      mu.push_back(ctx.from_int(5 + k));
      same1.push_back(ctx.from_int(k == 0 ? 2 : 9 - k));  // same first coefficient as lam
    }
    auto vl = builtins::v_lambda(hn, lam), vm = builtins::v_lambda(hn, mu);
    CHECK(!check(vl));
    CHECK(hom_dim(vl, vm) == 0);  // different leading coefficient
    CHECK(hom_dim(vm, vl) == 0);
    CHECK(hom_dim(vl, vl) == n);
  }
}

TEST_CASE("hom from projectives equals component dimension") {
  Rng rng = make_rng(404);
  for (const auto& def : {builtins::kronecker(), builtins::a_n(3)}) {
    auto alg = build<Fp>(def, FieldSpec::prime(13));
    auto& ctx = alg->ctx();
    for (int t = 0; t < 50; ++t) {
      IVec dims(alg->num_vertices());
      for (int i = 0; i < alg->num_vertices(); ++i)
        dims(i) = static_cast<long long>(rng() % 3);
      std::vector<Mat<Fp>> arrows;
      for (int k = 0; k < alg->num_arrows(); ++k) {
        Mat<Fp> m = detail::zero_mat(ctx, dims(alg->arrow(k).to), dims(alg->arrow(k).from));
        for (Index r = 0; r < m.rows(); ++r)
          for (Index c = 0; c < m.cols(); ++c) m(r, c) = ctx.sample_uniform(rng);
        arrows.push_back(std::move(m));
      }
      auto V = make_rep(alg, dims, std::move(arrows));
      REQUIRE(!check(V));
      for (int i = 0; i < alg->num_vertices(); ++i)
        CHECK(hom_dim(projective(alg, i), V) == V.dims(i));
    }
  }
  // with relations: structured modules on h_2
  auto h2 = build<Fp>(builtins::h_n(2), FieldSpec::prime(7));
  auto& ctx = h2->ctx();
  std::vector<Representation<Fp>> mods = {
      simple(h2, 0), simple(h2, 1), projective(h2, 0), projective(h2, 1),
      injective(h2, 0), injective(h2, 1),
      builtins::v_lambda(h2, std::vector<Fp>{ctx.from_int(4), ctx.from_int(1)})};
  mods.push_back(direct_sum(mods[0], mods[3]));
  for (const auto& V : mods)
    for (int i = 0; i < 2; ++i) CHECK(hom_dim(projective(h2, i), V) == V.dims(i));
}

TEST_CASE("direct sum additivity") {
  auto kr = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  auto r2 = band<Rat>(kr, 2), r3 = band<Rat>(kr, 3);
  auto s1 = simple(kr, 0);
  auto sum = direct_sum(r2, r3);
  CHECK(sum.dims == dims2(2, 2));
  CHECK(!check(sum));
  for (const auto& X : {r2, r3, s1, projective(kr, 1)}) {
    CHECK(hom_dim(sum, X) == hom_dim(r2, X) + hom_dim(r3, X));
    CHECK(hom_dim(X, sum) == hom_dim(X, r2) + hom_dim(X, r3));
  }
  auto with_zero = direct_sum(r2, zero_rep(kr));
  CHECK(with_zero.dims == r2.dims);
  CHECK(hom_dim(with_zero, r2) == 1);
}

TEST_CASE("submodule closure") {
  auto kr = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  auto& ctx = kr->ctx();
  auto r5 = band<Rat>(kr, 5);
  // seed with the vertex-2 basis: arrows map it onto vertex 1, giving all of R_5
  {
    std::vector<Mat<Rat>> seeds = {detail::zero_mat(ctx, Index(1), Index(0)),
                                   detail::identity_mat(ctx, 1)};
    auto sub = submodule_closure(r5, seeds);
    CHECK(sub.rep.dims == dims2(1, 1));
    CHECK(is_submodule_of(r5, sub));
  }
  // seed with a vertex-1 vector: no arrows out, stays the simple S_1
  {
    std::vector<Mat<Rat>> seeds = {detail::identity_mat(ctx, 1),
                                   detail::zero_mat(ctx, Index(1), Index(0))};
    auto sub = submodule_closure(r5, seeds);
    CHECK(sub.rep.dims == dims2(1, 0));
  }
  // closure of the full basis is V itself
  {
    std::vector<Mat<Rat>> seeds = {detail::identity_mat(ctx, 1), detail::identity_mat(ctx, 1)};
    auto sub = submodule_closure(r5, seeds);
    CHECK(sub.rep.dims == r5.dims);
  }
}

TEST_CASE("all submodules") {
  auto count = [](const Representation<Fp>& V) {
    auto subs = all_submodules(V);
    for (const auto& u : subs) {
      CHECK(is_submodule_of(V, u));
      CHECK(!check(u.rep));
      CHECK(u.rep.total_dim() <= V.total_dim());
    }
    // deterministic: first is 0, last is V
    REQUIRE(!subs.empty());
    CHECK(subs.front().rep.total_dim() == 0);
    CHECK(subs.back().rep.total_dim() == V.total_dim());
    return static_cast<int>(subs.size());
  };

  auto kr2 = build<Fp>(builtins::kronecker(), FieldSpec::prime(2));
  CHECK(count(simple(kr2, 0)) == 2);
  CHECK(count(band<Fp>(kr2, 1)) == 3);
  CHECK(count(projective(kr2, 1)) == 6);
  auto kr5 = build<Fp>(builtins::kronecker(), FieldSpec::prime(5));
  CHECK(count(band<Fp>(kr5, 3)) == 3);
  CHECK(count(direct_sum(simple(kr5, 0), simple(kr5, 0))) == 5 + 3);

  // brute-force subspace oracle agrees
  CHECK(count_stable_subspace_tuples(projective(kr2, 1)) == 6);
  CHECK(count_stable_subspace_tuples(band<Fp>(kr5, 3)) == 3);
  CHECK(count_stable_subspace_tuples(direct_sum(simple(kr5, 0), simple(kr5, 0))) == 8);
  auto h2f2 = build<Fp>(builtins::h_n(2), FieldSpec::prime(2));
  auto vl = builtins::v_lambda(h2f2, std::vector<Fp>{h2f2->ctx().from_int(1), h2f2->ctx().from_int(0)});
  CHECK(count(vl) == count_stable_subspace_tuples(vl));

  // budget guard
  auto big = direct_sum(projective(kr5, 1), projective(kr5, 1));
  CHECK_THROWS_AS(all_submodules(big, 100), ComputeError);
  auto krq = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  CHECK_THROWS_AS(all_submodules(band<Rat>(krq, 2)), UsageError);
}

TEST_CASE("quotients") {
  auto kr = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  auto& ctx = kr->ctx();
  auto r5 = band<Rat>(kr, 5);
  std::vector<Mat<Rat>> zero_seeds = {detail::zero_mat(ctx, Index(1), Index(0)),
                                      detail::zero_mat(ctx, Index(1), Index(0))};
  auto zero_sub = submodule_closure(r5, zero_seeds);
  CHECK(quotient(r5, zero_sub).rep.dims == r5.dims);
  std::vector<Mat<Rat>> full_seeds = {detail::identity_mat(ctx, 1), detail::identity_mat(ctx, 1)};
  auto full_sub = submodule_closure(r5, full_seeds);
  CHECK(quotient(r5, full_sub).rep.total_dim() == 0);
  std::vector<Mat<Rat>> s1_seeds = {detail::identity_mat(ctx, 1),
                                    detail::zero_mat(ctx, Index(1), Index(0))};
  auto s1_sub = submodule_closure(r5, s1_seeds);
  auto q = quotient(r5, s1_sub);
  CHECK(q.rep.dims == dims2(0, 1));
  CHECK(!check(q.rep));
  // projection intertwines: π_t V_a = Q_a π_s
  for (int k = 0; k < kr->num_arrows(); ++k) {
    int s = kr->arrow(k).from, t = kr->arrow(k).to;
    Mat<Rat> lhs = q.proj[static_cast<size_t>(t)] * r5.arrows[static_cast<size_t>(k)];
    Mat<Rat> rhs = q.rep.arrows[static_cast<size_t>(k)] * q.proj[static_cast<size_t>(s)];
    CHECK(is_zero_matrix(Mat<Rat>(lhs - rhs)));
  }
  // not a submodule: vertex-2 line alone is not arrow-stable
  SubRep<Rat> fake;
  fake.rep = simple(kr, 1);
  fake.incl = {detail::zero_mat(ctx, Index(1), Index(0)), detail::identity_mat(ctx, 1)};
  CHECK_THROWS_AS(quotient(r5, fake), UsageError);
}

TEST_CASE("trace") {
  auto a2 = build<Rat>(builtins::a_n(2), FieldSpec::rational());
  auto p1 = projective(a2, 0);
  CHECK(trace_of(simple(a2, 0), p1).rep.total_dim() == 0);
  CHECK(trace_of(p1, p1).rep.dims == p1.dims);
  auto kr = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  auto r2 = band<Rat>(kr, 2), r3 = band<Rat>(kr, 3);
  CHECK(trace_of(r2, r3).rep.total_dim() == 0);
  // postcondition: hom into the quotient by the trace vanishes
  std::vector<std::pair<Representation<Rat>, Representation<Rat>>> pairs = {
      {simple(kr, 1), r2},
      {r2, direct_sum(r2, r3)},
      {projective(kr, 1), direct_sum(simple(kr, 0), r3)},
      {simple(kr, 0), projective(kr, 1)}};
  for (const auto& [V, X] : pairs) {
    auto tr = trace_of(V, X);
    auto q = quotient(X, tr);
    CHECK(hom_dim(V, q.rep) == 0);
  }
}

TEST_CASE("fitting splits") {
  auto kr = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  Rng rng = make_rng(99);
  CHECK(!try_split(simple(kr, 0), rng).split);
  CHECK(!try_split(band<Rat>(kr, 4), rng).split);
  {
    auto res = try_split(direct_sum(simple(kr, 0), simple(kr, 1)), rng);
    REQUIRE(res.split);
    CHECK(res.first.total_dim() + res.second.total_dim() == 2);
  }
  {
    auto res = try_split(direct_sum(band<Rat>(kr, 2), band<Rat>(kr, 3)), rng);
    REQUIRE(res.split);
    CHECK(res.first.total_dim() == 2);
    CHECK(res.second.total_dim() == 2);
    CHECK(!check(res.first));
    CHECK(!check(res.second));
  }
  // huge prime: the hom-basis sweep must find the split without luck
  auto krbig = build<Fp>(builtins::kronecker(), FieldSpec::prime(2147483647ULL));
  auto res = try_split(direct_sum(band<Fp>(krbig, 2), band<Fp>(krbig, 3)), rng);
  CHECK(res.split);
}

TEST_CASE("representation enumeration") {
  auto h2 = build<Fp>(builtins::h_n(2), FieldSpec::prime(2));
  int count = 0;
  for_each_rep(h2, dims2(1, 1), 1ULL << 20, [&](const Representation<Fp>& V) {
    CHECK(!check(V));
    ++count;
  });
  CHECK(count == 4);  // c and d are forced to zero, a and b free over F_2
  auto kr3 = build<Fp>(builtins::kronecker(), FieldSpec::prime(3));
  count = 0;
  for_each_rep(kr3, dims2(1, 1), 1ULL << 20, [&](const Representation<Fp>&) { ++count; });
  CHECK(count == 9);
  CHECK_THROWS_AS(for_each_rep(kr3, dims2(3, 3), 10, [](const Representation<Fp>&) {}),
                  ComputeError);
}

TEST_CASE("isomorphism search") {
  auto kr = build<Fp>(builtins::kronecker(), FieldSpec::prime(101));
  Rng rng = make_rng(7);
  auto r2 = band<Fp>(kr, 2), r3 = band<Fp>(kr, 3);
  CHECK(probably_isomorphic(r2, r2, rng));
  CHECK(!probably_isomorphic(r2, r3, rng));
  CHECK(!probably_isomorphic(r2, simple(kr, 0), rng));
  auto s12 = direct_sum(simple(kr, 0), simple(kr, 1));
  auto s21 = direct_sum(simple(kr, 1), simple(kr, 0));
  CHECK(probably_isomorphic(s12, s21, rng));
}
