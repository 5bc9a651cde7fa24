#include <doctest.h>

#include <tautilt/algebra.hpp>
#include <tautilt/builtins.hpp>
#include <tautilt/rng.hpp>

using namespace tautilt;

namespace {

template <class S>
AlgebraPtr<S> build(const AlgebraDef& def, const FieldSpec& fs) {
  return build_algebra<S>(def, FieldContext<S>{fs});
}

AlgebraDef jordan(long long bound, std::vector<RelationDef> rels = {}) {
  AlgebraDef def;
  def.vertices = {"1"};
  def.arrows = {{"x", "1", "1"}};
  def.relations = std::move(rels);
  def.nilpotency_bound = bound;
  return def;
}

template <class S>
Vec<S> random_elem(const Algebra<S>& alg, Rng& rng) {
  Vec<S> v(alg.dim());
  for (Index i = 0; i < alg.dim(); ++i) v(i) = alg.ctx().sample_uniform(rng);
  return v;
}

template <class S>
bool vec_zero(const Vec<S>& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!(v(i) == S(0))) return false;
  return true;
}

}  // namespace

TEST_CASE("kronecker basis") {
  auto alg = build<Rat>(builtins::kronecker(), FieldSpec::rational());
  CHECK(alg->dim() == 4);
  CHECK(alg->bucket_dim(0, 0) == 1);
  CHECK(alg->bucket_dim(1, 1) == 1);
  CHECK(alg->bucket_dim(1, 0) == 2);  // paths 2 -> 1: a, b
  CHECK(alg->bucket_dim(0, 1) == 0);
  CHECK(alg->basis_name(alg->trivial_idx(0)) == "e(1)");
  CHECK(alg->basis_name(alg->bucket(1, 0)[0]) == "a");
  CHECK(alg->basis_name(alg->bucket(1, 0)[1]) == "b");
}

TEST_CASE("linear quivers") {
  auto a2 = build<Rat>(builtins::a_n(2), FieldSpec::rational());
  CHECK(a2->dim() == 3);
  auto a3 = build<Fp>(builtins::a_n(3), FieldSpec::prime(5));
  CHECK(a3->dim() == 6);
  CHECK(a3->bucket_dim(0, 2) == 1);  // the length-2 path a2∘a1
  CHECK(a3->basis_name(a3->bucket(0, 2)[0]) == "a2*a1");
}

TEST_CASE("h_n dimensions") {
  for (int n = 1; n <= 3; ++n) {
    auto alg = build<Fp>(builtins::h_n(n), FieldSpec::prime(101));
    CHECK(alg->dim() == 4 * n);
  }
  auto h1 = build<Rat>(builtins::h_n(1), FieldSpec::rational());
  CHECK(h1->num_arrows() == 2);  // plain Kronecker quiver
  auto h2 = build<Rat>(builtins::h_n(2), FieldSpec::rational());
  // basis per bucket: {e1,c}, {e2,d}, {a,b,ad,bd}, {}
  CHECK(h2->bucket_dim(0, 0) == 2);
  CHECK(h2->bucket_dim(1, 1) == 2);
  CHECK(h2->bucket_dim(1, 0) == 4);
  CHECK(h2->bucket_dim(0, 1) == 0);
  // ca is eliminated in favour of ad (pivot = lex-largest path)
  CHECK(h2->basis_name(h2->bucket(1, 0)[2]) == "ad");
  CHECK(h2->basis_name(h2->bucket(1, 0)[3]) == "bd");
  // reduce ca: equals ad in the quotient
  Path ca{h2->arrow_index("c"), h2->arrow_index("a")};
  Vec<Rat> red = h2->reduce_path(ca);
  CHECK(red(h2->bucket(1, 0)[2]) == Rat(1));
  Index nonzero = 0;
  for (Index i = 0; i < red.size(); ++i)
    if (!(red(i) == Rat(0))) ++nonzero;
  CHECK(nonzero == 1);
}

TEST_CASE("commutative square") {
  AlgebraDef def;
  def.vertices = {"1", "2", "3", "4"};
  def.arrows = {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}};
  def.relations = {{{"1", {"b", "a"}}, {"-1", {"d", "c"}}}};
  def.nilpotency_bound = 3;
  auto alg = build<Rat>(def, FieldSpec::rational());
  CHECK(alg->dim() == 9);  // 4 trivial + 4 arrows + one length-2 class
  CHECK(alg->bucket_dim(0, 3) == 1);
  CHECK(alg->basis_name(alg->bucket(0, 3)[0]) == "ba");  // dc eliminated
}

TEST_CASE("associativity and unit") {
  std::vector<AlgebraDef> defs = {builtins::kronecker(), builtins::a_n(3), builtins::h_n(2),
                                  builtins::h_n(3)};
  for (const auto& def : defs) {
    auto alg = build<Fp>(def, FieldSpec::prime(101));
    Rng rng = make_rng(derive_seed(7, alg->dim()));
    for (int t = 0; t < 30; ++t) {
      Vec<Fp> u = random_elem(*alg, rng), v = random_elem(*alg, rng), w = random_elem(*alg, rng);
      Vec<Fp> lhs = alg->mult_elem(alg->mult_elem(u, v), w);
      Vec<Fp> rhs = alg->mult_elem(u, alg->mult_elem(v, w));
      CHECK(vec_zero<Fp>(lhs - rhs));
      CHECK(vec_zero<Fp>(alg->mult_elem(alg->one(), u) - u));
      CHECK(vec_zero<Fp>(alg->mult_elem(u, alg->one()) - u));
    }
  }
  auto alg = build<Rat>(builtins::h_n(2), FieldSpec::rational());
  Rng rng = make_rng(11);
  for (int t = 0; t < 10; ++t) {
    Vec<Rat> u = random_elem(*alg, rng), v = random_elem(*alg, rng), w = random_elem(*alg, rng);
    CHECK(vec_zero<Rat>(alg->mult_elem(alg->mult_elem(u, v), w) -
                        alg->mult_elem(u, alg->mult_elem(v, w))));
  }
}

TEST_CASE("bound certification rejects non-nilpotent quotients") {
  // loop with no relations: never admissible
  CHECK_THROWS_WITH_AS(build<Rat>(jordan(3), FieldSpec::rational()),
                       doctest::Contains("not admissible at bound 3"), UsageError);
  // x^2 - x^3 generates a non-admissible ideal (x never becomes nilpotent)
  CHECK_THROWS_WITH_AS(
      build<Rat>(jordan(5, {{{"1", {"x", "x"}}, {"-1", {"x", "x", "x"}}}}), FieldSpec::rational()),
      doctest::Contains("not admissible"), UsageError);
  // x^3 at bound 2 is too small, at bound 3 fine
  CHECK_THROWS_AS(build<Rat>(jordan(2, {{{"1", {"x", "x", "x"}}}}), FieldSpec::rational()),
                  UsageError);
  auto alg = build<Rat>(jordan(3, {{{"1", {"x", "x", "x"}}}}), FieldSpec::rational());
  CHECK(alg->dim() == 3);
  // raising the bound beyond the true nilpotency degree changes nothing
  auto alg2 = build<Rat>(jordan(5, {{{"1", {"x", "x", "x"}}}}), FieldSpec::rational());
  CHECK(alg2->dim() == 3);
}

TEST_CASE("definition validation") {
  AlgebraDef def = builtins::kronecker();
  def.vertices.push_back("1");
  CHECK_THROWS_AS(build<Rat>(def, FieldSpec::rational()), UsageError);

  def = builtins::kronecker();
  def.arrows.push_back({"a", "1", "2"});
  CHECK_THROWS_AS(build<Rat>(def, FieldSpec::rational()), UsageError);

  def = builtins::kronecker();
  def.arrows[0].from = "7";
  CHECK_THROWS_AS(build<Rat>(def, FieldSpec::rational()), UsageError);

  def = builtins::kronecker();
  def.nilpotency_bound = 0;
  CHECK_THROWS_AS(build<Rat>(def, FieldSpec::rational()), UsageError);

  // single-arrow relation is not inside the square of the arrow ideal
  def = jordan(4, {{{"1", {"x"}}}});
  CHECK_THROWS_WITH_AS(build<Rat>(def, FieldSpec::rational()), doctest::Contains("length < 2"),
                       UsageError);

  // endpoints mismatch inside one relation
  def = builtins::h_n(2);
  def.relations.push_back({{"1", {"c", "c"}}, {"1", {"d", "d"}}});
  CHECK_THROWS_WITH_AS(build<Rat>(def, FieldSpec::rational()),
                       doctest::Contains("endpoints mismatch"), UsageError);

  // unknown arrow in a relation
  def = builtins::kronecker();
  def.relations.push_back({{"1", {"z", "z"}}});
  CHECK_THROWS_AS(build<Rat>(def, FieldSpec::rational()), UsageError);
}

TEST_CASE("deterministic construction") {
  auto a1 = build<Fp>(builtins::h_n(3), FieldSpec::prime(13));
  auto a2 = build<Fp>(builtins::h_n(3), FieldSpec::prime(13));
  REQUIRE(a1->dim() == a2->dim());
  for (Index g = 0; g < a1->dim(); ++g) {
    CHECK(a1->basis_name(g) == a2->basis_name(g));
    CHECK(a1->basis_source(g) == a2->basis_source(g));
    CHECK(a1->basis_target(g) == a2->basis_target(g));
  }
}

TEST_CASE("euler pairing and dual weight") {
  IVec gamma(2), d(2);
  gamma << 1, -1;
  d << 1, 1;
  CHECK(euler_pair(gamma, d) == 0);
  d << 3, 1;
  CHECK(euler_pair(gamma, d) == 2);
  CHECK(dual_weight(gamma) == gamma);
  IVec bad(3);
  bad << 1, 2, 3;
  CHECK_THROWS_AS(euler_pair(gamma, bad), UsageError);
}

TEST_CASE("builtin registry") {
  CHECK(builtins::by_name("kronecker").name == "kronecker");
  CHECK(builtins::by_name("a4").vertices.size() == 4);
  CHECK(builtins::by_name("h3").relations.size() == 4);
  CHECK_THROWS_AS(builtins::by_name("zorro"), UsageError);
  CHECK_THROWS_AS(builtins::by_name("h"), UsageError);
  CHECK_THROWS_AS(builtins::by_name("a2x"), UsageError);
}
