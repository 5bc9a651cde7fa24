// Path algebras of quivers modulo admissible relations.
//
// An algebra is described by an AlgebraDef (vertices, arrows, relations as
// coefficient/path lists, and a nilpotency bound N asserting that every path
// of length N vanishes in the quotient).  build() validates the input,
// certifies the bound, and produces an immutable Algebra with a reduced path
// basis and multiplication on it.
//
// Conventions, also documented in README.md:
//   * paths are written in composition order: the path ["c","a"] means c∘a,
//     i.e. a acts first.  A path composes s --a--> m --c--> t.
//   * representations are left modules: an arrow a: s -> t acts as a linear
//     map from the vertex-s component to the vertex-t component.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautilt/fields.hpp"
#include "tautilt/linalg.hpp"

namespace tautilt {

struct ArrowDef {
  std::string name;
  std::string from;
  std::string to;
};

struct RelationTermDef {
  std::string coeff;               // decimal integer or "p/q"
  std::vector<std::string> path;   // arrow names, composition order
};

using RelationDef = std::vector<RelationTermDef>;

struct AlgebraDef {
  std::string name;                // optional label, carried through to output
  std::vector<std::string> vertices;
  std::vector<ArrowDef> arrows;
  std::vector<RelationDef> relations;
  long long nilpotency_bound = 0;
  std::optional<FieldSpec> field;  // present when the def came from a file
};

// Arrow index sequence in composition order (front acts last).
using Path = std::vector<int>;

template <class S>
class Algebra : public std::enable_shared_from_this<Algebra<S>> {
 public:
  struct Arrow {
    std::string name;
    int from = 0;
    int to = 0;
  };

  struct Term {
    S coeff;
    Path path;
  };

  static std::shared_ptr<const Algebra<S>> build(const AlgebraDef& def,
                                                 const FieldContext<S>& ctx) {
    auto alg = std::shared_ptr<Algebra<S>>(new Algebra<S>(ctx));
    alg->construct(def);
    return alg;
  }

  const AlgebraDef& def() const { return def_; }
  const std::string& name() const { return def_.name; }
  const FieldContext<S>& ctx() const { return ctx_; }
  const FieldSpec& field() const { return ctx_.spec; }
  long long nilpotency_bound() const { return bound_; }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  int vertex_index(const std::string& v) const {
    for (int i = 0; i < num_vertices(); ++i)
      if (vertices_[i] == v) return i;
    throw UsageError("unknown vertex '" + v + "'");
  }

  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const Arrow& arrow(int k) const { return arrows_[static_cast<size_t>(k)]; }
  int arrow_index(const std::string& name) const {
    for (int k = 0; k < num_arrows(); ++k)
      if (arrows_[static_cast<size_t>(k)].name == name) return k;
    throw UsageError("unknown arrow '" + name + "'");
  }

  const std::vector<std::vector<Term>>& parsed_relations() const { return relations_; }

  // Total dimension over the base field.
  Index dim() const { return static_cast<Index>(basis_.size()); }

  // Basis paths i -> j, as global basis indices in canonical order.
  const std::vector<Index>& bucket(int i, int j) const {
    return buckets_[bucket_id(i, j)].global;
  }
  Index bucket_dim(int i, int j) const {
    return static_cast<Index>(bucket(i, j).size());
  }

  int basis_source(Index g) const { return basis_[static_cast<size_t>(g)].source; }
  int basis_target(Index g) const { return basis_[static_cast<size_t>(g)].target; }
  const Path& basis_path(Index g) const { return basis_[static_cast<size_t>(g)].path; }
  Index trivial_idx(int v) const { return trivial_[static_cast<size_t>(v)]; }

  std::string path_name(const Path& p) const {
    if (p.empty()) return "e(" + vertices_[static_cast<size_t>(path_source(p))] + ")";
    std::string out;
    bool longnames = false;
    for (const auto& a : arrows_) longnames = longnames || a.name.size() > 1;
    for (size_t k = 0; k < p.size(); ++k) {
      if (k && longnames) out += "*";
      out += arrows_[static_cast<size_t>(p[static_cast<size_t>(k)])].name;
    }
    return out;
  }
  std::string basis_name(Index g) const {
    const auto& b = basis_[static_cast<size_t>(g)];
    return b.path.empty() ? "e(" + vertices_[static_cast<size_t>(b.source)] + ")"
                          : path_name(b.path);
  }

  // Expression of an arbitrary path (arrow index sequence, composition order)
  // in the global basis.  The path must be composable.
  Vec<S> reduce_path(const Path& p) const {
    int s = path_source_checked(p);
    int t = path_target(p);
    const BucketData& bd = buckets_[bucket_id(s, t)];
    Vec<S> out = zero_vec(dim());
    if (p.size() > static_cast<size_t>(reach_)) return out;  // beyond L: zero
    auto it = bd.id.find(p);
    if (it == bd.id.end()) return out;  // no such path of length <= L
    for (Index l = 0; l < static_cast<Index>(bd.global.size()); ++l)
      out(bd.global[static_cast<size_t>(l)]) = bd.to_basis(l, it->second);
    return out;
  }

  // Product of two basis elements, e_gi ∘ e_gj (gj acts first).
  Vec<S> mult_basis(Index gi, Index gj) const {
    const auto& bi = basis_[static_cast<size_t>(gi)];
    const auto& bj = basis_[static_cast<size_t>(gj)];
    if (bi.source != bj.target) return zero_vec(dim());
    Path cat = bi.path;
    cat.insert(cat.end(), bj.path.begin(), bj.path.end());
    if (cat.empty()) {       // e_v ∘ e_v
      Vec<S> out = zero_vec(dim());
      out(gi) = ctx_.from_int(1);
      return out;
    }
    return reduce_path(cat);
  }

  // Bilinear extension of mult_basis to arbitrary elements.
  Vec<S> mult_elem(const Vec<S>& u, const Vec<S>& v) const {
    Vec<S> out = zero_vec(dim());
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(u(i))) continue;
      for (Index j = 0; j < dim(); ++j) {
        if (is_zero(v(j))) continue;
        out += (u(i) * v(j)) * mult_basis(i, j);
      }
    }
    return out;
  }

  Vec<S> one() const {
    Vec<S> out = zero_vec(dim());
    for (int v = 0; v < num_vertices(); ++v) out(trivial_[static_cast<size_t>(v)]) = ctx_.from_int(1);
    return out;
  }

  // Matrix of q |-> x∘q on basis paths, bucket(i, source(x)) -> bucket(i, target(x)).
  Mat<S> left_mult_matrix(const Path& x, int i) const {
    int xs = path_source_checked(x);
    int xt = path_target(x);
    return mult_matrix(x, i, xs, i, xt, /*left=*/true);
  }

  // Matrix of q |-> q∘x on basis paths, bucket(target(x), m) -> bucket(source(x), m).
  Mat<S> right_mult_matrix(const Path& x, int m) const {
    int xs = path_source_checked(x);
    int xt = path_target(x);
    return mult_matrix(x, xt, m, xs, m, /*left=*/false);
  }

  Path arrow_as_path(int arrowIdx) const { return Path{arrowIdx}; }

 private:
  struct BasisElem {
    Path path;
    int source = 0, target = 0;
  };
  struct BucketData {
    std::vector<Path> paths;   // all paths of length <= L, ascending (len, lex)
    std::map<Path, int> id;    // path -> index into `paths`
    std::vector<int> basis_paths;  // indices into `paths` that form the quotient basis
    std::vector<Index> global;     // same, as global basis indices
    Mat<S> to_basis;               // |basis| x |paths|; column = reduced expression
  };

  explicit Algebra(const FieldContext<S>& ctx) : ctx_(ctx) {}

  int bucket_id(int s, int t) const { return s * num_vertices() + t; }

  int path_source(const Path& p) const {
    return p.empty() ? trivial_vertex_hint_ : arrows_[static_cast<size_t>(p.back())].from;
  }
  int path_target(const Path& p) const {
    return p.empty() ? trivial_vertex_hint_ : arrows_[static_cast<size_t>(p.front())].to;
  }
  int path_source_checked(const Path& p) const {
    if (p.empty()) throw std::logic_error("trivial path has no intrinsic vertex here");
    for (size_t k = 0; k + 1 < p.size(); ++k) {
      const Arrow& hi = arrows_[static_cast<size_t>(p[k])];
      const Arrow& lo = arrows_[static_cast<size_t>(p[k + 1])];
      if (hi.from != lo.to) throw std::logic_error("non-composable path");
    }
    return arrows_[static_cast<size_t>(p.back())].from;
  }

  Vec<S> zero_vec(Index n) const {
    Vec<S> v(n);
    for (Index i = 0; i < n; ++i) v(i) = ctx_.from_int(0);
    return v;
  }
  static bool is_zero(const S& x) { return x == S(0); }

  bool path_less(const Path& a, const Path& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t k = 0; k < a.size(); ++k) {
      int ra = lexrank_[static_cast<size_t>(a[k])], rb = lexrank_[static_cast<size_t>(b[k])];
      if (ra != rb) return ra < rb;
    }
    return false;
  }

  Mat<S> mult_matrix(const Path& x, int ds, int dt, int rs, int rt, bool left) const {
    const BucketData& dom = buckets_[bucket_id(ds, dt)];
    const BucketData& ran = buckets_[bucket_id(rs, rt)];
    Mat<S> m(static_cast<Index>(ran.basis_paths.size()),
             static_cast<Index>(dom.basis_paths.size()));
    for (Index c = 0; c < m.cols(); ++c) {
      const Path& q = dom.paths[static_cast<size_t>(dom.basis_paths[static_cast<size_t>(c)])];
      Path cat;
      if (left) {
        cat = x;
        cat.insert(cat.end(), q.begin(), q.end());
      } else {
        cat = q;
        cat.insert(cat.end(), x.begin(), x.end());
      }
      auto it = ran.id.find(cat);
      if (it == ran.id.end()) {
        for (Index r = 0; r < m.rows(); ++r) m(r, c) = ctx_.from_int(0);
      } else {
        for (Index r = 0; r < m.rows(); ++r) m(r, c) = ran.to_basis(r, it->second);
      }
    }
    return m;
  }

  void construct(const AlgebraDef& def) {
    def_ = def;
    bound_ = def.nilpotency_bound;
    if (bound_ < 1) throw UsageError("nilpotency_bound must be >= 1");
    vertices_ = def.vertices;
    if (vertices_.empty()) throw UsageError("algebra needs at least one vertex");
    for (size_t i = 0; i < vertices_.size(); ++i)
      for (size_t j = i + 1; j < vertices_.size(); ++j)
        if (vertices_[i] == vertices_[j])
          throw UsageError("duplicate vertex id '" + vertices_[i] + "'");
    for (const auto& a : def.arrows) {
      Arrow ar;
      ar.name = a.name;
      ar.from = vertex_index(a.from);
      ar.to = vertex_index(a.to);
      arrows_.push_back(ar);
    }
    for (size_t i = 0; i < arrows_.size(); ++i)
      for (size_t j = i + 1; j < arrows_.size(); ++j)
        if (arrows_[i].name == arrows_[j].name)
          throw UsageError("duplicate arrow name '" + arrows_[i].name + "'");

    // lexrank: position of each arrow among arrow names sorted ascending
    {
      std::vector<int> order(arrows_.size());
      for (size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        return arrows_[static_cast<size_t>(x)].name < arrows_[static_cast<size_t>(y)].name;
      });
      lexrank_.assign(arrows_.size(), 0);
      for (size_t r = 0; r < order.size(); ++r) lexrank_[static_cast<size_t>(order[r])] = static_cast<int>(r);
    }

    parse_relations(def);

    long long max_rel_len = 0;
    for (const auto& rel : relations_)
      for (const auto& t : rel)
        max_rel_len = std::max(max_rel_len, static_cast<long long>(t.path.size()));
    reach_ = std::max({2 * bound_ - 2, bound_ - 2 + max_rel_len, max_rel_len, 1LL});

    enumerate_paths();
    build_relation_rows();
    certify_bound();
    build_basis();
  }

  void parse_relations(const AlgebraDef& def) {
    for (size_t r = 0; r < def.relations.size(); ++r) {
      std::vector<Term> rel;
      for (const auto& term : def.relations[r]) {
        Term t;
        t.coeff = ctx_.parse(term.coeff);
        if (is_zero(t.coeff)) continue;
        for (const auto& an : term.path) t.path.push_back(arrow_index(an));
        if (t.path.size() < 2)
          throw UsageError("relation " + std::to_string(r) +
                           ": path '" + path_name(t.path) +
                           "' has length < 2; relations must lie in the square of the arrow ideal");
        path_source_checked(t.path);  // composability
        rel.push_back(std::move(t));
      }
      if (rel.empty()) continue;
      int s0 = path_source_checked(rel[0].path), t0 = path_target(rel[0].path);
      for (const auto& t : rel)
        if (path_source_checked(t.path) != s0 || path_target(t.path) != t0)
          throw UsageError("relation " + std::to_string(r) + ": endpoints mismatch between '" +
                           path_name(rel[0].path) + "' and '" + path_name(t.path) + "'");
      relations_.push_back(std::move(rel));
    }
  }

  void enumerate_paths() {
    int nv = num_vertices();
    buckets_.assign(static_cast<size_t>(nv * nv), BucketData{});
    // out_arrows[v]: arrows with source v
    std::vector<std::vector<int>> out(static_cast<size_t>(nv));
    for (int k = 0; k < num_arrows(); ++k) out[static_cast<size_t>(arrows_[static_cast<size_t>(k)].from)].push_back(k);

    size_t total = 0;
    constexpr size_t kMaxPaths = 500000;
    // frontier of (source, target, path) by length; extend on the left
    std::vector<std::pair<std::pair<int, int>, Path>> frontier;
    for (int v = 0; v < nv; ++v) {
      buckets_[static_cast<size_t>(bucket_id(v, v))].paths.push_back(Path{});
      frontier.push_back({{v, v}, Path{}});
      ++total;
    }
    for (long long len = 1; len <= reach_; ++len) {
      std::vector<std::pair<std::pair<int, int>, Path>> next;
      for (const auto& [st, p] : frontier) {
        for (int k : out[static_cast<size_t>(st.second)]) {
          Path q;
          q.reserve(p.size() + 1);
          q.push_back(k);
          q.insert(q.end(), p.begin(), p.end());
          int t = arrows_[static_cast<size_t>(k)].to;
          buckets_[static_cast<size_t>(bucket_id(st.first, t))].paths.push_back(q);
          next.push_back({{st.first, t}, std::move(q)});
          if (++total > kMaxPaths)
            throw ComputeError("path enumeration budget exceeded at length " +
                               std::to_string(len) + "; the quiver is too wild for this bound");
        }
      }
      frontier = std::move(next);
    }
    for (auto& bd : buckets_) {
      std::sort(bd.paths.begin(), bd.paths.end(),
                [&](const Path& a, const Path& b) { return path_less(a, b); });
      for (size_t i = 0; i < bd.paths.size(); ++i) bd.id[bd.paths[i]] = static_cast<int>(i);
    }
  }

  // Two-sided products a∘r∘b whose every term stays within length L, grouped
  // by the bucket they land in.  These rows span the part of the ideal that
  // the certification and the quotient construction can see.
  void build_relation_rows() {
    int nv = num_vertices();
    rel_rows_.assign(static_cast<size_t>(nv * nv), {});
    size_t total_rows = 0;
    constexpr size_t kMaxRows = 200000;
    for (const auto& rel : relations_) {
      int sr = path_source_checked(rel[0].path);
      int tr = path_target(rel[0].path);
      long long max_term = 0;
      for (const auto& t : rel) max_term = std::max(max_term, static_cast<long long>(t.path.size()));
      for (int u = 0; u < nv; ++u) {
        const auto& pre = buckets_[static_cast<size_t>(bucket_id(u, sr))].paths;   // b: u -> sr
        for (int w = 0; w < nv; ++w) {
          const auto& post = buckets_[static_cast<size_t>(bucket_id(tr, w))].paths;  // a: tr -> w
          BucketData& target_bd = buckets_[static_cast<size_t>(bucket_id(u, w))];
          for (const Path& b : pre) {
            for (const Path& a : post) {
              if (static_cast<long long>(a.size() + b.size()) + max_term > reach_) continue;
              Vec<S> row = zero_vec(static_cast<Index>(target_bd.paths.size()));
              for (const auto& term : rel) {
                Path cat = a;
                cat.insert(cat.end(), term.path.begin(), term.path.end());
                cat.insert(cat.end(), b.begin(), b.end());
                auto it = target_bd.id.find(cat);
                row(it->second) = row(it->second) + term.coeff;
              }
              rel_rows_[static_cast<size_t>(bucket_id(u, w))].push_back(std::move(row));
              if (++total_rows > kMaxRows)
                throw ComputeError("relation closure budget exceeded; the presentation is too large");
            }
          }
        }
      }
    }
  }

  // Verify every path of length exactly N lies in the span of the closure
  // rows, without any truncation.  Failure means the bound N is not certified
  // for this ideal; a genuinely admissible ideal may still need a larger N.
  void certify_bound() {
    int nv = num_vertices();
    for (int u = 0; u < nv; ++u) {
      for (int w = 0; w < nv; ++w) {
        const BucketData& bd = buckets_[static_cast<size_t>(bucket_id(u, w))];
        const auto& rows = rel_rows_[static_cast<size_t>(bucket_id(u, w))];
        std::vector<int> at_bound;
        for (size_t i = 0; i < bd.paths.size(); ++i)
          if (static_cast<long long>(bd.paths[i].size()) == bound_) at_bound.push_back(static_cast<int>(i));
        if (at_bound.empty()) continue;
        Index P = static_cast<Index>(bd.paths.size());
        Mat<S> m(static_cast<Index>(rows.size()), P);
        for (Index r = 0; r < m.rows(); ++r)
          for (Index c = 0; c < P; ++c) m(r, c) = rows[static_cast<size_t>(r)](P - 1 - c);
        auto pivots = reduced_row_echelon(m);
        for (int pi : at_bound) {
          Vec<S> v = zero_vec(P);
          v(P - 1 - pi) = ctx_.from_int(1);
          for (size_t k = 0; k < pivots.size(); ++k) {
            Index pc = pivots[k];
            if (!is_zero(v(pc))) v -= v(pc) * m.row(static_cast<Index>(k)).transpose();
          }
          bool zero = true;
          for (Index c = 0; c < P; ++c) zero = zero && is_zero(v(c));
          if (!zero)
            throw UsageError("not admissible at bound " + std::to_string(bound_) + ": path '" +
                             path_name(bd.paths[static_cast<size_t>(pi)]) +
                             "' does not reduce to zero; raise nilpotency_bound if the ideal is "
                             "admissible at a larger bound");
        }
      }
    }
  }

  // Quotient basis per bucket: eliminate the truncated closure rows over the
  // paths of length < N, pivoting on the largest path (length, then arrow-name
  // lex).  Basis = non-pivot paths; every path of length >= N maps to zero.
  void build_basis() {
    int nv = num_vertices();
    trivial_vertex_hint_ = 0;
    for (int u = 0; u < nv; ++u) {
      for (int w = 0; w < nv; ++w) {
        BucketData& bd = buckets_[static_cast<size_t>(bucket_id(u, w))];
        const auto& rows = rel_rows_[static_cast<size_t>(bucket_id(u, w))];
        std::vector<int> short_paths;  // indices of paths with length < N, ascending order
        for (size_t i = 0; i < bd.paths.size(); ++i)
          if (static_cast<long long>(bd.paths[i].size()) < bound_) short_paths.push_back(static_cast<int>(i));
        Index P = static_cast<Index>(short_paths.size());
        Mat<S> m(static_cast<Index>(rows.size()), P);
        for (Index r = 0; r < m.rows(); ++r)
          for (Index c = 0; c < P; ++c)
            m(r, c) = rows[static_cast<size_t>(r)](short_paths[static_cast<size_t>(P - 1 - c)]);
        auto pivots = reduced_row_echelon(m);
        std::vector<bool> is_pivot(static_cast<size_t>(P), false);
        for (Index pc : pivots) is_pivot[static_cast<size_t>(pc)] = true;
        std::vector<int> basis_cols;  // descending-column indices that are free
        for (Index c = 0; c < P; ++c)
          if (!is_pivot[static_cast<size_t>(c)]) basis_cols.push_back(static_cast<int>(c));
        // basis in ascending path order
        std::sort(basis_cols.begin(), basis_cols.end(), std::greater<int>());
        bd.basis_paths.clear();
        std::vector<Index> basis_pos_of_col(static_cast<size_t>(P), -1);
        for (size_t l = 0; l < basis_cols.size(); ++l) {
          int c = basis_cols[l];
          bd.basis_paths.push_back(short_paths[static_cast<size_t>(P - 1 - c)]);
          basis_pos_of_col[static_cast<size_t>(c)] = static_cast<Index>(l);
        }
        bd.to_basis = Mat<S>(static_cast<Index>(bd.basis_paths.size()),
                             static_cast<Index>(bd.paths.size()));
        for (Index r = 0; r < bd.to_basis.rows(); ++r)
          for (Index c = 0; c < bd.to_basis.cols(); ++c) bd.to_basis(r, c) = ctx_.from_int(0);
        // columns for short paths; long paths stay zero
        std::map<Index, Index> row_of_pivot;  // pivot col -> echelon row
        for (size_t k = 0; k < pivots.size(); ++k) row_of_pivot[pivots[k]] = static_cast<Index>(k);
        for (Index c = 0; c < P; ++c) {
          Index path_idx = static_cast<Index>(short_paths[static_cast<size_t>(P - 1 - c)]);
          if (!is_pivot[static_cast<size_t>(c)]) {
            bd.to_basis(basis_pos_of_col[static_cast<size_t>(c)], path_idx) = ctx_.from_int(1);
          } else {
            Index r = row_of_pivot[c];
            for (Index c2 = 0; c2 < P; ++c2) {
              if (c2 == c || is_pivot[static_cast<size_t>(c2)]) continue;
              S val = m(r, c2);
              if (!is_zero(val))
                bd.to_basis(basis_pos_of_col[static_cast<size_t>(c2)], path_idx) =
                    ctx_.from_int(0) - val;
            }
          }
        }
      }
    }
    // global basis: buckets in (source, target) order, paths ascending
    basis_.clear();
    trivial_.assign(static_cast<size_t>(nv), -1);
    for (int u = 0; u < nv; ++u) {
      for (int w = 0; w < nv; ++w) {
        BucketData& bd = buckets_[static_cast<size_t>(bucket_id(u, w))];
        bd.global.clear();
        for (int pi : bd.basis_paths) {
          BasisElem be;
          be.path = bd.paths[static_cast<size_t>(pi)];
          be.source = u;
          be.target = w;
          bd.global.push_back(static_cast<Index>(basis_.size()));
          if (be.path.empty()) trivial_[static_cast<size_t>(u)] = static_cast<Index>(basis_.size());
          basis_.push_back(std::move(be));
        }
      }
    }
    for (int v = 0; v < nv; ++v)
      if (trivial_[static_cast<size_t>(v)] < 0)
        throw std::logic_error("trivial path eliminated; construction is inconsistent");
  }

  FieldContext<S> ctx_;
  AlgebraDef def_;
  long long bound_ = 0;
  long long reach_ = 0;  // L: longest path length tracked
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::vector<int> lexrank_;
  std::vector<std::vector<Term>> relations_;
  std::vector<BucketData> buckets_;
  std::vector<std::vector<Vec<S>>> rel_rows_;
  std::vector<BasisElem> basis_;
  std::vector<Index> trivial_;
  int trivial_vertex_hint_ = 0;
};

template <class S>
using AlgebraPtr = std::shared_ptr<const Algebra<S>>;

template <class S>
AlgebraPtr<S> build_algebra(const AlgebraDef& def, const FieldContext<S>& ctx) {
  return Algebra<S>::build(def, ctx);
}

// <γ, d> = Σ γ_i d_i.  With γ in the projective basis and d a dimension
// vector this computes dim Hom of the corresponding projective presentation
// generator, because Hom(P_i, V) has dimension d_i.
inline long long euler_pair(const IVec& gamma, const IVec& d) {
  if (gamma.size() != d.size()) throw UsageError("euler_pair: length mismatch");
  long long s = 0;
  for (Index i = 0; i < gamma.size(); ++i) s += gamma(i) * d(i);
  return s;
}

// The weight θ dual to γ: θ(d) = euler_pair(γ, d).  Coordinates coincide.
inline IVec dual_weight(const IVec& gamma) { return gamma; }

}  // namespace tautilt
