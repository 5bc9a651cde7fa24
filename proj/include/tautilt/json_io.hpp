#pragma once
// Serialization boundary: algebra definition files, representation and
// presentation payloads, estimate/probe/family reports.  Readers validate
// eagerly and report the offending position inside the document; writers
// emit the same shapes the readers accept, so everything round-trips.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <tautilt/stability.hpp>

namespace tautilt {

using Json = nlohmann::json;

namespace detail {

inline const Json& need(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw UsageError(where + ": missing key \"" + key + "\"");
  return *it;
}

inline std::string need_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw UsageError(where + ": expected a string");
  return j.get<std::string>();
}

inline long long need_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw UsageError(where + ": expected an integer");
  return j.get<long long>();
}

// coefficient entries may be decimal strings ("-1", "2/3") or plain integers
inline std::string coeff_string(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw UsageError(where + ": expected a coefficient string or integer");
}

}  // namespace detail

// --------------------------------------------------------------------------
// algebra definition files
// --------------------------------------------------------------------------

inline FieldSpec field_spec_from_json(const Json& j, const std::string& where = "field") {
  if (!j.is_object()) throw UsageError(where + ": expected an object");
  if (j.contains("prime")) {
    const Json& p = j["prime"];
    if (!p.is_number_integer() || p.get<long long>() <= 0)
      throw UsageError(where + ".prime: expected a positive integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  if (j.contains("rational")) {
    if (!j["rational"].is_boolean() || !j["rational"].get<bool>())
      throw UsageError(where + ".rational: expected true");
    return FieldSpec::rational();
  }
  throw UsageError(where + ": expected {\"prime\": p} or {\"rational\": true}");
}

inline Json field_spec_to_json(const FieldSpec& fs) {
  if (fs.finite()) return Json{{"prime", fs.p}};
  return Json{{"rational", true}};
}

inline AlgebraDef algebra_def_from_json(const Json& j) {
  if (!j.is_object()) throw UsageError("algebra: expected a JSON object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "name" && key != "field" && key != "vertices" && key != "arrows" &&
        key != "relations" && key != "nilpotency_bound")
      throw UsageError("algebra: unknown key \"" + key + "\"");
  }
  AlgebraDef def;
  if (j.contains("name")) def.name = detail::need_string(j["name"], "name");
  if (j.contains("field")) def.field = field_spec_from_json(j["field"]);

  const Json& vs = detail::need(j, "vertices", "algebra");
  if (!vs.is_array() || vs.empty()) throw UsageError("vertices: expected a non-empty array");
  for (size_t i = 0; i < vs.size(); ++i)
    def.vertices.push_back(detail::need_string(vs[i], "vertices[" + std::to_string(i) + "]"));
  auto vertex_known = [&](const std::string& v) {
    for (const auto& w : def.vertices)
      if (w == v) return true;
    return false;
  };

  const Json& as = detail::need(j, "arrows", "algebra");
  if (!as.is_array()) throw UsageError("arrows: expected an array");
  for (size_t k = 0; k < as.size(); ++k) {
    std::string where = "arrows[" + std::to_string(k) + "]";
    const Json& a = as[k];
    if (!a.is_object()) throw UsageError(where + ": expected an object");
    ArrowDef ad;
    ad.name = detail::need_string(detail::need(a, "name", where), where + ".name");
    ad.from = detail::need_string(detail::need(a, "from", where), where + ".from");
    ad.to = detail::need_string(detail::need(a, "to", where), where + ".to");
    if (!vertex_known(ad.from)) throw UsageError(where + ".from: unknown vertex \"" + ad.from + "\"");
    if (!vertex_known(ad.to)) throw UsageError(where + ".to: unknown vertex \"" + ad.to + "\"");
    def.arrows.push_back(std::move(ad));
  }
  auto arrow_of = [&](const std::string& n) -> const ArrowDef* {
    for (const auto& a : def.arrows)
      if (a.name == n) return &a;
    return nullptr;
  };

  if (j.contains("relations")) {
    const Json& rs = j["relations"];
    if (!rs.is_array()) throw UsageError("relations: expected an array");
    for (size_t r = 0; r < rs.size(); ++r) {
      std::string rwhere = "relations[" + std::to_string(r) + "]";
      if (!rs[r].is_array() || rs[r].empty())
        throw UsageError(rwhere + ": expected a non-empty array of terms");
      RelationDef rel;
      for (size_t t = 0; t < rs[r].size(); ++t) {
        std::string twhere = rwhere + "[" + std::to_string(t) + "]";
        const Json& term = rs[r][t];
        if (!term.is_object()) throw UsageError(twhere + ": expected an object");
        RelationTermDef td;
        td.coeff = detail::coeff_string(detail::need(term, "coeff", twhere), twhere + ".coeff");
        const Json& path = detail::need(term, "path", twhere);
        if (!path.is_array() || path.empty())
          throw UsageError(twhere + ".path: expected a non-empty array of arrow names");
        for (size_t s = 0; s < path.size(); ++s)
          td.path.push_back(
              detail::need_string(path[s], twhere + ".path[" + std::to_string(s) + "]"));
        // composition order: the last listed arrow acts first
        for (size_t s = 0; s < td.path.size(); ++s) {
          const ArrowDef* a = arrow_of(td.path[s]);
          if (!a)
            throw UsageError(twhere + ".path[" + std::to_string(s) + "]: unknown arrow \"" +
                             td.path[s] + "\"");
          if (s + 1 < td.path.size()) {
            const ArrowDef* b = arrow_of(td.path[s + 1]);
            if (b && b->to != a->from)
              throw UsageError(twhere + ".path: \"" + td.path[s] + "\" does not compose with \"" +
                               td.path[s + 1] + "\" (endpoint mismatch at position " +
                               std::to_string(s) + ")");
          }
        }
        rel.push_back(std::move(td));
      }
      def.relations.push_back(std::move(rel));
    }
  }

  const Json& nb = detail::need(j, "nilpotency_bound", "algebra");
  def.nilpotency_bound = detail::need_int(nb, "nilpotency_bound");
  if (def.nilpotency_bound < 1) throw UsageError("nilpotency_bound: expected a positive integer");
  return def;
}

inline Json algebra_def_to_json(const AlgebraDef& def) {
  Json j = Json::object();
  if (!def.name.empty()) j["name"] = def.name;
  if (def.field) j["field"] = field_spec_to_json(*def.field);
  j["vertices"] = def.vertices;
  Json as = Json::array();
  for (const auto& a : def.arrows)
    as.push_back(Json{{"name", a.name}, {"from", a.from}, {"to", a.to}});
  j["arrows"] = as;
  Json rs = Json::array();
  for (const auto& rel : def.relations) {
    Json terms = Json::array();
    for (const auto& t : rel) terms.push_back(Json{{"coeff", t.coeff}, {"path", t.path}});
    rs.push_back(terms);
  }
  j["relations"] = rs;
  j["nilpotency_bound"] = def.nilpotency_bound;
  return j;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

inline AlgebraDef load_algebra_def(const std::string& path) {
  try {
    return algebra_def_from_json(load_json_file(path));
  } catch (const UsageError& e) {
    if (std::string(e.what()).rfind(path, 0) == 0) throw;
    throw UsageError(path + ": " + e.what());
  }
}

// --------------------------------------------------------------------------
// integer vectors
// --------------------------------------------------------------------------

inline Json ivec_to_json(const IVec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

inline IVec ivec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw UsageError(where + ": expected an array of integers");
  IVec v(static_cast<Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v(static_cast<Index>(i)) = detail::need_int(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

// --------------------------------------------------------------------------
// representations
// --------------------------------------------------------------------------

template <class S>
Json rep_to_json(const Representation<S>& V) {
  const auto& alg = *V.alg;
  const auto& ctx = alg.ctx();
  Json dims = Json::object();
  for (int i = 0; i < alg.num_vertices(); ++i) dims[alg.vertices()[static_cast<size_t>(i)]] = V.dims(i);
  Json arrows = Json::object();
  for (int k = 0; k < alg.num_arrows(); ++k) {
    const Mat<S>& m = V.arrows[static_cast<size_t>(k)];
    Json rows = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (Index c = 0; c < m.cols(); ++c) row.push_back(ctx.to_string(m(r, c)));
      rows.push_back(row);
    }
    arrows[alg.arrow(k).name] = rows;
  }
  return Json{{"dims", dims}, {"arrows", arrows}};
}

template <class S>
Representation<S> rep_from_json(AlgebraPtr<S> alg, const Json& j) {
  if (!j.is_object()) throw UsageError("module: expected a JSON object");
  const auto& ctx = alg->ctx();
  const Json& djson = detail::need(j, "dims", "module");
  if (!djson.is_object()) throw UsageError("module.dims: expected an object keyed by vertex");
  for (const auto& [key, val] : djson.items()) {
    (void)val;
    bool known = false;
    for (const auto& v : alg->vertices()) known = known || v == key;
    if (!known) throw UsageError("module.dims: unknown vertex \"" + key + "\"");
  }
  IVec dims = IVec::Zero(alg->num_vertices());
  for (int i = 0; i < alg->num_vertices(); ++i) {
    const std::string& v = alg->vertices()[static_cast<size_t>(i)];
    if (!djson.contains(v)) continue;
    long long d = detail::need_int(djson[v], "module.dims[\"" + v + "\"]");
    if (d < 0) throw UsageError("module.dims[\"" + v + "\"]: expected a non-negative integer");
    dims(i) = d;
  }
  const Json& ajson = detail::need(j, "arrows", "module");
  if (!ajson.is_object()) throw UsageError("module.arrows: expected an object keyed by arrow");
  std::vector<Mat<S>> arrows;
  for (int k = 0; k < alg->num_arrows(); ++k) {
    const auto& a = alg->arrow(k);
    Index rows = dims(a.to), cols = dims(a.from);
    std::string where = "module.arrows[\"" + a.name + "\"]";
    if (!ajson.contains(a.name)) {
      if (rows > 0 && cols > 0) throw UsageError(where + ": missing matrix");
      arrows.push_back(detail::zero_mat(ctx, rows, cols));
      continue;
    }
    const Json& mj = ajson[a.name];
    if (!mj.is_array() || static_cast<Index>(mj.size()) != rows)
      throw UsageError(where + ": expected " + std::to_string(rows) + " rows");
    Mat<S> m = detail::zero_mat(ctx, rows, cols);
    for (Index r = 0; r < rows; ++r) {
      const Json& rowj = mj[static_cast<size_t>(r)];
      if (!rowj.is_array() || static_cast<Index>(rowj.size()) != cols)
        throw UsageError(where + "[" + std::to_string(r) + "]: expected " + std::to_string(cols) +
                         " entries");
      for (Index c = 0; c < cols; ++c) {
        std::string ewhere =
            where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
        m(r, c) = ctx.parse(detail::coeff_string(rowj[static_cast<size_t>(c)], ewhere));
      }
    }
    arrows.push_back(std::move(m));
  }
  for (const auto& [key, val] : ajson.items()) {
    (void)val;
    bool known = false;
    for (int k = 0; k < alg->num_arrows(); ++k) known = known || alg->arrow(k).name == key;
    if (!known) throw UsageError("module.arrows: unknown arrow \"" + key + "\"");
  }
  auto V = make_rep(alg, std::move(dims), std::move(arrows));
  if (auto err = check(V)) throw UsageError("module: " + *err);
  return V;
}

// --------------------------------------------------------------------------
// presentations
// --------------------------------------------------------------------------

template <class S>
Json pres_to_json(const Presentation<S>& P) {
  const auto& ctx = P.alg->ctx();
  Vec<S> coords = presentation_coords(P);
  Json cj = Json::array();
  for (Index i = 0; i < coords.size(); ++i) cj.push_back(ctx.to_string(coords(i)));
  return Json{{"gamma", ivec_to_json(P.gamma)}, {"coords", cj}};
}

template <class S>
Presentation<S> pres_from_json(AlgebraPtr<S> alg, const Json& j) {
  if (!j.is_object()) throw UsageError("presentation: expected a JSON object");
  IVec gamma = ivec_from_json(detail::need(j, "gamma", "presentation"), "presentation.gamma");
  const Json& cj = detail::need(j, "coords", "presentation");
  if (!cj.is_array()) throw UsageError("presentation.coords: expected an array");
  Vec<S> coords(static_cast<Index>(cj.size()));
  const auto& ctx = alg->ctx();
  for (size_t i = 0; i < cj.size(); ++i)
    coords(static_cast<Index>(i)) = ctx.parse(
        detail::coeff_string(cj[i], "presentation.coords[" + std::to_string(i) + "]"));
  return make_presentation(alg, gamma, coords);
}

// --------------------------------------------------------------------------
// estimates, probes, families
// --------------------------------------------------------------------------

inline Json estimate_to_json(const GenericEstimate& e) {
  return Json{{"quantity", e.quantity}, {"value", e.value},
              {"samples", e.samples},   {"prime", e.prime},
              {"seed", e.seed},         {"witness_seed", e.witness_seed},
              {"exact", e.exact}};
}

inline Json probe_to_json(const ProbeReport& r) {
  Json points = Json::array();
  for (const auto& pt : r.points) {
    Json p{{"gamma", ivec_to_json(pt.gamma)},
           {"e_self", pt.e_self},
           {"c", pt.c_val},
           {"flagged", pt.flagged},
           {"witness_seed", pt.witness_seed}};
    if (pt.e_pair >= 0) p["e_pair"] = pt.e_pair;
    if (pt.flagged) {
      p["witness_indecomposable"] = pt.witness_indecomposable;
      if (!pt.attachment.empty()) p["attachment"] = pt.attachment;
    }
    points.push_back(std::move(p));
  }
  return Json{{"kind", r.kind},       {"radius", r.radius}, {"samples", r.samples},
              {"prime", r.prime},     {"seed", r.seed},     {"visited", r.visited},
              {"flags", r.flags},     {"verdict", r.verdict}, {"points", points}};
}

// One row per lattice point; the (seed, samples, prime) triple rides on every
// row so a single line is enough to reproduce it.
inline std::string probe_to_csv(const ProbeReport& r) {
  std::ostringstream out;
  Index nv = r.points.empty() ? 0 : r.points.front().gamma.size();
  for (Index i = 0; i < nv; ++i) out << "g" << i << ",";
  out << "e_self,c,e_pair,flag,witness_seed,seed,samples,prime\n";
  for (const auto& pt : r.points) {
    for (Index i = 0; i < nv; ++i) out << pt.gamma(i) << ",";
    out << pt.e_self << "," << pt.c_val << ",";
    if (pt.e_pair >= 0) out << pt.e_pair;
    out << "," << (pt.flagged ? 1 : 0) << "," << pt.witness_seed << "," << r.seed << ","
        << r.samples << "," << r.prime << "\n";
  }
  return out.str();
}

template <class S>
Json family_to_json(const StableFamilyReport<S>& r) {
  Json members = Json::array();
  for (const auto& m : r.members) members.push_back(rep_to_json(m));
  Json factor_dims = Json::array();
  for (const auto& f : r.factors) factor_dims.push_back(ivec_to_json(f.dims));
  Json j{{"gamma", ivec_to_json(r.gamma)},
         {"gamma_prime", ivec_to_json(r.gamma_prime)},
         {"delta", ivec_to_json(r.delta)},
         {"theta", ivec_to_json(r.theta)},
         {"warnings", r.warnings},
         {"attempted", r.attempted},
         {"factor_dims", factor_dims},
         {"hom_matrix", r.hom_matrix},
         {"end_dims", r.end_dims},
         {"members", members}};
  Json flags = Json::array();
  for (bool b : r.stable_flags) flags.push_back(b);
  j["stable"] = flags;
  if (r.family_dims.size() > 0) j["family_dims"] = ivec_to_json(r.family_dims);
  return j;
}

}  // namespace tautilt
