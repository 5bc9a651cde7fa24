// tautilt: tau-tilting invariants of finite-dimensional quiver algebras.
//
// Subcommands operate on algebra definition files (or builtin catalogue
// names), module files, and presentation files in the JSON shapes described
// in the README.  Randomized commands derive everything from --seed,
// --samples, and --prime; the same triple always reproduces the same output.
// Exit codes: 0 success, 1 computational failure (budget or degenerate
// input), 2 usage or parse error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tautilt/builtins.hpp>
#include <tautilt/json_io.hpp>
#include <tautilt/suite.hpp>

namespace tt = tautilt;

namespace {

constexpr std::uint64_t kDefaultPrime = 2147483647ULL;
// enumeration-backed commands walk F_p-points, so their default field is small
constexpr std::uint64_t kEnumPrime = 101;

tt::AlgebraDef resolve_algebra(const std::string& arg) {
  if (std::filesystem::exists(arg)) return tt::load_algebra_def(arg);
  if (arg.find('/') == std::string::npos && arg.find('.') == std::string::npos) {
    try {
      return tt::builtins::by_name(arg);
    } catch (const tt::UsageError&) {
    }
  }
  throw tt::UsageError(arg + ": no such file, and not a builtin algebra name");
}

tt::FieldSpec field_for(const tt::AlgebraDef& def, std::optional<std::uint64_t> cli_prime,
                        std::uint64_t fallback) {
  if (cli_prime) return tt::FieldSpec::prime(*cli_prime);
  if (def.field) return *def.field;
  return tt::FieldSpec::prime(fallback);
}

std::uint64_t finite_prime(const tt::AlgebraDef& def, std::optional<std::uint64_t> cli_prime,
                           std::uint64_t fallback) {
  tt::FieldSpec fs = field_for(def, cli_prime, fallback);
  if (!fs.finite())
    throw tt::UsageError("this command needs a prime field; pass --prime or set one in the file");
  return fs.p;
}

tt::AlgebraPtr<tt::Fp> build_fp(const tt::AlgebraDef& def, std::uint64_t p) {
  return tt::Algebra<tt::Fp>::build(def, tt::FieldContext<tt::Fp>(tt::FieldSpec::prime(p)));
}

tt::IVec parse_ivec(const std::string& s, const char* what) {
  std::vector<long long> vals;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      vals.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw tt::UsageError(std::string(what) + ": bad integer list \"" + s + "\"");
    }
  }
  if (vals.empty()) throw tt::UsageError(std::string(what) + ": empty integer list");
  tt::IVec v(static_cast<tt::Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) v(static_cast<tt::Index>(i)) = vals[i];
  return v;
}

std::string bracketed(const tt::IVec& v) {
  std::string s = "[";
  for (tt::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + "]";
}

tt::Json load_payload(const std::string& path) { return tt::load_json_file(path); }

// shared state for the option parsers
struct Args {
  std::string algebra, module_a, module_b, json_out;
  std::string gvector, dims, theta;
  int radius = 2;
  int samples = 32;
  int count = 4;
  long long max_dim = 3;
  int spp = 8;
  std::uint64_t seed = 0;
  std::uint64_t budget = 2000000;
  std::uint64_t prime_val = 0;
  CLI::Option* prime_opt = nullptr;
  bool quick = false;

  [[nodiscard]] std::optional<std::uint64_t> cli_prime() const {
    if (prime_opt != nullptr && prime_opt->count() > 0) return prime_val;
    return std::nullopt;
  }
};

int cmd_algebra_check(const Args& a) {
  tt::AlgebraDef def = tt::load_algebra_def(a.algebra);  // spec: takes a file
  tt::FieldSpec fs = field_for(def, a.cli_prime(), kDefaultPrime);
  long long dim = tt::dispatch_field(fs, [&](auto ctx) {
    using S = typename decltype(ctx)::Scalar;
    return static_cast<long long>(tt::Algebra<S>::build(def, ctx)->dim());
  });
  std::cout << "dim A = " << dim << "\n";
  return 0;
}

int cmd_gvector(const Args& a) {
  tt::AlgebraDef def = resolve_algebra(a.algebra);
  tt::FieldSpec fs = field_for(def, a.cli_prime(), kDefaultPrime);
  tt::Json mj = load_payload(a.module_a);
  tt::IVec g = tt::dispatch_field(fs, [&](auto ctx) {
    using S = typename decltype(ctx)::Scalar;
    auto alg = tt::Algebra<S>::build(def, ctx);
    return tt::g_vector(tt::rep_from_json(alg, mj));
  });
  std::cout << bracketed(g) << "\n";
  return 0;
}

int cmd_tau(const Args& a) {
  tt::AlgebraDef def = resolve_algebra(a.algebra);
  tt::FieldSpec fs = field_for(def, a.cli_prime(), kDefaultPrime);
  tt::Json mj = load_payload(a.module_a);
  tt::Json out = tt::dispatch_field(fs, [&](auto ctx) {
    using S = typename decltype(ctx)::Scalar;
    auto alg = tt::Algebra<S>::build(def, ctx);
    return tt::rep_to_json(tt::tau(tt::rep_from_json(alg, mj)).tau);
  });
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_hom(const Args& a) {
  tt::AlgebraDef def = resolve_algebra(a.algebra);
  tt::FieldSpec fs = field_for(def, a.cli_prime(), kDefaultPrime);
  tt::Json vj = load_payload(a.module_a), wj = load_payload(a.module_b);
  long long d = tt::dispatch_field(fs, [&](auto ctx) {
    using S = typename decltype(ctx)::Scalar;
    auto alg = tt::Algebra<S>::build(def, ctx);
    return static_cast<long long>(
        tt::hom_dim(tt::rep_from_json(alg, vj), tt::rep_from_json(alg, wj)));
  });
  std::cout << d << "\n";
  return 0;
}

int cmd_einv(const Args& a) {
  tt::AlgebraDef def = resolve_algebra(a.algebra);
  tt::FieldSpec fs = field_for(def, a.cli_prime(), kDefaultPrime);
  tt::Json pj = load_payload(a.module_a), qj = load_payload(a.module_b);
  tt::Json out = tt::dispatch_field(fs, [&](auto ctx) {
    using S = typename decltype(ctx)::Scalar;
    auto alg = tt::Algebra<S>::build(def, ctx);
    auto P = tt::pres_from_json(alg, pj);
    auto Q = tt::pres_from_json(alg, qj);
    return tt::Json{{"gamma_p", tt::ivec_to_json(P.gamma)},
                    {"gamma_q", tt::ivec_to_json(Q.gamma)},
                    {"e", tt::e_inv(P, Q)}};
  });
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_probe(const Args& a, bool fan) {
  tt::AlgebraDef def = resolve_algebra(a.algebra);
  std::uint64_t p = finite_prime(def, a.cli_prime(), kDefaultPrime);
  auto alg = build_fp(def, p);
  tt::Rng rng = tt::make_rng(a.seed);
  tt::ProbeReport r = fan ? tt::demonet_probe(alg, a.radius, a.samples, rng)
                          : tt::etame_probe(alg, a.radius, a.samples, rng);
  std::cout << "# " << (fan ? "fan-probe" : "etame-probe") << " radius=" << a.radius
            << " samples=" << a.samples << " seed=" << a.seed << " prime=" << p << "\n";
  std::cout << tt::probe_to_csv(r);
  std::cout << "# verdict: " << r.verdict << "\n";
  if (!a.json_out.empty()) {
    tt::Json j = tt::probe_to_json(r);
    j["cli_seed"] = a.seed;
    std::ofstream f(a.json_out);
    if (!f) throw tt::UsageError(a.json_out + ": cannot open for writing");
    f << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_stable_family(const Args& a) {
  tt::AlgebraDef def = resolve_algebra(a.algebra);
  std::uint64_t p = finite_prime(def, a.cli_prime(), kEnumPrime);
  auto alg = build_fp(def, p);
  tt::IVec gamma = parse_ivec(a.gvector, "--gvector");
  tt::Rng rng = tt::make_rng(a.seed);
  tt::StableFamilyOptions opts;
  opts.component_samples = a.samples;
  opts.precheck_samples = a.samples;
  auto rep = tt::stable_family(alg, gamma, a.count, rng, opts);
  tt::Json j = tt::family_to_json(rep);
  j["seed"] = a.seed;
  j["prime"] = p;
  j["samples"] = a.samples;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_count_stables(const Args& a) {
  tt::AlgebraDef def = resolve_algebra(a.algebra);
  std::uint64_t p = finite_prime(def, a.cli_prime(), kEnumPrime);
  auto alg = build_fp(def, p);
  tt::IVec dims = parse_ivec(a.dims, "--dims");
  tt::IVec theta = parse_ivec(a.theta, "--theta");
  std::cout << tt::count_stables(alg, dims, theta, a.budget) << "\n";
  return 0;
}

int cmd_rigid_search(const Args& a) {
  tt::AlgebraDef def = resolve_algebra(a.algebra);
  std::uint64_t p = finite_prime(def, a.cli_prime(), kEnumPrime);
  auto alg = build_fp(def, p);
  tt::Rng rng = tt::make_rng(a.seed);
  auto found =
      tt::rigid_search(alg, a.max_dim, a.radius, rng, a.spp, a.budget);
  tt::Json mods = tt::Json::array();
  for (const auto& V : found)
    mods.push_back(tt::Json{{"dims", tt::ivec_to_json(V.dims)}, {"module", tt::rep_to_json(V)}});
  tt::Json out{{"seed", a.seed},        {"prime", p},
               {"radius", a.radius},    {"max_total_dim", a.max_dim},
               {"samples_per_point", a.spp}, {"count", found.size()},
               {"modules", mods}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_suite(const Args& a) {
  tt::SuiteResult res = tt::run_suite(a.quick);
  tt::print_suite(res, std::cout);
  return res.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  // allow `--opt -1,1` for the integer-list options by gluing the value on
  std::vector<std::string> raw;
  for (int i = 1; i < argc; ++i) raw.emplace_back(argv[i]);
  std::vector<std::string> args;
  for (size_t i = 0; i < raw.size(); ++i) {
    if ((raw[i] == "--gvector" || raw[i] == "--dims" || raw[i] == "--theta") &&
        i + 1 < raw.size()) {
      args.push_back(raw[i] + "=" + raw[i + 1]);
      ++i;
    } else {
      args.push_back(raw[i]);
    }
  }

  CLI::App app{"tau-tilting invariants of finite-dimensional quiver algebras"};
  app.require_subcommand(1);
  Args a;

  auto add_prime = [&](CLI::App* cmd) {
    a.prime_opt = nullptr;  // reassigned below; one subcommand parses per run
    return cmd->add_option("--prime", a.prime_val,
                           "field characteristic (overrides the file's field)");
  };
  auto add_algebra = [&](CLI::App* cmd) {
    cmd->add_option("algebra", a.algebra, "algebra file or builtin name (kronecker, a2, h2, ...)")
        ->required();
  };

  CLI::App* algebra = app.add_subcommand("algebra", "inspect an algebra definition");
  algebra->require_subcommand(1);
  CLI::App* check = algebra->add_subcommand("check", "validate a file and print dim A");
  check->add_option("file", a.algebra, "algebra definition file")->required();
  CLI::Option* check_prime = add_prime(check);

  CLI::App* gvec = app.add_subcommand("gvector", "g-vector of a module");
  add_algebra(gvec);
  gvec->add_option("module", a.module_a, "module file")->required();
  CLI::Option* gvec_prime = add_prime(gvec);

  CLI::App* tau = app.add_subcommand("tau", "AR translate of a module, as module JSON");
  add_algebra(tau);
  tau->add_option("module", a.module_a, "module file")->required();
  CLI::Option* tau_prime = add_prime(tau);

  CLI::App* hom = app.add_subcommand("hom", "dimension of the intertwiner space Hom(V, W)");
  add_algebra(hom);
  hom->add_option("V", a.module_a, "module file")->required();
  hom->add_option("W", a.module_b, "module file")->required();
  CLI::Option* hom_prime = add_prime(hom);

  CLI::App* einv = app.add_subcommand("einv", "e-invariant of two presentations");
  add_algebra(einv);
  einv->add_option("P", a.module_a, "presentation file")->required();
  einv->add_option("Q", a.module_b, "presentation file")->required();
  CLI::Option* einv_prime = add_prime(einv);

  auto add_probe_opts = [&](CLI::App* cmd) {
    add_algebra(cmd);
    cmd->add_option("--radius,-R", a.radius, "box radius in the g-vector lattice");
    cmd->add_option("--samples,-S", a.samples, "presentation samples per lattice point");
    cmd->add_option("--seed", a.seed, "RNG seed (echoed in the output)");
    cmd->add_option("--json-out", a.json_out, "also write the JSON report to this file");
    return add_prime(cmd);
  };
  CLI::App* fan = app.add_subcommand("fan-probe", "diagonal-e scan of a g-vector box (CSV)");
  CLI::Option* fan_prime = add_probe_opts(fan);
  CLI::App* etame = app.add_subcommand("etame-probe", "pairwise-e scan of a g-vector box (CSV)");
  CLI::Option* etame_prime = add_probe_opts(etame);

  CLI::App* fam = app.add_subcommand("stable-family",
                                     "construct hom-orthogonal stable modules at a g-vector");
  add_algebra(fam);
  fam->add_option("--gvector", a.gvector, "target g-vector, comma-separated")->required();
  fam->add_option("--count", a.count, "number of family members");
  fam->add_option("--samples", a.samples, "sampling effort for the component resolution");
  fam->add_option("--seed", a.seed, "RNG seed (echoed in the output)");
  CLI::Option* fam_prime = add_prime(fam);

  CLI::App* cnt = app.add_subcommand("count-stables",
                                     "exhaustively count stable modules at a dimension vector");
  add_algebra(cnt);
  cnt->add_option("--dims", a.dims, "dimension vector, comma-separated")->required();
  cnt->add_option("--theta", a.theta, "stability weight, comma-separated")->required();
  cnt->add_option("--budget", a.budget, "enumeration budget");
  CLI::Option* cnt_prime = add_prime(cnt);

  CLI::App* rigid = app.add_subcommand("rigid-search",
                                       "sampling search for indecomposable rigid modules");
  add_algebra(rigid);
  rigid->add_option("--max-dim", a.max_dim, "total dimension cap");
  rigid->add_option("--radius", a.radius, "g-vector box radius");
  rigid->add_option("--samples-per-point", a.spp, "presentation samples per lattice point");
  rigid->add_option("--seed", a.seed, "RNG seed (echoed in the output)");
  rigid->add_option("--budget", a.budget, "total sample budget");
  CLI::Option* rigid_prime = add_prime(rigid);

  CLI::App* suite = app.add_subcommand("paper-suite", "run the full release gate");
  suite->add_flag("--quick", a.quick, "reduced sample counts, same expectations");

  try {
    std::reverse(args.begin(), args.end());  // this parse overload pops from the back
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      a.prime_opt = check_prime;
      return cmd_algebra_check(a);
    }
    if (*gvec) {
      a.prime_opt = gvec_prime;
      return cmd_gvector(a);
    }
    if (*tau) {
      a.prime_opt = tau_prime;
      return cmd_tau(a);
    }
    if (*hom) {
      a.prime_opt = hom_prime;
      return cmd_hom(a);
    }
    if (*einv) {
      a.prime_opt = einv_prime;
      return cmd_einv(a);
    }
    if (*fan) {
      a.prime_opt = fan_prime;
      return cmd_probe(a, true);
    }
    if (*etame) {
      a.prime_opt = etame_prime;
      return cmd_probe(a, false);
    }
    if (*fam) {
      a.prime_opt = fam_prime;
      return cmd_stable_family(a);
    }
    if (*cnt) {
      a.prime_opt = cnt_prime;
      return cmd_count_stables(a);
    }
    if (*rigid) {
      a.prime_opt = rigid_prime;
      return cmd_rigid_search(a);
    }
    if (*suite) return cmd_suite(a);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const tt::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tt::ComputeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
