#include "cokit/commands.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace cokit {

namespace {

// Exit 1: the inputs were understood but a property or precondition failed.
// Exit 2: the inputs themselves are unusable.
int exit_code_for(Err c) {
  switch (c) {
    case Err::NotSubmodule:
    case Err::InfiniteIndex:
    case Err::NotASimilarity:
    case Err::NotAKModule:
    case Err::ZeroElement:
    case Err::NotRepresentable:
    case Err::DivisionByZero:
    case Err::InternalMismatch:
      return 1;
    default:
      return 2;
  }
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void fail_with(Report& r, const Error& e) {
  r.exit_code = exit_code_for(e.code);
  r.body["error"] = Json{{"code", err_name(e.code)}, {"message", e.what()}};
  r.text += std::string("error [") + err_name(e.code) + "]: " + e.what() + "\n";
}

void fail_generic(Report& r, const std::exception& e) {
  r.exit_code = 1;
  r.body["error"] = Json{{"code", "Internal"}, {"message", e.what()}};
  r.text += std::string("error [Internal]: ") + e.what() + "\n";
}

Report start(const char* command) {
  Report r;
  r.body["schema"] = "1";
  r.body["command"] = command;
  return r;
}

// --- verification-suite plumbing ---

struct Property {
  std::string name;
  int pass = 0;
  int fail = 0;
  Json counterexample;  // first failing instance only
};

void record(Property& p, bool ok, const std::function<Json()>& counterexample) {
  if (ok) {
    ++p.pass;
    return;
  }
  ++p.fail;
  if (p.counterexample.is_null()) p.counterexample = counterexample();
}

bool rational_valued(const FieldElement& e) {
  const std::vector<Rational>& c = e.coeffs();
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

// A module commensurate with g: an S-integer recombination of the basis
// columns (nonsingular), possibly scaled by a rational.
FreeModule commensurate_variant(const FreeModule& g, std::mt19937_64& eng) {
  std::uniform_int_distribution<int> entry(-2, 2);
  std::uniform_int_distribution<int> scaling(0, 3);
  const int d = g.dim;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ExactMat t(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) t(i, j) = make_rational(g.ambient(), Rational(entry(eng)));
    try {
      FreeModule out = FreeModule::make(g.ring, ExactMat(g.basis * t));
      switch (scaling(eng)) {
        case 1: return out.scaled(make_rational(g.ambient(), Rational(1, 2)));
        case 2: return out.scaled(make_rational(g.ambient(), Rational(3)));
        default: return out;
      }
    } catch (const Error& e) {
      if (e.code != Err::Singular) throw;
    }
  }
  throw Error(Err::InternalMismatch, "could not sample a nonsingular basis recombination");
}

std::vector<Isometry> sampled_isometries(const CatalogLookup& lk, int count, std::uint64_t seed) {
  if (lk.order) return sample_similarity_isometries(*lk.order, count, seed);
  return sample_similarity_isometries(lk.module, count, seed);
}

void suite_equivalence(const FreeModule& g, const CommonOptions& opt,
                       std::vector<Property>& props) {
  Property reflexive{"reflexive"}, symmetric{"symmetric"}, transitive{"transitive"};
  std::mt19937_64 eng(opt.seed);
  for (int i = 0; i < opt.samples; ++i) {
    FreeModule a = commensurate_variant(g, eng);
    FreeModule b = commensurate_variant(g, eng);
    FreeModule c = commensurate_variant(g, eng);
    auto ce = [&](const char* what) {
      return [&, what, i] {
        return Json{{"sample", i},
                    {"relation", what},
                    {"module_1", module_to_json(a)},
                    {"module_2", module_to_json(b)},
                    {"module_3", module_to_json(c)}};
      };
    };
    const bool ab = commensurate(a, b);
    const bool ba = commensurate(b, a);
    const bool bc = commensurate(b, c);
    const bool ac = commensurate(a, c);
    record(reflexive, commensurate(a, a), ce("a ~ a"));
    record(symmetric, ab == ba, ce("a ~ b iff b ~ a"));
    record(transitive, !(ab && bc) || ac, ce("a ~ b and b ~ c imply a ~ c"));
  }
  props = {reflexive, symmetric, transitive};
}

void suite_groups(const CatalogLookup& lk, const CommonOptions& opt,
                  std::vector<Property>& props) {
  const FreeModule& g = lk.module;
  std::vector<Isometry> rs = sampled_isometries(lk, opt.samples, opt.seed);
  const int n = static_cast<int>(rs.size());
  std::vector<Verdict> verdicts;
  verdicts.reserve(n);
  for (const Isometry& r : rs) verdicts.push_back(classify(g, r).verdict);

  Property product{"product_in_os"}, inverse{"inverse_in_os"};
  Property oc_product{"oc_closed_under_product"}, oc_inverse{"oc_closed_under_inverse"};
  for (int i = 0; i < n; ++i) {
    const Isometry& r = rs[i];
    const Isometry& s = rs[(i + 1) % n];
    auto ce = [&, i] {
      return Json{{"sample", i},
                  {"isometry_1", isometry_to_json(r)},
                  {"isometry_2", isometry_to_json(s)}};
    };
    const Verdict v_rs = classify(g, r * s).verdict;
    const Verdict v_rt = classify(g, r.transposed()).verdict;
    record(product, v_rs != Verdict::NotSimilarity, ce);
    record(inverse, v_rt != Verdict::NotSimilarity, ce);
    if (verdicts[i] == Verdict::Coincidence && verdicts[(i + 1) % n] == Verdict::Coincidence)
      record(oc_product, v_rs == Verdict::Coincidence, ce);
    if (verdicts[i] == Verdict::Coincidence)
      record(oc_inverse, v_rt == Verdict::Coincidence, ce);
  }
  props = {product, inverse, oc_product, oc_inverse};
}

void suite_eta(const CatalogLookup& lk, const CommonOptions& opt, std::vector<Property>& props) {
  const FreeModule& g = lk.module;
  std::vector<Isometry> rs = sampled_isometries(lk, opt.samples, opt.seed);
  const int n = static_cast<int>(rs.size());

  Property divides{"eta_order_divides_dim"}, kernel{"kernel_is_oc"};
  Property multiplicative{"eta_multiplicative"};
  for (int i = 0; i < n; ++i) {
    Classification c = classify(g, rs[i]);
    auto ce = [&, i] { return Json{{"sample", i}, {"isometry", isometry_to_json(rs[i])}}; };
    record(divides, c.eta >= 1 && g.dim % c.eta == 0, ce);
    bool trivial_coset = false;
    if (c.verdict == Verdict::Coincidence) trivial_coset = true;
    else if (c.verdict == Verdict::Similarity)
      trivial_coset = subfield_contains(g.ring.field, c.coset->rep);
    const bool in_kernel = c.verdict == Verdict::Coincidence;
    record(kernel,
           c.verdict != Verdict::NotSimilarity && in_kernel == trivial_coset &&
               in_kernel == (c.eta == 1),
           ce);
    record(multiplicative, eta_product_check(g, rs[i], rs[(i + 1) % n]), ce);
  }
  props = {divides, kernel, multiplicative};
}

void suite_thm319(const CatalogLookup& lk, const CommonOptions& opt,
                  std::vector<Property>& props) {
  std::vector<Isometry> rs = sampled_isometries(lk, opt.samples, opt.seed);
  Property squared{"os_squared_in_oc"};
  for (std::size_t i = 0; i < rs.size(); ++i) {
    auto ce = [&, i] {
      return Json{{"sample", i}, {"isometry", isometry_to_json(rs[i])}};
    };
    record(squared, verify_os_squared(lk.module, rs[i]), ce);
  }
  props = {squared};
}

void suite_example315(const Example315& ex, std::vector<Property>& props, Json& extras) {
  Property similarity{"shift_is_similarity_not_coincidence"};
  Property eta{"eta_order_equals_m"};
  Property powers{"xi_power_rationality"};

  Classification c = classify(ex.module, ex.shift);
  auto ce = [&] { return Json{{"isometry", isometry_to_json(ex.shift)}}; };
  record(similarity, c.verdict == Verdict::Similarity, ce);
  record(eta, c.eta == ex.m, ce);

  // Independent confirmation of m: xi^i is rational exactly when m | i.
  FieldElement xi = ex.module.basis(0, 0);
  FieldElement power = make_rational(ex.module.ambient(), Rational(1));
  for (int i = 1; i <= ex.module.dim; ++i) {
    power = power * xi;
    const bool expected_rational = i % ex.m == 0;
    record(powers, rational_valued(power) == expected_rational,
           [&, i] { return Json{{"power", i}}; });
  }

  extras["m"] = ex.m;
  extras["eta_order"] = c.eta;
  props = {similarity, eta, powers};
}

void suite_thm27(const PlanarOrder& o, const CommonOptions& opt, std::vector<Property>& props) {
  std::mt19937_64 eng(opt.seed);
  std::uniform_int_distribution<long> coord(-9, 9);
  Property agree{"norm_equals_index"};
  for (int i = 0; i < opt.samples; ++i) {
    long u = 0, v = 0;
    do {
      u = coord(eng);
      v = coord(eng);
    } while (u == 0 && v == 0);
    FieldElement kappa = o.element(Rational(u), Rational(v));
    Rational norm = abs(o.norm(kappa));
    Integer index = principal_ideal_index(o, kappa);
    auto ce = [&, i, u, v] {
      return Json{{"sample", i},
                  {"kappa", Json::array({std::to_string(u), std::to_string(v)})},
                  {"abs_norm", rational_str(norm)},
                  {"index", index.get_str()}};
    };
    record(agree, norm.get_den() == 1 && norm.get_num() == index, ce);
  }
  props = {agree};
}

void suite_lemma26(const PlanarOrder& o, const CommonOptions& opt, std::vector<Property>& props,
                   Json& extras) {
  FreeModule om = o.as_module();
  std::mt19937_64 eng(opt.seed);
  std::uniform_int_distribution<long> coord(-9, 9);
  Property in_os{"sos_direction_in_os"}, modulus{"coset_is_modulus"};
  int found = 0;
  for (int attempt = 0; attempt < 80 * opt.samples && found < opt.samples; ++attempt) {
    long u = coord(eng), v = coord(eng);
    if (u == 0 && v == 0) continue;
    FieldElement a = o.element(Rational(u), Rational(v));
    std::optional<FieldElement> modulus_elem = sqrt_rational_in(o.real_ambient, o.norm(a));
    if (!modulus_elem) continue;  // |a| outside the shipped ambient
    ++found;
    Isometry r = sos_direction(o, a);
    Classification c = classify(om, r);
    auto ce = [&, u, v] {
      return Json{{"a", Json::array({std::to_string(u), std::to_string(v)})},
                  {"isometry", isometry_to_json(r)}};
    };
    record(in_os, c.verdict != Verdict::NotSimilarity, ce);
    bool ok = false;
    if (c.verdict == Verdict::Similarity)
      ok = coset_equal(*c.coset, ScalarCoset{*modulus_elem}, om.ring.field);
    else if (c.verdict == Verdict::Coincidence)
      ok = subfield_contains(om.ring.field, *modulus_elem);
    record(modulus, ok, ce);
  }
  extras["samples_realized"] = found;
  props = {in_os, modulus};
}

}  // namespace

Report cmd_commensurate(const std::string& module_arg_1, const std::string& module_arg_2,
                        const CommonOptions&) {
  Timer timer;
  Report r = start("commensurate");
  try {
    FreeModule a = load_module(module_arg_1);
    FreeModule b = load_module(module_arg_2);
    r.body["inputs"] =
        Json{{"module_1", module_to_json(a)}, {"module_2", module_to_json(b)}};
    const bool verdict = commensurate(a, b);
    r.body["verdict"] = verdict;
    r.text += std::string("commensurate: ") + (verdict ? "true" : "false") + "\n";
    if (verdict) {
      IntegerLattice meet = intersect(a, b);
      Integer i1 = module_index(a, meet);
      Integer i2 = module_index(b, meet);
      r.body["index_1"] = i1.get_str();
      r.body["index_2"] = i2.get_str();
      r.text += "index_1: " + i1.get_str() + "\n";
      r.text += "index_2: " + i2.get_str() + "\n";
    }
  } catch (const Error& e) {
    fail_with(r, e);
  } catch (const std::exception& e) {
    fail_generic(r, e);
  }
  r.body["timing_ms"] = timer.ms();
  return r;
}

Report cmd_classify(const std::string& module_arg, const std::string& isometry_file,
                    const CommonOptions&) {
  Timer timer;
  Report r = start("classify");
  try {
    FreeModule g = load_module(module_arg);
    Isometry iso = load_isometry(isometry_file);
    r.body["inputs"] =
        Json{{"module", module_to_json(g)}, {"isometry", isometry_to_json(iso)}};
    Classification c = classify(g, iso);
    switch (c.verdict) {
      case Verdict::Coincidence:
        r.body["verdict"] = "Coincidence";
        r.body["sigma"] = c.sigma->get_str();
        r.body["eta_order"] = c.eta;
        r.text += "Coincidence, sigma = " + c.sigma->get_str() + "\n";
        r.text += "eta_order: 1\n";
        break;
      case Verdict::Similarity: {
        const FieldElement rep = c.coset->rep.lifted_to(g.ambient());
        r.body["verdict"] = "Similarity";
        r.body["coset_rep"] = element_to_json(rep);
        r.body["coset_rep_display"] = to_string(rep);
        r.body["eta_order"] = c.eta;
        r.text += "Similarity, coset rep " + to_string(rep) + ", eta_order " +
                  std::to_string(c.eta) + "\n";
        break;
      }
      case Verdict::NotSimilarity:
        r.body["verdict"] = "NotSimilarity";
        r.text += "NotSimilarity\n";
        break;
    }
  } catch (const Error& e) {
    fail_with(r, e);
  } catch (const std::exception& e) {
    fail_generic(r, e);
  }
  r.body["timing_ms"] = timer.ms();
  return r;
}

Report cmd_verify(const std::string& suite, const std::string& target, const CommonOptions& opt) {
  Timer timer;
  Report r = start("verify");
  r.body["suite"] = suite;
  r.body["target"] = target;
  r.body["seed"] = opt.seed;
  r.body["samples"] = opt.samples;
  r.text += "suite: " + suite + "\ntarget: " + target + "\n";
  try {
    static const std::set<std::string> known = {"equivalence", "groups",    "eta",    "thm319",
                                                "example315",  "thm27",    "lemma26"};
    if (!known.count(suite))
      throw Error(Err::ParseError,
                  "unknown suite '" + suite +
                      "' (expected equivalence, groups, eta, thm319, example315, thm27, lemma26)");
    if (opt.samples < 1) throw Error(Err::ParseError, "--samples must be positive");

    CatalogLookup lk = resolve_target(target);
    r.body["inputs"] = Json{{"module", module_to_json(lk.module)}};

    std::vector<Property> props;
    Json extras = Json::object();
    if (suite == "equivalence") {
      suite_equivalence(lk.module, opt, props);
    } else if (suite == "groups") {
      suite_groups(lk, opt, props);
    } else if (suite == "eta") {
      suite_eta(lk, opt, props);
    } else if (suite == "thm319") {
      suite_thm319(lk, opt, props);
    } else if (suite == "example315") {
      if (!lk.example)
        throw Error(Err::BadTarget, "suite example315 requires an example315:d:n target");
      suite_example315(*lk.example, props, extras);
    } else if (suite == "thm27") {
      if (!lk.order) throw Error(Err::BadTarget, "suite thm27 requires an order:D:f target");
      suite_thm27(*lk.order, opt, props);
    } else {  // lemma26
      if (!lk.order) throw Error(Err::BadTarget, "suite lemma26 requires an order:D:f target");
      suite_lemma26(*lk.order, opt, props, extras);
    }

    int failures = 0;
    Json property_array = Json::array();
    for (const Property& p : props) {
      failures += p.fail;
      Json pj{{"name", p.name}, {"pass", p.pass}, {"fail", p.fail}};
      if (!p.counterexample.is_null()) pj["counterexample"] = p.counterexample;
      property_array.push_back(pj);
      r.text += p.name + ": " + std::to_string(p.pass) + "/" + std::to_string(p.pass + p.fail) +
                "\n";
      if (p.fail > 0) r.text += "  counterexample: " + p.counterexample.dump() + "\n";
    }
    r.body["properties"] = property_array;
    for (const auto& [key, value] : extras.items()) {
      r.body[key] = value;
      r.text += key + ": " + value.dump() + "\n";
    }
    r.exit_code = failures > 0 ? 1 : 0;
    r.body["result"] = failures > 0 ? "fail" : "pass";
    if (failures > 0)
      r.body["error"] = Json{{"code", "PropertyFailure"},
                             {"message", std::to_string(failures) + " property checks failed"}};
    r.text += std::string("result: ") + (failures > 0 ? "fail" : "pass") + "\n";
  } catch (const Error& e) {
    fail_with(r, e);
  } catch (const std::exception& e) {
    fail_generic(r, e);
  }
  r.body["timing_ms"] = timer.ms();
  return r;
}

Report cmd_index(const std::string& module_arg, const std::string& submodule_arg,
                 const CommonOptions&) {
  Timer timer;
  Report r = start("index");
  try {
    FreeModule m = load_module(module_arg);
    r.body["inputs"] = Json{{"module", module_to_json(m)}};
    FreeModule sub = [&] {
      try {
        return load_module(submodule_arg);
      } catch (const Error& e) {
        // A rank-deficient basis is a legitimate submodule request whose
        // index is infinite, not a malformed input.
        if (e.code == Err::Singular)
          throw Error(Err::InfiniteIndex,
                      "second module has deficient rank, so the index is infinite");
        throw;
      }
    }();
    r.body["inputs"]["submodule"] = module_to_json(sub);
    if (!is_submodule(sub, m))
      throw Error(Err::NotSubmodule, "second module is not a submodule of the first");
    Integer index = module_index(m, sub);
    r.body["index"] = index.get_str();
    r.text += "index: " + index.get_str() + "\n";
  } catch (const Error& e) {
    fail_with(r, e);
  } catch (const std::exception& e) {
    fail_generic(r, e);
  }
  r.body["timing_ms"] = timer.ms();
  return r;
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return report.body.dump(2) + "\n";
  return report.text;
}

}  // namespace cokit
