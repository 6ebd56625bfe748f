#include "cli.hpp"

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "jetlift/darboux.hpp"
#include "jetlift/errors.hpp"
#include "jetlift/lifts.hpp"
#include "jetlift/model.hpp"
#include "jetlift/pn.hpp"
#include "jetlift/suites.hpp"

namespace jetlift::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string model;
  std::string object;
  std::string kind;
  std::string suite;
  std::string domain;
  int points = 64;
  std::uint64_t seed = 0;
  double tol = 0.0;
  bool tol_given = false;
  bool json = false;
};

std::string num(double x) {
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

std::string tuple(const std::vector<double>& xs, const char* open = "(", const char* close = ")") {
  std::string s = open;
  for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + num(xs[k]);
  return s + close;
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || text.find_first_not_of(" \t", used) != std::string::npos) {
    throw ModelError("bad number '" + text + "' in --domain");
  }
  return v;
}

/// "lo,hi" for every coordinate, or "lo,hi;lo,hi;..." in coordinate order.
std::vector<std::pair<double, double>> parse_domain(const std::string& text, int n) {
  std::vector<std::pair<double, double>> box;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) {
    const auto comma = part.find(',');
    if (comma == std::string::npos) throw ModelError("--domain expects lo,hi pairs, got '" + part + "'");
    const double lo = parse_number(part.substr(0, comma));
    const double hi = parse_number(part.substr(comma + 1));
    if (!(lo < hi)) throw ModelError("--domain range '" + part + "' is empty");
    box.emplace_back(lo, hi);
  }
  if (box.empty()) throw ModelError("--domain is empty");
  if (box.size() == 1) box.assign(static_cast<std::size_t>(2 * n + 2), box.front());
  return box;
}

SampleSpec sample_spec(const Options& o, int n) {
  SampleSpec spec;
  spec.points = o.points;
  spec.seed = o.seed;
  if (!o.domain.empty()) spec.box = parse_domain(o.domain, n);
  return spec;
}

std::string coefficient(const ScalarField& c) {
  const std::string s = c.to_string();
  return s.find(' ') == std::string::npos ? s : "(" + s + ")";
}

/// Nonzero components as "c basis" terms, with the t-slot last.
std::string combination(const Space& space, const std::vector<ScalarField>& comps, const std::string& prefix) {
  std::string out;
  auto append = [&](int a) {
    const ScalarField& c = comps[static_cast<std::size_t>(a)];
    if (c.is_zero()) return;
    const std::string basis = prefix + space.name(a);
    std::string term = c.is_constant(1.0) ? basis : c.is_constant(-1.0) ? "-" + basis : coefficient(c) + " " + basis;
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  };
  for (int a = 1; a < space.dim(); ++a) append(a);
  append(Space::t());
  return out.empty() ? "0" : out;
}

struct Rendered {
  std::string type;
  Space space;
  std::string text;
  json components = json::object();
};

Rendered render(const ScalarField& f) {
  Rendered r{"scalar", f.space(), f.to_string()};
  r.components["value"] = f.to_string();
  return r;
}

template <class V>
Rendered render_vector(const V& v, const std::string& type, const std::string& prefix) {
  Rendered r{type, v.space(), combination(v.space(), v.components(), prefix)};
  for (int a = 0; a < v.dim(); ++a) {
    if (!v[a].is_zero()) r.components[v.space().name(a)] = v[a].to_string();
  }
  return r;
}

Rendered render(const VectorField& v) { return render_vector(v, "vector", "d/d"); }
Rendered render(const OneForm& a) { return render_vector(a, "oneform", "d"); }

template <class Tag>
Rendered render_matrix(const FieldMatrix<Tag>& m, const std::string& type) {
  Rendered r{type, m.space(), ""};
  for (int a = 0; a < m.dim(); ++a) {
    for (int b = 0; b < m.dim(); ++b) {
      if (m(a, b).is_zero()) continue;
      const std::string key = m.space().name(a) + "," + m.space().name(b);
      r.components[key] = m(a, b).to_string();
      r.text += (r.text.empty() ? "" : "\n") + key + ": " + m(a, b).to_string();
    }
  }
  if (r.text.empty()) r.text = "0";
  return r;
}

Rendered render(const Tensor11& m) { return render_matrix(m, "tensor11"); }
Rendered render(const TwoForm& m) { return render_matrix(m, "twoform"); }

Rendered render(const FibredTransform& tr) {
  const Space& e = tr.base().space();
  Rendered r{"transform", e, ""};
  for (int i = 1; i <= tr.n(); ++i) {
    const std::string q = e.name(i);
    const std::string fwd = tr.base().forward()[static_cast<std::size_t>(i)].to_string();
    r.components[q] = fwd;
    r.text += (r.text.empty() ? "" : "\n") + ("Q" + std::to_string(i)) + " = " + fwd;
  }
  if (tr.base().has_inverse()) {
    json inv = json::object();
    r.text += "\ninverse, with Q read in place of q:";
    for (int i = 1; i <= tr.n(); ++i) {
      const std::string q = e.name(i);
      const std::string back = tr.base().inverse()[static_cast<std::size_t>(i)].to_string();
      inv[q] = back;
      r.text += "\n" + q + " = " + back;
    }
    r.components["inverse"] = inv;
  }
  return r;
}

Rendered render(const ModelValue& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

void emit(const Options& o, std::ostream& out, const std::string& object, const std::string& label,
          const std::string& label_value, const Rendered& r) {
  if (o.json) {
    json doc;
    doc["object"] = object;
    doc[label] = label_value;
    doc["type"] = r.type;
    doc["space"] = r.space.to_string();
    doc["components"] = r.components;
    out << doc.dump(2) << "\n";
  } else {
    out << r.text << "\n";
  }
}

int cmd_print(const Options& o, std::ostream& out) {
  const Model model = load_model(o.model);
  if (o.object.empty()) {
    if (o.json) {
      json doc;
      doc["n"] = model.n;
      json objects = json::object();
      for (const auto& obj : model.objects) objects[obj.name] = obj.kind;
      doc["objects"] = objects;
      out << doc.dump(2) << "\n";
    } else {
      out << "n = " << model.n << "\n";
      for (const auto& obj : model.objects) out << obj.name << " " << obj.kind << "\n";
    }
    return kExitPass;
  }
  const ModelObject& obj = model.get(o.object);
  emit(o, out, obj.name, "kind", obj.kind, render(obj.value));
  return kExitPass;
}

Rendered lift_of(const ModelObject& obj, const std::string& kind, int n) {
  const auto mismatch = [&]() {
    return ModelError("lift '" + kind + "' does not apply to object '" + obj.name + "' of kind " + obj.kind);
  };
  if (obj.kind == "oneform_E") {
    const auto& a = std::get<OneForm>(obj.value);
    if (kind == "vertical") return render(vlift_oneform(a));
    if (kind == "pullback") return render(pullback(a, Space::phase(n)));
  } else if (obj.kind == "vector_E") {
    if (kind == "complete") return render(complete_lift_vector(std::get<VectorField>(obj.value)));
  } else if (obj.kind == "tensor11_E") {
    const auto& r = std::get<Tensor11>(obj.value);
    if (kind == "vertical") return render(vlift_tensor11(r));
    if (kind == "horizontal") return render(hlift_tensor11(r));
    if (kind == "complete") return render(complete_lift_tensor11(r));
    if (kind == "cotangent") return render(complete_lift_cotangent(r));
  } else if (obj.kind == "twoform_E") {
    const auto& w = std::get<TwoForm>(obj.value);
    if (kind == "vertical") return render(vlift_twoform(w));
    if (kind == "pullback") return render(pullback(w, Space::phase(n)));
  } else if (obj.kind == "scalar_E") {
    if (kind == "pullback") return render(std::get<ScalarField>(obj.value).pulled_back_to(Space::phase(n)));
  }
  throw mismatch();
}

int cmd_lift(const Options& o, std::ostream& out) {
  const Model model = load_model(o.model);
  const ModelObject& obj = model.get(o.object);
  emit(o, out, obj.name, "lift", o.kind, lift_of(obj, o.kind, model.n));
  return kExitPass;
}

bool engages_procedural(const Model& model) {
  for (const auto& obj : model.objects) {
    if (obj.kind == "transform" && !std::get<FibredTransform>(obj.value).base().has_inverse()) return true;
  }
  return false;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Model model = load_model(o.model);
  const Corpus corpus = corpus_from(model);
  const double tol = o.tol_given ? o.tol : engages_procedural(model) ? kProceduralTolerance : kSymbolicTolerance;
  const CheckReport report = run_suite(o.suite, corpus, sample_spec(o, model.n), tol);
  if (o.json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    int passed = 0;
    for (const auto& r : report.results) {
      passed += r.passed ? 1 : 0;
      out << (r.passed ? "PASS " : "FAIL ") << r.id << "  max " << num(r.max_residual)
          << (r.expectation == Expectation::NonZero ? " (expected nonzero)" : "") << "  at "
          << tuple(r.worst_point) << "  " << r.ref << "\n";
    }
    for (const auto& [key, value] : report.notes) out << key << ": " << value << "\n";
    out << report.suite << ": " << passed << "/" << report.results.size() << " passed (tol " << num(tol)
        << ", points " << report.points << ", seed " << report.seed << ")\n";
  }
  return report.all_passed() ? kExitPass : kExitFailure;
}

json pn_json(const PNReport& pn) {
  json j;
  j["commutation"] = pn.commutation_residual;
  j["magri_morosi"] = pn.magri_morosi_residual;
  j["torsion"] = pn.torsion_residual;
  j["lifted_torsion"] = pn.lifted_torsion_residual;
  j["tolerance"] = pn.tolerance;
  return j;
}

int cmd_darboux(const Options& o, std::ostream& out) {
  const Model model = load_model(o.model);
  const ModelObject& obj = model.get(o.object);
  if (obj.kind != "tensor11_E") throw ModelError("darboux needs a tensor11_E object, '" + o.object + "' is " + obj.kind);
  const auto& r = std::get<Tensor11>(obj.value);
  const SampleSpec spec = sample_spec(o, model.n);
  const double tol = o.tol_given ? o.tol : kSymbolicTolerance;
  const Space e = Space::base(model.n);

  const PNReport pn = pn_check(r, spec, tol);
  json doc;
  doc["object"] = obj.name;
  doc["seed"] = spec.seed;
  doc["points"] = spec.points;
  json box = json::array();
  for (int a = 0; a < e.dim(); ++a) box.push_back({spec.range(a).first, spec.range(a).second});
  doc["domain"] = box;
  doc["verdict"] = pn.verdict();
  doc["pn"] = pn_json(pn);
  if (!pn.pn_structure) {
    doc["passed"] = false;
    if (o.json) {
      out << doc.dump(2) << "\n";
    } else {
      out << "object " << obj.name << "\nverdict " << pn.verdict() << "\nN_R max " << num(pn.torsion_residual)
          << " at " << tuple(pn.torsion_point) << "\nrefused: no Darboux-Nijenhuis coordinates for a non-PN tensor\n";
    }
    return kExitFailure;
  }

  const FibredTransform tr = build_dn_transform(r, spec, tol);
  std::vector<double> center;
  for (int a = 0; a < e.dim(); ++a) center.push_back(0.5 * (spec.range(a).first + spec.range(a).second));
  const EigenData at_center = eigen_analysis(r, center);
  const CheckReport checks = verify_dn(r, tr, spec);

  SampleSpec sample_draw = spec;
  sample_draw.seed = spec.seed + 1;
  json samples = json::array();
  std::string sample_text;
  for (const auto& x : draw_points(e, sample_draw, 5)) {
    const EigenData ed = eigen_analysis(r, x);
    samples.push_back({{"point", x}, {"eigenvalues", ed.eigenvalues}});
    sample_text += "  " + tuple(x) + " -> " + tuple(ed.eigenvalues, "{", "}") + "\n";
  }
  json transform = json::object();
  std::string transform_text;
  for (int i = 1; i <= model.n; ++i) {
    transform[e.name(i)] = "lambda" + std::to_string(i);
    transform_text += "  Q" + std::to_string(i) + " = lambda" + std::to_string(i) + "(" + e.name(0);
    for (int k = 1; k <= model.n; ++k) transform_text += ", " + e.name(k);
    transform_text += ")\n";
  }

  doc["center"] = center;
  doc["eigenvalues"] = at_center.eigenvalues;
  doc["samples"] = samples;
  doc["transform"] = transform;
  doc["checks"] = checks.to_json();
  doc["passed"] = checks.all_passed();
  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "object " << obj.name << "\nverdict " << pn.verdict() << "\neigenvalues at " << tuple(center) << ": "
        << tuple(at_center.eigenvalues, "{", "}") << "\nsamples:\n"
        << sample_text << "transform (ascending eigenvalues):\n"
        << transform_text << "checks:\n";
    for (const auto& c : checks.results) {
      out << "  " << (c.passed ? "PASS " : "FAIL ") << c.id << "  max " << num(c.max_residual) << "  at "
          << tuple(c.worst_point) << "\n";
    }
    out << (checks.all_passed() ? "PASS" : "FAIL") << "\n";
  }
  return checks.all_passed() ? kExitPass : kExitFailure;
}

void add_model(CLI::App* sub, Options& o, bool object_required) {
  sub->add_option("--model", o.model, "Model JSON file")->required()->check(CLI::ExistingFile);
  auto* obj = sub->add_option("--object", o.object, "Object name in the model");
  if (object_required) obj->required();
  sub->add_flag("--json", o.json, "Machine-readable output");
}

void add_sampling(CLI::App* sub, Options& o) {
  sub->add_option("--points", o.points, "Sample points")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "Sampling seed");
  sub->add_option("--domain", o.domain, "Box: \"lo,hi\" for all coordinates or \"lo,hi;lo,hi;...\" per coordinate");
  sub->add_option_function<double>("--tol", [&o](double v) { o.tol = v; o.tol_given = true; }, "Tolerance")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lifts, identity checks and Darboux-Nijenhuis coordinates on jet bundles", "jetlift"};
  app.require_subcommand(1, 1);

  auto* lift = app.add_subcommand("lift", "Print a lifted object");
  add_model(lift, o, true);
  lift->add_option("--kind", o.kind, "vertical | complete | horizontal | cotangent | pullback")
      ->required()
      ->check(CLI::IsMember({"vertical", "complete", "horizontal", "cotangent", "pullback"}));

  auto* verify = app.add_subcommand("verify", "Run an identity suite on the model corpus");
  add_model(verify, o, false);
  verify->add_option("--suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  add_sampling(verify, o);

  auto* darboux = app.add_subcommand("darboux", "Build and verify Darboux-Nijenhuis coordinates");
  add_model(darboux, o, true);
  add_sampling(darboux, o);

  auto* print = app.add_subcommand("print", "Print model objects");
  add_model(print, o, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (lift->parsed()) return cmd_lift(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (darboux->parsed()) return cmd_darboux(o, out);
    return cmd_print(o, out);
  } catch (const TorsionNonzeroError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace jetlift::cli
