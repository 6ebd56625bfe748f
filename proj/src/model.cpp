#include "jetlift/model.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "jetlift/errors.hpp"

namespace jetlift {

namespace {

using json = nlohmann::ordered_json;

int coordinate(const Space& s, const std::string& name, const std::string& object) {
  const auto k = s.index_of(name);
  if (!k) throw ModelError("object '" + object + "': unknown coordinate '" + name + "'");
  return *k;
}

std::string expression(const json& v, const std::string& object) {
  if (!v.is_string()) throw ModelError("object '" + object + "': components must be expression strings");
  return v.get<std::string>();
}

std::pair<int, int> index_pair(const Space& s, const std::string& key, const std::string& object) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw ModelError("object '" + object + "': expected a \"row,col\" key, got '" + key + "'");
  auto trim = [](std::string x) {
    const auto b = x.find_first_not_of(' ');
    const auto e = x.find_last_not_of(' ');
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  return {coordinate(s, trim(key.substr(0, comma)), object), coordinate(s, trim(key.substr(comma + 1)), object)};
}

template <class V>
V field_vector(const Space& s, const json& comps, const std::string& name) {
  std::vector<ScalarField> c(static_cast<std::size_t>(s.dim()), ScalarField::constant(s, 0.0));
  for (const auto& [key, val] : comps.items()) {
    c[static_cast<std::size_t>(coordinate(s, key, name))] = ScalarField::parse(expression(val, name), s);
  }
  return V(s, std::move(c));
}

std::vector<ScalarField> transform_fields(const Space& e, const json& comps, const std::string& name) {
  std::vector<std::optional<ScalarField>> q(static_cast<std::size_t>(e.n()));
  for (const auto& [key, val] : comps.items()) {
    const int k = coordinate(e, key, name);
    if (k == Space::t()) throw ModelError("object '" + name + "': transforms keep t fixed");
    q[static_cast<std::size_t>(k - 1)] = ScalarField::parse(expression(val, name), e);
  }
  std::vector<ScalarField> out;
  for (int i = 1; i <= e.n(); ++i) {
    if (!q[static_cast<std::size_t>(i - 1)]) {
      throw ModelError("object '" + name + "': missing component q" + std::to_string(i));
    }
    out.push_back(*q[static_cast<std::size_t>(i - 1)]);
  }
  return out;
}

ModelValue build(int n, const std::string& name, const std::string& kind, const json& obj) {
  const Space e = Space::base(n);
  const Space j = Space::phase(n);
  if (!obj.contains("components") || !obj["components"].is_object()) {
    throw ModelError("object '" + name + "' needs a components object");
  }
  const json& comps = obj["components"];
  if (kind == "scalar_E" || kind == "scalar_J") {
    if (!comps.contains("value")) throw ModelError("object '" + name + "' needs a \"value\" component");
    return ScalarField::parse(expression(comps["value"], name), kind == "scalar_E" ? e : j);
  }
  if (kind == "vector_E") return field_vector<VectorField>(e, comps, name);
  if (kind == "oneform_E") return field_vector<OneForm>(e, comps, name);
  if (kind == "tensor11_E") {
    Tensor11 r = Tensor11::zero(e);
    for (const auto& [key, val] : comps.items()) {
      const auto [a, b] = index_pair(e, key, name);
      r.set(a, b, ScalarField::parse(expression(val, name), e));
    }
    return r;
  }
  if (kind == "twoform_E") {
    TwoForm w = TwoForm::zero(e);
    std::vector<bool> seen(static_cast<std::size_t>(e.dim() * e.dim()), false);
    for (const auto& [key, val] : comps.items()) {
      const auto [a, b] = index_pair(e, key, name);
      if (a == b) throw ModelError("object '" + name + "': diagonal two-form entry '" + key + "'");
      const auto lo = static_cast<std::size_t>(std::min(a, b) * e.dim() + std::max(a, b));
      if (seen[lo]) throw ModelError("object '" + name + "': entry '" + key + "' given twice");
      seen[lo] = true;
      const ScalarField v = ScalarField::parse(expression(val, name), e);
      w.set(a, b, v);
      w.set(b, a, -v);
    }
    return w;
  }
  if (kind == "transform") {
    std::optional<std::vector<ScalarField>> inv;
    if (obj.contains("inverse")) inv = transform_fields(e, obj["inverse"], name);
    return FibredTransform(n, transform_fields(e, comps, name), std::move(inv));
  }
  throw ModelError("object '" + name + "': unknown kind '" + kind + "'");
}

}  // namespace

const ModelObject& Model::get(const std::string& name) const {
  for (const auto& o : objects) {
    if (o.name == name) return o;
  }
  throw ModelError("model has no object '" + name + "'");
}

Model parse_model(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw ModelError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ModelError("model needs an integer \"n\"");
  }
  Model m;
  m.n = doc["n"].get<int>();
  if (m.n < 1) throw ModelError("n must be positive");
  if (!doc.contains("objects") || !doc["objects"].is_object()) throw ModelError("model needs an \"objects\" map");
  for (const auto& [name, obj] : doc["objects"].items()) {
    if (!obj.is_object() || !obj.contains("kind") || !obj["kind"].is_string()) {
      throw ModelError("object '" + name + "' needs a string \"kind\"");
    }
    const std::string kind = obj["kind"].get<std::string>();
    m.objects.push_back({name, kind, build(m.n, name, kind, obj)});
  }
  return m;
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

Corpus corpus_from(const Model& model) {
  Corpus c;
  c.n = model.n;
  for (const auto& o : model.objects) {
    if (o.kind == "scalar_E") {
      c.scalars.emplace_back(o.name, std::get<ScalarField>(o.value));
    } else if (o.kind == "oneform_E") {
      c.forms.emplace_back(o.name, std::get<OneForm>(o.value));
    } else if (o.kind == "twoform_E") {
      c.two_forms.emplace_back(o.name, std::get<TwoForm>(o.value));
    } else if (o.kind == "tensor11_E") {
      const auto& r = std::get<Tensor11>(o.value);
      if (!annihilates_dt(r)) throw ModelError("tensor '" + o.name + "' does not satisfy R(dt) = 0");
      c.tensors.emplace_back(o.name, r);
    } else if (o.kind == "vector_E") {
      const auto& x = std::get<VectorField>(o.value);
      if (is_vertical(x)) {
        c.vertical.emplace_back(o.name, x);
      } else if (is_time_normalized(x)) {
        c.time_normalized.emplace_back(o.name, x);
      }
    } else if (o.kind == "transform") {
      c.transforms.emplace_back(o.name, std::get<FibredTransform>(o.value));
    }
  }
  return c;
}

}  // namespace jetlift
