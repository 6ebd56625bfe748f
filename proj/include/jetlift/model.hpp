#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "jetlift/suites.hpp"
#include "jetlift/tensors.hpp"
#include "jetlift/transform.hpp"

namespace jetlift {

using ModelValue = std::variant<ScalarField, VectorField, OneForm, Tensor11, TwoForm, FibredTransform>;

struct ModelObject {
  std::string name;
  /// scalar_E, scalar_J, vector_E, oneform_E, tensor11_E, twoform_E or transform.
  std::string kind;
  ModelValue value;
};

/// { "n": int, "objects": { NAME: { "kind": KIND, "components": {...} } } }
///
/// Component keys: "value" for scalars; coordinate names for vectors and one-forms;
/// "row,col" coordinate pairs for tensor11_E; "a,b" pairs (each unordered pair once) for
/// twoform_E, giving w(d/da, d/db); "q1".."qn" for transforms, with an optional "inverse"
/// object next to "components" giving q^i in terms of (t, Q) under the same names.
struct Model {
  int n = 1;
  std::vector<ModelObject> objects;

  const ModelObject& get(const std::string& name) const;
};

Model parse_model(const std::string& json_text);
Model load_model(const std::filesystem::path& path);

/// Sorts model objects into suite inputs. General vector fields are left out; a tensor
/// with R(dt) != 0 is rejected.
Corpus corpus_from(const Model& model);

}  // namespace jetlift
