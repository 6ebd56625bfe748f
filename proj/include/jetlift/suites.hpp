#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jetlift/check.hpp"
#include "jetlift/tensors.hpp"
#include "jetlift/transform.hpp"

namespace jetlift {

template <class T>
using Named = std::vector<std::pair<std::string, T>>;

/// Objects on BaseE(n) that the identity suites range over.
struct Corpus {
  int n = 1;
  Named<ScalarField> scalars;
  Named<OneForm> forms;
  Named<TwoForm> two_forms;
  /// R with R(dt) = 0.
  Named<Tensor11> tensors;
  Named<VectorField> vertical;
  Named<VectorField> time_normalized;
  Named<FibredTransform> transforms;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws ModelError when the corpus lacks objects the suite needs.
CheckReport run_suite(const std::string& suite, const Corpus& corpus, const SampleSpec& spec,
                      double tolerance = kSymbolicTolerance);

}  // namespace jetlift
