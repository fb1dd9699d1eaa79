#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nlie/qideal.hpp"
#include "nlie/sln.hpp"
#include "nlie/verma.hpp"

namespace nlie {

/// delta_{i,j} = 1 iff i >= j (a step indicator, not the Kronecker delta).
int delta_indicator(int i, int j);

struct ViolationWitness {
  GeneratorSpec spec;
  std::string image;  // x . (1 (x) v_lambda) in text form
  int depth = 0;      // largest PBW degree of the image
};

/// Value of one E_{k,j}E_{k,j}-shaped generator on 1 (x) v_lambda next to the
/// value its stated formula takes in the module.
struct SquareRootEvaluation {
  GeneratorSpec spec;
  std::string indices;
  std::string image;
  std::string stated;
  bool image_zero = true;
  bool stated_zero = true;
};

struct AdmissibilityReport {
  std::size_t n = 0;
  Weight lambda;
  std::optional<std::size_t> exceptional;
  std::size_t generators_evaluated = 0;
  std::size_t nonzero_images = 0;
  /// Number of generators whose image is neither zero nor in Sing_+.
  std::size_t violation_count = 0;
  /// The first witnesses in enumeration order (at most ClassifyOptions::max_witnesses).
  std::vector<ViolationWitness> violations;
  bool admissible = true;
  std::vector<std::string> discrepancy_notes;
  /// Filled for lambda = (0,..,0,1) only.
  std::vector<SquareRootEvaluation> square_root_evaluations;
};

struct ClassifyOptions {
  int depth = kDefaultDepth;
  CaseFilter filter = CaseFilter::any_case;
  std::optional<DegreeWindow> window;  // default: {2n-1, 2n, 2n+1}
  std::size_t max_dim = kDefaultMaxDim;
  std::size_t max_witnesses = 5;
};

/// Evaluates every enumerated generator on 1 (x) v_lambda. Non-exceptional
/// weights require a zero image; exceptional ones require membership in Sing_+.
AdmissibilityReport q_triviality(const Weight& lambda, const ClassifyOptions& options = {});

/// q_triviality for several weights of the same n, computing each generator
/// once and evaluating it on every weight.
std::vector<AdmissibilityReport> classify_weights(const std::vector<Weight>& weights,
                                                  const ClassifyOptions& options = {});

/// All weights with 0 <= lambda_i <= grid_bound, in lexicographic order.
std::vector<Weight> weight_grid(std::size_t n, int grid_bound);

struct ClassificationSummary {
  std::size_t n = 0;
  std::vector<AdmissibilityReport> reports;
  std::vector<Weight> admissible;
  /// True when the admissible set is {0}.
  bool matches_theorem = false;
  std::vector<std::string> discrepancy_notes;
};

/// Runs classify_weights and summarizes. When the admissible set differs from
/// {0} the notes list the surviving weights; for lambda = (0,..,0,1) they also
/// record the values of the E_{k,j}E_{k,j}-shaped generators.
ClassificationSummary classify(std::size_t n, const std::vector<Weight>& weights, const ClassifyOptions& options = {});

}  // namespace nlie
