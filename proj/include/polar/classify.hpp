#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polar/vectorize.hpp"

namespace polar {

// One-vs-rest linear classifier. classes order fixes the order of decision
// values; weight vectors have vocabulary dimensionality.
struct LinearModel {
  std::vector<std::string> classes;
  std::size_t dim = 0;
  std::vector<std::vector<double>> weights;  // one per class, length dim
  std::vector<double> intercepts;            // one per class
  double C = 1.0;
};

struct TrainOptions {
  double C = 1.0;        // regularization strength
  double tol = 1e-4;     // projected-gradient stopping tolerance
  int max_passes = 1000;
  std::uint64_t seed = 0;
  double bias = 1.0;     // value of the augmented intercept feature
  int jobs = 1;          // one-vs-rest subproblems trained in parallel
};

// Dual objective after each outer pass, per class subproblem. The dual
// coordinate descent update minimizes exactly along each coordinate, so
// these sequences are non-increasing.
struct TrainDiagnostics {
  std::vector<std::vector<double>> objective_per_pass;
};

// Trains L2-regularized hinge-loss binary subproblems (dual coordinate
// descent), one per class. Deterministic for a fixed seed regardless of
// `jobs`. Throws Error for size mismatches, fewer than two distinct labels,
// non-finite inputs or inconsistent dimensionality.
LinearModel train(std::span<const TermVector> vectors, std::span<const std::string> labels,
                  const TrainOptions& opts = {}, TrainDiagnostics* diag = nullptr);

// w_c . x + b_c per class, in classes order. Throws Error on dim mismatch.
std::vector<double> decision_values(const LinearModel& model, const TermVector& x);

// argmax of decision_values; ties break to the lowest class index.
const std::string& predict(const LinearModel& model, const TermVector& x);
std::size_t predict_index(const LinearModel& model, const TermVector& x);

}  // namespace polar
