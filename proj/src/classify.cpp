#include "polar/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "parallel.hpp"
#include "polar/error.hpp"
#include "polar/kernels.hpp"
#include "rng.hpp"

namespace polar {

namespace {

// Dual coordinate descent for one L2-regularized L1-loss (hinge) binary
// subproblem:
//   min_w 1/2 w.w + C sum max(0, 1 - y_i w.x_i)
// solved in the dual over 0 <= alpha_i <= C. Vectors are augmented with a
// constant bias feature stored in the last weight slot.
struct BinaryProblem {
  std::span<const TermVector> x;
  std::vector<signed char> y;
  double C;
  double tol;
  int max_passes;
  double bias;
  detail::Rng rng;
};

struct BinarySolution {
  std::vector<double> w;  // dim + 1 slots, last is the bias weight
  std::vector<double> objective_per_pass;
};

BinarySolution solve_binary(BinaryProblem& p, std::size_t dim) {
  const std::size_t n = p.x.size();
  std::vector<double> w(dim + 1, 0.0);
  std::vector<double> alpha(n, 0.0);
  std::vector<double> qd(n);
  for (std::size_t i = 0; i < n; ++i) {
    qd[i] = kernels::squared_norm(p.x[i].values) + p.bias * p.bias;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  BinarySolution sol;
  for (int pass = 0; pass < p.max_passes; ++pass) {
    detail::shuffle(order, p.rng);
    double pg_max = -std::numeric_limits<double>::infinity();
    double pg_min = std::numeric_limits<double>::infinity();
    for (std::size_t i : order) {
      const TermVector& xi = p.x[i];
      const double yi = p.y[i];
      double g = yi * (kernels::sparse_dot(xi.indices, xi.values, w) + w[dim] * p.bias) - 1.0;

      double pg = g;
      if (alpha[i] <= 0.0) {
        pg = std::min(g, 0.0);
      } else if (alpha[i] >= p.C) {
        pg = std::max(g, 0.0);
      }
      pg_max = std::max(pg_max, pg);
      pg_min = std::min(pg_min, pg);

      if (pg != 0.0 && qd[i] > 0.0) {
        double old = alpha[i];
        alpha[i] = std::min(std::max(old - g / qd[i], 0.0), p.C);
        double d = (alpha[i] - old) * yi;
        if (d != 0.0) {
          kernels::sparse_axpy(d, xi.indices, xi.values, w);
          w[dim] += d * p.bias;
        }
      }
    }
    double objective = 0.5 * kernels::squared_norm(w);
    for (double a : alpha) objective -= a;
    sol.objective_per_pass.push_back(objective);
    if (pg_max - pg_min <= p.tol) break;
  }
  sol.w = std::move(w);
  return sol;
}

}  // namespace

LinearModel train(std::span<const TermVector> vectors, std::span<const std::string> labels,
                  const TrainOptions& opts, TrainDiagnostics* diag) {
  if (vectors.size() != labels.size()) {
    throw Error("train: vectors and labels differ in length");
  }
  if (vectors.size() < 2) throw Error("train: need at least two examples");

  std::size_t dim = vectors.front().dim;
  for (const TermVector& v : vectors) {
    if (v.dim != dim) throw Error("train: inconsistent vector dimensionality");
    for (double x : v.values) {
      if (!std::isfinite(x)) throw Error("train: non-finite feature value");
    }
  }

  // Classes in first-appearance order.
  std::vector<std::string> classes;
  std::vector<std::size_t> class_of(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find(classes.begin(), classes.end(), labels[i]);
    if (it == classes.end()) {
      class_of[i] = classes.size();
      classes.push_back(labels[i]);
    } else {
      class_of[i] = static_cast<std::size_t>(it - classes.begin());
    }
  }
  if (classes.size() < 2) {
    throw Error("train: degenerate single-class training set ('" + classes.front() + "')");
  }

  LinearModel model;
  model.classes = classes;
  model.dim = dim;
  model.C = opts.C;
  model.weights.resize(classes.size());
  model.intercepts.assign(classes.size(), 0.0);
  if (diag != nullptr) diag->objective_per_pass.assign(classes.size(), {});

  detail::parallel_for(classes.size(), opts.jobs, [&](std::size_t c) {
    BinaryProblem p{vectors,
                    {},
                    opts.C,
                    opts.tol,
                    opts.max_passes,
                    opts.bias,
                    detail::Rng(detail::mix(opts.seed, c))};
    p.y.resize(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      p.y[i] = class_of[i] == c ? 1 : -1;
    }
    BinarySolution sol = solve_binary(p, dim);
    model.intercepts[c] = sol.w[dim] * opts.bias;
    sol.w.resize(dim);
    model.weights[c] = std::move(sol.w);
    if (diag != nullptr) diag->objective_per_pass[c] = std::move(sol.objective_per_pass);
  });
  return model;
}

std::vector<double> decision_values(const LinearModel& model, const TermVector& x) {
  if (x.dim != model.dim) {
    throw Error("decision_values: vector dimensionality " + std::to_string(x.dim) +
                " does not match model dimensionality " + std::to_string(model.dim));
  }
  std::vector<double> values(model.classes.size());
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    values[c] =
        kernels::sparse_dot(x.indices, x.values, model.weights[c]) + model.intercepts[c];
  }
  return values;
}

std::size_t predict_index(const LinearModel& model, const TermVector& x) {
  std::vector<double> values = decision_values(model, x);
  std::size_t best = 0;
  for (std::size_t c = 1; c < values.size(); ++c) {
    if (values[c] > values[best]) best = c;  // ties keep the lowest index
  }
  return best;
}

const std::string& predict(const LinearModel& model, const TermVector& x) {
  return model.classes[predict_index(model, x)];
}

}  // namespace polar
