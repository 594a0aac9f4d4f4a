#include "minci/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

namespace minci {

namespace {

constexpr double lower_bound = 0.01;
constexpr double gradient_step = 1e-5;
constexpr double polish_step = 1e-4;

struct Objective {
  const SymmetryBlock *block;
  double charge;
  std::vector<int> active; // indices into (z1, z2, z3)

  double upper_bound() const { return 20.0 * charge; }

  DilationParams params(const std::vector<double> &x) const {
    std::array<double, 3> z{x[0], x[0], x[0]};
    for (std::size_t k = 0; k < active.size(); ++k) {
      z[static_cast<std::size_t>(active[k])] = x[k];
    }
    return {z[0], z[1], z[2]};
  }

  bool inside(const std::vector<double> &x) const {
    return std::all_of(x.begin(), x.end(),
                       [&](double v) { return v > lower_bound && v < upper_bound(); });
  }

  // Lowest block eigenvalue; outside the box a steep wall that keeps the
  // simplex inside without producing infinities.
  double operator()(const std::vector<double> &x) const {
    if (!inside(x)) {
      double excess = 0.0;
      for (double v : x) {
        excess += std::max(0.0, lower_bound - v) + std::max(0.0, v - upper_bound());
      }
      return 1e6 * (1.0 + excess);
    }
    const IntegralSet ints = compute_integrals(charge, params(x));
    return solve_block(evaluate_block(*block, ints)).front().energy;
  }

  double gradient_norm(const std::vector<double> &x) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      std::vector<double> a = x, b = x;
      a[i] += gradient_step;
      b[i] -= gradient_step;
      const double g = ((*this)(a) - (*this)(b)) / (2.0 * gradient_step);
      sum += g * g;
    }
    return std::sqrt(sum);
  }
};

double gsl_objective(const gsl_vector *v, void *data) {
  const auto *obj = static_cast<const Objective *>(data);
  std::vector<double> x(v->size);
  for (std::size_t i = 0; i < v->size; ++i) {
    x[i] = gsl_vector_get(v, i);
  }
  return (*obj)(x);
}

struct RunState {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  double last_step = 0.0;
  bool hit_cap = false;
};

// Nelder-Mead until the simplex collapses, then cyclic one-dimensional
// parabola fits until the steps vanish.
RunState minimize_from(const Objective &obj, std::vector<double> x0, int max_iterations) {
  static std::once_flag gsl_handler;
  std::call_once(gsl_handler, [] { gsl_set_error_handler_off(); });

  const std::size_t n = x0.size();
  gsl_multimin_function fn{&gsl_objective, n, const_cast<Objective *>(&obj)};
  gsl_multimin_fminimizer *s =
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_vector *x = gsl_vector_alloc(n);
  gsl_vector *step = gsl_vector_alloc(n);

  RunState st;
  st.x = std::move(x0);
  st.f = obj(st.x);
  // Nelder-Mead in rounds; a round that stalls (degenerate simplex) is
  // restarted from its best vertex with a fresh, smaller simplex.
  double scale = 0.1;
  for (int round = 0; round < 20 && st.iterations < max_iterations; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      gsl_vector_set(x, i, st.x[i]);
      gsl_vector_set(step, i, scale * st.x[i]);
    }
    gsl_multimin_fminimizer_set(s, &fn, x, step);
    bool collapsed = false;
    for (int k = 0; k < 400 && st.iterations < max_iterations; ++k) {
      ++st.iterations;
      if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) {
        break;
      }
      if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-6) == GSL_SUCCESS) {
        collapsed = true;
        break;
      }
    }
    const double f_before = st.f;
    if (s->fval < st.f) {
      for (std::size_t i = 0; i < n; ++i) {
        st.x[i] = gsl_vector_get(s->x, i);
      }
      st.f = s->fval;
    }
    if (collapsed || f_before - st.f < 1e-10) {
      break;
    }
    scale = 0.01;
  }
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(x);
  gsl_vector_free(step);

  for (bool moving = true; moving;) {
    if (st.iterations >= max_iterations) {
      st.hit_cap = true;
      break;
    }
    ++st.iterations;
    const double f_before = st.f;
    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> plus = st.x, minus = st.x;
      plus[i] += polish_step;
      minus[i] -= polish_step;
      const double fp = obj(plus), fm = obj(minus);
      const double curvature = (fp + fm - 2.0 * st.f) / (polish_step * polish_step);
      if (!(curvature > 0.0)) {
        continue;
      }
      double delta = -(fp - fm) / (2.0 * polish_step * curvature);
      delta = std::clamp(delta, -10.0 * polish_step, 10.0 * polish_step);
      std::vector<double> trial = st.x;
      trial[i] += delta;
      const double ft = obj(trial);
      if (ft < st.f) {
        st.x = trial;
        st.f = ft;
        largest = std::max(largest, std::abs(delta));
      }
    }
    st.last_step = largest;
    moving = largest > 1e-9 && f_before - st.f > 1e-13;
  }
  return st;
}

OptimizationResult assemble(int electrons, double charge, const SymmetryBlock &block,
                            const Objective &obj, const RunState &st) {
  OptimizationResult r;
  r.electrons = electrons;
  r.nuclear_charge = charge;
  r.label = block.label;
  r.params = obj.params(st.x);
  r.active = {true, block.uses_2s(), block.uses_2p()};
  r.levels = solve_block(evaluate_block(block, compute_integrals(charge, r.params)));
  r.iterations = st.iterations;
  r.step_norm = st.last_step;
  r.gradient_norm = obj.gradient_norm(st.x);
  r.converged = !st.hit_cap && r.gradient_norm < 1e-6;
  return r;
}

} // namespace

OptimizationResult optimize_subspace(int electrons, double nuclear_charge,
                                     const SymmetryBlock &block,
                                     const OptimizerOptions &options) {
  if (!(nuclear_charge > 0.0) || !std::isfinite(nuclear_charge)) {
    throw std::domain_error("nuclear charge must be positive");
  }
  if (block.electrons != electrons) {
    throw std::invalid_argument("block " + block.label.ascii() + " belongs to " +
                                std::to_string(block.electrons) + " electrons, not " +
                                std::to_string(electrons));
  }
  Objective obj{&block, nuclear_charge, {0}};
  if (block.uses_2s()) {
    obj.active.push_back(1);
  }
  if (block.uses_2p()) {
    obj.active.push_back(2);
  }

  auto start_vector = [&](const DilationParams &p) {
    const std::array<double, 3> z{p.z1, p.z2, p.z3};
    std::vector<double> x;
    for (int i : obj.active) {
      x.push_back(z[static_cast<std::size_t>(i)]);
    }
    return x;
  };
  std::vector<std::vector<double>> starts;
  if (options.start) {
    starts.push_back(start_vector(*options.start));
  } else {
    const double Z = nuclear_charge;
    const double floor = 0.25 * Z;
    starts.push_back(start_vector(
        {std::max(Z - 0.3, floor), std::max(Z - 2.0, floor), std::max(Z - 2.5, floor)}));
    starts.push_back(start_vector(DilationParams::uniform(Z)));
  }

  std::optional<RunState> best;
  for (const auto &x0 : starts) {
    RunState st = minimize_from(obj, x0, options.max_iterations);
    if (!best || st.f < best->f) {
      best = std::move(st);
    }
  }

  OptimizationResult result = assemble(electrons, nuclear_charge, block, obj, *best);
  const std::string where = block.label.ascii() + " (N = " + std::to_string(electrons) +
                            ", Z = " + std::to_string(nuclear_charge) + ")";
  for (double v : best->x) {
    if (v <= lower_bound * 1.01 || v >= obj.upper_bound() * 0.99) {
      throw BoundaryError("optimizer reached the parameter boundary for " + where, result);
    }
  }
  if (best->hit_cap) {
    throw OptimizationError("iteration cap reached for " + where, result);
  }
  return result;
}

OptimizationResult optimize_small_atom(int electrons, double nuclear_charge) {
  if (electrons != 1 && electrons != 2) {
    throw std::domain_error("small-atom path covers 1 or 2 electrons");
  }
  if (!(nuclear_charge > 0.0) || !std::isfinite(nuclear_charge)) {
    throw std::domain_error("nuclear charge must be positive");
  }
  const double Z = nuclear_charge;
  const double z1 = electrons == 1 ? Z : Z - 5.0 / 16.0;
  const double energy = electrons == 1 ? -0.5 * Z * Z : -z1 * z1;
  if (!(z1 > lower_bound)) {
    throw BoundaryError("no bound 1s^2 minimum for Z = " + std::to_string(Z), {});
  }
  OptimizationResult r;
  r.electrons = electrons;
  r.nuclear_charge = Z;
  r.label = electrons == 1 ? SymmetryLabel{0, 1, 1} : SymmetryLabel{0, 0, 1};
  r.params = DilationParams::uniform(z1);
  r.active = {true, false, false};
  r.levels = {BlockEigenpair{energy, {1.0, 0.0}, std::nullopt, r.label, Root::lower}};
  r.converged = true;
  return r;
}

VirialSplit virial_split(const SymmetryBlock &block, double nuclear_charge,
                         const DilationParams &params, Root root) {
  const BlockMatrix h1 = evaluate_block(block, compute_integrals(nuclear_charge, params));
  const BlockMatrix h2 =
      evaluate_block(block, compute_integrals(nuclear_charge, params.scaled(2.0)));
  const auto pairs = solve_block(h1);
  const BlockEigenpair &pair = root == Root::lower ? pairs.front() : pairs.back();
  const double a = pair.coefficients[0], b = pair.coefficients[1];

  auto kinetic = [](double e1, double e2) { return 0.5 * (e2 - 2.0 * e1); };
  const double t11 = kinetic(h1.h11, h2.h11);
  const double t22 = kinetic(h1.h22, h2.h22);
  const double t12 = kinetic(h1.h12, h2.h12);
  const double t = a * a * t11 + b * b * t22 + 2.0 * a * b * t12;
  const double e = a * a * h1.h11 + b * b * h1.h22 + 2.0 * a * b * h1.h12;
  return {t, e - t};
}

} // namespace minci
