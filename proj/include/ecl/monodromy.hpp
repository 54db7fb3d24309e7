#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "ecl/cmatrix.hpp"
#include "ecl/connection.hpp"

namespace ecl {

// Raised when an integration path gets closer to the singular locus than the
// configured clearance floor.
struct ClearanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix one-form sampled along paths: apply(z, dz) = sum_j A_j(z) dz_j.
// clearance(z) is the distance to the nearest singularity; transport refuses
// to step below the configured floor.
struct FormEvaluator {
  int dim = 0;
  int vars = 0;
  std::function<MatC(const std::vector<Cplx>&, const std::vector<Cplx>&)> apply;
  std::function<double(const std::vector<Cplx>&)> clearance;
};

FormEvaluator evaluator_from_kzb(const KzbForm& form);

// One variable, one dimension: weight * theta'/theta(z) dz. Its transport has
// closed-form values along lattice translations and small loops, which pins
// the integrator against exact answers.
FormEvaluator scalar_kernel_evaluator(Cplx weight, Cplx tau);

struct PathSegment {
  std::vector<Cplx> from, to;
};

struct Path {
  std::vector<PathSegment> segments;
};

// polyline through the given points
Path segment_path(const std::vector<std::vector<Cplx>>& points);

// closed axis-aligned rectangle in coordinate `coord`; the other coordinates
// stay fixed at `base`
Path rectangle_loop(const std::vector<Cplx>& base, int coord, Cplx center,
                    double half_w, double half_h);

Path reverse_path(const Path& p);

struct TransportOptions {
  double tol = 1e-10;         // local error per unit step
  double min_clearance = 1e-5;
  double h_init = 1e-2;
  double h_min = 1e-12;
  long long max_steps = 200000;
};

struct TransportResult {
  MatC matrix;
  long long steps = 0;
  double max_local_error = 0.0;
  std::uint64_t path_hash = 0;
};

// FNV-1a over the raw coordinate bytes of every segment endpoint
std::uint64_t hash_path(const Path& p);

// Solves M' = (sum_j A_j dz_j) M along the path with an adaptive embedded
// Runge-Kutta pair of orders 5 and 4, starting from the identity.
TransportResult transport(const FormEvaluator& form, const Path& path,
                          const TransportOptions& opt = {});

}  // namespace ecl
