#include "ecl/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <memory>

#include "ecl/elliptic.hpp"

namespace ecl {

FormEvaluator evaluator_from_kzb(const KzbForm& form) {
  auto f = std::make_shared<KzbForm>(form);
  FormEvaluator ev;
  ev.dim = f->dim();
  ev.vars = f->rank();
  ev.apply = [f](const std::vector<Cplx>& z, const std::vector<Cplx>& dz) {
    auto comps = f->components(z);
    MatC out(f->dim());
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (dz[j] != 0.0) matc_add_scaled(out, comps[j], dz[j]);
    return out;
  };
  ev.clearance = [f](const std::vector<Cplx>& z) { return f->clearance(z); };
  return ev;
}

FormEvaluator scalar_kernel_evaluator(Cplx weight, Cplx tau) {
  auto eng = std::make_shared<ThetaEngine>(tau);
  FormEvaluator ev;
  ev.dim = 1;
  ev.vars = 1;
  ev.apply = [eng, weight](const std::vector<Cplx>& z,
                           const std::vector<Cplx>& dz) {
    MatC out(1);
    out.at(0, 0) = weight * eng->theta_logderiv(z[0]) * dz[0];
    return out;
  };
  ev.clearance = [eng](const std::vector<Cplx>& z) {
    return eng->lattice_distance(z[0]);
  };
  return ev;
}

Path segment_path(const std::vector<std::vector<Cplx>>& points) {
  Path p;
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    p.segments.push_back({points[i], points[i + 1]});
  return p;
}

Path rectangle_loop(const std::vector<Cplx>& base, int coord, Cplx center,
                    double half_w, double half_h) {
  std::vector<Cplx> offs = {
      center + Cplx(-half_w, -half_h), center + Cplx(half_w, -half_h),
      center + Cplx(half_w, half_h), center + Cplx(-half_w, half_h)};
  std::vector<std::vector<Cplx>> pts;
  for (int k = 0; k <= 4; ++k) {
    auto z = base;
    z[static_cast<std::size_t>(coord)] = offs[static_cast<std::size_t>(k % 4)];
    pts.push_back(std::move(z));
  }
  return segment_path(pts);
}

Path reverse_path(const Path& p) {
  Path out;
  for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it)
    out.segments.push_back({it->to, it->from});
  return out;
}

std::uint64_t hash_path(const Path& p) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&h](double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, sizeof bits);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  for (const auto& s : p.segments) {
    for (const auto& c : s.from) {
      feed(c.real());
      feed(c.imag());
    }
    for (const auto& c : s.to) {
      feed(c.real());
      feed(c.imag());
    }
  }
  return h;
}

namespace {

// Dormand-Prince 5(4) tableau
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,    0.0,        500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,    0.0,          7571.0 / 16695,
                           393.0 / 640,       -92097.0 / 339200,
                           187.0 / 2100,      1.0 / 40};

}  // namespace

TransportResult transport(const FormEvaluator& form, const Path& path,
                          const TransportOptions& opt) {
  TransportResult res;
  res.matrix = matc_identity(form.dim);
  res.path_hash = hash_path(path);

  for (const auto& seg : path.segments) {
    const std::size_t nv = seg.from.size();
    std::vector<Cplx> dz(nv);
    for (std::size_t j = 0; j < nv; ++j) dz[j] = seg.to[j] - seg.from[j];
    auto at = [&](double t) {
      std::vector<Cplx> z(nv);
      for (std::size_t j = 0; j < nv; ++j) z[j] = seg.from[j] + t * dz[j];
      return z;
    };
    auto guard = [&](double t) {
      double c = form.clearance(at(t));
      if (c < opt.min_clearance)
        throw ClearanceError("path clearance " + std::to_string(c) +
                             " below floor " + std::to_string(opt.min_clearance));
    };

    guard(0.0);
    double t = 0.0, h = opt.h_init;
    // the form is linear in the state, so each stage slope is F(t_i) * Y_i;
    // stages 6 and 7 share the endpoint evaluation, which the next step reuses
    MatC f_start = form.apply(at(0.0), dz);
    while (1.0 - t > 1e-15) {
      double hc = std::min(h, 1.0 - t);
      if (hc < opt.h_min) throw std::runtime_error("transport: step underflow");

      MatC k[7];
      MatC f_end;
      k[0] = matc_mul(f_start, res.matrix);
      for (int s = 1; s < 7; ++s) {
        MatC y = res.matrix;
        for (int j = 0; j < s; ++j)
          if (kA[s][j] != 0.0) matc_add_scaled(y, k[j], hc * kA[s][j]);
        MatC fs;
        if (s == 5) {
          f_end = form.apply(at(t + hc), dz);
          fs = f_end;
        } else if (s == 6) {
          fs = f_end;
        } else {
          fs = form.apply(at(t + kC[s] * hc), dz);
        }
        k[s] = matc_mul(fs, y);
      }

      MatC err_mat(form.dim);
      for (int s = 0; s < 7; ++s) {
        double d = kB5[s] - kB4[s];
        if (d != 0.0) matc_add_scaled(err_mat, k[s], hc * d);
      }
      double err = matc_max_norm(err_mat);

      if (err <= opt.tol * hc) {
        for (int s = 0; s < 7; ++s)
          if (kB5[s] != 0.0) matc_add_scaled(res.matrix, k[s], hc * kB5[s]);
        t += hc;
        ++res.steps;
        if (res.steps > opt.max_steps)
          throw std::runtime_error("transport: step budget exhausted");
        guard(t);
        res.max_local_error = std::max(res.max_local_error, err);
        f_start = f_end;
        double fac = err == 0.0
                         ? 5.0
                         : std::clamp(0.9 * std::pow(opt.tol * hc / err, 0.2),
                                      0.2, 5.0);
        h = hc * fac;
      } else {
        double fac =
            std::clamp(0.9 * std::pow(opt.tol * hc / err, 0.2), 0.2, 5.0);
        h = hc * fac;
      }
    }
  }
  return res;
}

}  // namespace ecl
