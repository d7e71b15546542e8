#include "funnel/rng.hpp"

#include <cmath>

namespace funnel {

Vec sample_normal(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> n01(0.0, 1.0);
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = n01(rng);
  return v;
}

Vec sample_unit_sphere(std::mt19937_64& rng, int dim) {
  Vec v = sample_normal(rng, dim);
  double norm = v.norm();
  while (norm < 1e-12) {
    v = sample_normal(rng, dim);
    norm = v.norm();
  }
  return v / norm;
}

Vec sample_unit_ball(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  Vec dir = sample_unit_sphere(rng, dim);
  return dir * std::pow(u01(rng), 1.0 / dim);
}

}  // namespace funnel
