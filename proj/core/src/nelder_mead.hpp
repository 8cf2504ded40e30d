#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace hypertile::detail {

struct NmResult {
  std::vector<double> x;
  double f = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

// Plain Nelder-Mead downhill simplex (reflection 1, expansion 2,
// contraction 1/2, shrink 1/2). Terminates when the simplex function
// spread falls below f_tol or the eval budget is exhausted.
inline NmResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                            std::vector<double> x0, double step0, double f_tol,
                            std::int64_t max_evals) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> xs(dim + 1, x0);
  std::vector<double> fs(dim + 1);
  std::int64_t evals = 0;
  for (std::size_t i = 1; i <= dim; ++i) xs[i][i - 1] += step0;
  for (std::size_t i = 0; i <= dim; ++i) {
    fs[i] = f(xs[i]);
    ++evals;
  }
  std::vector<std::size_t> order(dim + 1);
  bool converged = false;

  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    const std::size_t best = order[0], worst = order[dim], second_worst = order[dim - 1];
    if (fs[worst] - fs[best] < f_tol * (1.0 + std::abs(fs[best]))) {
      converged = true;
      break;
    }
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += xs[i][d];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    const auto blend = [&](double t) {
      std::vector<double> p(dim);
      for (std::size_t d = 0; d < dim; ++d) p[d] = centroid[d] + t * (centroid[d] - xs[worst][d]);
      return p;
    };
    std::vector<double> xr = blend(1.0);
    const double fr = f(xr);
    ++evals;
    if (fr < fs[order[0]]) {
      std::vector<double> xe = blend(2.0);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        xs[worst] = std::move(xe);
        fs[worst] = fe;
      } else {
        xs[worst] = std::move(xr);
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[second_worst]) {
      xs[worst] = std::move(xr);
      fs[worst] = fr;
      continue;
    }
    const bool outside = fr < fs[worst];
    std::vector<double> xc = blend(outside ? 0.5 : -0.5);
    const double fc = f(xc);
    ++evals;
    if (fc < std::min(fr, fs[worst])) {
      xs[worst] = std::move(xc);
      fs[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t d = 0; d < dim; ++d) xs[i][d] = xs[best][d] + 0.5 * (xs[i][d] - xs[best][d]);
      fs[i] = f(xs[i]);
      ++evals;
    }
  }

  const std::size_t best = static_cast<std::size_t>(
      std::min_element(fs.begin(), fs.end()) - fs.begin());
  return {xs[best], fs[best], evals, converged};
}

}  // namespace hypertile::detail
