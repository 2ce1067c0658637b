#include "rkhs/gram.hpp"

#include "rkhs/parallel.hpp"

namespace rkhs {

HermitianMatrix gram_matrix(const KernelSpec& kernel, std::span<const Complex> points) {
  kernel.validate();
  require_finite(points, "point");
  for (const auto& z : points)
    if (!kernel.in_domain(z)) fail(ErrorKind::domain, "point outside the Szego kernel domain");

  const std::size_t n = points.size();
  std::vector<Complex> upper(n * n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = i; j < n; ++j) upper[i * n + j] = kernel_eval(kernel, points[i], points[j]);
  });
  return HermitianMatrix::from_upper(n, [&](std::size_t i, std::size_t j) { return upper[i * n + j]; });
}

PsdCheck check_psd(const HermitianMatrix& gram, double tol) {
  const EigenRange r = eigen_range(gram);
  return {r, r.min >= -tol * std::max(r.max, 0.0)};
}

}  // namespace rkhs
