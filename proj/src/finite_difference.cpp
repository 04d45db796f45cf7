#include "qganlab/finite_difference.hpp"

#include <cmath>
#include <string>

#include "qganlab/errors.hpp"

namespace qgan {

std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                const std::vector<double>& theta, double step) {
  if (!(step > 0.0)) throw SpecError("fd_gradient step must be positive");
  std::vector<double> grad(theta.size());
  std::vector<double> probe = theta;
  for (std::size_t k = 0; k < theta.size(); ++k) {
    probe[k] = theta[k] + step;
    const double plus = f(probe);
    probe[k] = theta[k] - step;
    const double minus = f(probe);
    probe[k] = theta[k];
    if (!std::isfinite(plus) || !std::isfinite(minus)) {
      throw NumericError("fd_gradient: non-finite objective at coordinate " + std::to_string(k));
    }
    grad[k] = (plus - minus) / (2.0 * step);
  }
  return grad;
}

}  // namespace qgan
