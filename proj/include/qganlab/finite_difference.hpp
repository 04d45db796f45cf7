#pragma once

#include <functional>
#include <vector>

namespace qgan {

/** Central-difference gradient (f(theta + h e_k) - f(theta - h e_k)) / (2h),
 *  coordinates probed in index order. Throws NumericError naming the
 *  coordinate if a probe is non-finite. */
std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                const std::vector<double>& theta, double step);

}  // namespace qgan
