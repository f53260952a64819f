#pragma once

#include <cstddef>

#include "toda/series.hpp"

namespace toda {

/// c_{2k} = 1 / (2^{2k} (2k+1)!), the coefficients of sinh(t/2)/(t/2).
Rational sinh_coefficient(unsigned k);

/// S(t) = sinh(t/2)/(t/2) = sum c_{2k} t^{2k}, truncated at t^order.
Series sinh_normalized(std::size_t order);

/// Y_d = S^{2d-1} / (d!)^2 for d >= 1.
Series one_point_Y_closed(unsigned d, std::size_t order);

/// X_d = 2 S^{2d-1} (log S - H_d) / (d!)^2 for d >= 1, with H_d the harmonic number.
Series one_point_X_closed(unsigned d, std::size_t order);

/// Degree-0 seed Y_0 = S^{-1}.
Series degree0_Y_series(std::size_t order);

/// Degree-0 seed X_0 = 2 S^{-1} log S.
Series degree0_X_series(std::size_t order);

}  // namespace toda
