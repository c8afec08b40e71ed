#pragma once

#include <span>
#include <vector>

namespace specden {

/// Chebyshev nodes s_i = cos(pi*i/m) for i = 0..m (length m+1, descending from +1 to -1).
std::vector<double> chebyshev_nodes(int degree);

/// Synthesis map: given coefficients c of length m+1, returns the values
/// v_i = sum_{l=0}^{m} c_l * cos(pi*i*l/m) of the polynomial sum c_l T_l at
/// the Chebyshev nodes. O(m log m) via a type-I DCT.
std::vector<double> chebyshev_synthesis(std::span<const double> coeffs);

/// Analysis map (inverse of chebyshev_synthesis): given values at the
/// Chebyshev nodes, returns the unique coefficients c of degree m with
/// values_i = sum_l c_l * cos(pi*i*l/m). Throws if fewer than two values.
std::vector<double> dct_i(std::span<const double> values);

/// Coefficients nu of degree 2m with sum nu_l T_l = (sum mu_l T_l)^2.
/// Zero-pads to length 2m+1, synthesizes, squares pointwise, analyzes.
std::vector<double> square_coeffs(std::span<const double> mu);

/// Clenshaw evaluation of sum_l c_l T_l(s).
double evaluate_series(std::span<const double> coeffs, double s);

} // namespace specden
