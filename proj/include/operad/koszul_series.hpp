#pragma once

// Truncated power series over the rationals and the generating-series test
// for Koszulity of binary quadratic regular operads.
//
// Convention: f_P(t) = sum_n (-1)^n dim P_n t^n. If P is Koszul then
// f_{P!}(f_P(t)) = t. This is only a necessary condition; the Koszul complex
// itself (with its differential) is not computed here.

#include <cstddef>
#include <string>
#include <vector>

#include "operad/rational.hpp"

namespace operad {

// Coefficients indexed by degree, truncated at `order()`; no constant term.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  PowerSeries(std::size_t order, std::vector<Rational> coefficients);

  static PowerSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t degree) const { return coeffs_.at(degree); }
  Rational& operator[](std::size_t degree) { return coeffs_.at(degree); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Rational> coeffs_;  // coeffs_[0] is always zero
};

// dims[k] is the dimension in arity k + 1.
struct DimSeries {
  std::vector<std::size_t> dims;
};

PowerSeries signed_series(const DimSeries& d);
PowerSeries compose(const PowerSeries& f, const PowerSeries& g, std::size_t order);
// Requires a coefficient of +1 or -1 at t.
PowerSeries compositional_inverse(const PowerSeries& f, std::size_t order);

// f_{dual}(f_p(t)) - t, truncated at `order`.
PowerSeries gk_defect(const DimSeries& p_dims, const DimSeries& dual_dims, std::size_t order);

struct DimPrediction {
  DimSeries series;
  // Arities whose dimension the self-dual equation leaves free (even arities
  // >= 2); filled by geometric extrapolation d_{n-1}^2 / d_{n-2}.
  std::vector<std::size_t> unconstrained_arities;
  // Set when a forced or extrapolated value is not a nonnegative integer.
  bool consistent = true;
  std::string note;
};

// Dimension series of a self-dual operad with dims (1, x2, ...) whose
// generating series is an involution up to `order`.
DimPrediction predicted_dims(std::size_t x2, std::size_t order);

std::string format_series(const PowerSeries& f);

}  // namespace operad
