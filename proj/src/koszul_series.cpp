#include "operad/koszul_series.hpp"

#include <stdexcept>

namespace operad {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coefficients) : coeffs_(order + 1, Rational(0)) {
  if (!coefficients.empty() && coefficients[0] != 0) {
    throw std::invalid_argument("power series here have no constant term");
  }
  for (std::size_t k = 1; k < coefficients.size() && k <= order; ++k) coeffs_[k] = coefficients[k];
}

PowerSeries PowerSeries::variable(std::size_t order) {
  PowerSeries t(order);
  if (order >= 1) t[1] = 1;
  return t;
}

bool PowerSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 1; k <= out.order(); ++k) out[k] = a[k] + b[k];
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 1; k <= out.order(); ++k) out[k] = a[k] - b[k];
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  PowerSeries out(std::min(a.order(), b.order()));
  const std::size_t n = out.order();
  for (std::size_t i = 1; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 1; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries signed_series(const DimSeries& d) {
  if (d.dims.empty() || d.dims[0] != 1) throw std::invalid_argument("dimension series must start with dim P_1 = 1");
  PowerSeries f(d.dims.size());
  for (std::size_t k = 0; k < d.dims.size(); ++k) {
    const std::size_t n = k + 1;
    const Rational v(static_cast<long long>(d.dims[k]));
    f[n] = n % 2 == 0 ? v : Rational(-v);
  }
  return f;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g, std::size_t order) {
  if (g.coefficients()[0] != 0) throw std::invalid_argument("compose: inner series has a constant term");
  auto truncate = [order](const PowerSeries& s) {
    PowerSeries out(order);
    for (std::size_t k = 1; k <= std::min(order, s.order()); ++k) out[k] = s[k];
    return out;
  };
  const PowerSeries inner = truncate(g);
  PowerSeries result(order);
  PowerSeries power = inner;  // g^m
  for (std::size_t m = 1; m <= std::min(order, f.order()); ++m) {
    if (f[m] != 0) {
      for (std::size_t k = m; k <= order; ++k) result[k] += f[m] * power[k];
    }
    if (m < order) power = power * inner;
  }
  return result;
}

PowerSeries compositional_inverse(const PowerSeries& f, std::size_t order) {
  if (f.order() < 1 || (f[1] != 1 && f[1] != -1)) {
    throw std::invalid_argument("compositional_inverse: linear coefficient must be +1 or -1");
  }
  const Rational lead = f[1];
  PowerSeries inv(order);
  if (order >= 1) inv[1] = lead;  // 1 / lead
  for (std::size_t k = 2; k <= order; ++k) {
    // f(inv(t)) at degree k is lead * inv_k + (terms in inv_1..inv_{k-1}).
    const PowerSeries partial = compose(f, inv, k);
    inv[k] = -partial[k] * lead;
  }
  return inv;
}

PowerSeries gk_defect(const DimSeries& p_dims, const DimSeries& dual_dims, std::size_t order) {
  if (p_dims.dims.size() < order || dual_dims.dims.size() < order) {
    throw std::invalid_argument("gk_defect: dimension series shorter than the requested order");
  }
  const PowerSeries fp = signed_series(p_dims);
  const PowerSeries fd = signed_series(dual_dims);
  return compose(fd, fp, order) - PowerSeries::variable(order);
}

DimPrediction predicted_dims(std::size_t x2, std::size_t order) {
  if (x2 < 1) throw std::invalid_argument("predicted_dims: need at least one binary operation");
  DimPrediction out;
  auto& dims = out.series.dims;
  dims.push_back(1);
  if (order >= 2) dims.push_back(x2);
  if (order >= 2) out.unconstrained_arities.push_back(2);

  const auto as_count = [&](const Rational& v, std::size_t n) -> std::size_t {
    if (v < 0 || boost::multiprecision::denominator(v) != 1) {
      out.consistent = false;
      out.note += "arity " + std::to_string(n) + " forced to " + to_string(v) + "; ";
      return 0;
    }
    return boost::multiprecision::numerator(v).convert_to<std::size_t>();
  };

  for (std::size_t n = 3; n <= order; ++n) {
    PowerSeries f = signed_series(out.series);
    PowerSeries padded(n);
    for (std::size_t k = 1; k < n; ++k) padded[k] = f[k];
    // With f_n = 0, f(f(t)) at degree n equals c; the full coefficient is
    // c + (f_1 + f_1^n) f_n = c + ((-1) + (-1)^n) f_n.
    const Rational c = compose(padded, padded, n)[n];
    if (n % 2 == 1) {
      const Rational fn = c / 2;
      dims.push_back(as_count(-fn, n));
    } else {
      if (c != 0) {
        out.consistent = false;
        out.note += "degree " + std::to_string(n) + " obstruction " + to_string(c) + "; ";
      }
      out.unconstrained_arities.push_back(n);
      const Rational prev(static_cast<long long>(dims[n - 2]));
      const Rational prev2(static_cast<long long>(dims[n - 3]));
      if (prev2 == 0) {
        out.consistent = false;
        out.note += "cannot extrapolate arity " + std::to_string(n) + "; ";
        dims.push_back(0);
      } else {
        dims.push_back(as_count(prev * prev / prev2, n));
      }
    }
  }
  return out;
}

std::string format_series(const PowerSeries& f) {
  std::string out;
  for (std::size_t k = 1; k <= f.order(); ++k) {
    if (f[k] == 0) continue;
    const bool negative = f[k] < 0;
    const Rational mag = negative ? Rational(-f[k]) : f[k];
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1) out += to_string(mag) + "*";
    out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(t^" + std::to_string(f.order() + 1) + ")";
}

}  // namespace operad
