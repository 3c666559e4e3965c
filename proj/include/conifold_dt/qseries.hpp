#pragma once

// Truncated power series in q whose coefficients are sparse Laurent
// polynomials in Q_1..Q_r with big-integer coefficients. Everything is
// exact; this is the numeric oracle for the product identities.

#include <cstddef>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "error.hpp"
#include "factor_list.hpp"

namespace conifold_dt {

using LaurentPolynomial = std::map<LaurentMonomial, BigInt>;

inline constexpr int default_truncation_order = 6;

class QSeries {
 public:
  /// The zero series O(q^{K+1}).
  QSeries(int order, std::size_t vars) : order_(order), vars_(vars) {
    if (order < 0) throw Error(ErrorKind::invalid_argument, "truncation order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  static QSeries one(int order, std::size_t vars) {
    QSeries s(order, vars);
    s.coeffs_[0].emplace(LaurentMonomial(vars), 1);
    return s;
  }

  int order() const noexcept { return order_; }
  std::size_t variable_count() const noexcept { return vars_; }

  const LaurentPolynomial& coefficient(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  LaurentPolynomial& coefficient(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  /// Adds c * x * q^k; terms beyond the truncation order are dropped.
  void add_term(int k, const LaurentMonomial& x, const BigInt& c) {
    if (x.size() != vars_) throw Error(ErrorKind::invalid_argument, "monomial variable count");
    if (k < 0) throw Error(ErrorKind::invalid_argument, "negative q power");
    if (k > order_ || c == 0) return;
    accumulate(coeffs_[static_cast<std::size_t>(k)], x, c);
  }

  bool has_unit_constant_term() const {
    const auto& c0 = coeffs_[0];
    return c0.size() == 1 && c0.begin()->first.is_unit() && c0.begin()->second == 1;
  }

  friend bool operator==(const QSeries&, const QSeries&) = default;

  static void accumulate(LaurentPolynomial& poly, const LaurentMonomial& x, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = poly.try_emplace(x, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) poly.erase(it);
    }
  }

 private:
  int order_;
  std::size_t vars_;
  std::vector<LaurentPolynomial> coeffs_;

};

namespace detail {

inline void require_compatible(const QSeries& a, const QSeries& b) {
  if (a.order() != b.order() || a.variable_count() != b.variable_count())
    throw Error(ErrorKind::order_mismatch,
                "series differ in truncation order or variable count (" +
                    std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
}

inline LaurentPolynomial poly_product(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [xa, ca] : a)
    for (const auto& [xb, cb] : b) QSeries::accumulate(out, xa * xb, ca * cb);
  return out;
}

}  // namespace detail

/// Cauchy product truncated at the common order.
inline QSeries series_multiply(const QSeries& a, const QSeries& b) {
  detail::require_compatible(a, b);
  QSeries out(a.order(), a.variable_count());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.coefficient(i).empty()) continue;
    for (int j = 0; i + j <= a.order(); ++j) {
      if (b.coefficient(j).empty()) continue;
      auto& dst = out.coefficient(i + j);
      for (const auto& [xa, ca] : a.coefficient(i))
        for (const auto& [xb, cb] : b.coefficient(j)) QSeries::accumulate(dst, xa * xb, ca * cb);
    }
  }
  return out;
}

/// s * (1 - x q^step)^{-times}, applied as `times` in-place recurrences
/// b_t = a_t + x b_{t-step}.
inline QSeries multiply_by_geometric(QSeries s, const LaurentMonomial& x, int step, int times) {
  for (int rep = 0; rep < times; ++rep)
    for (int t = step; t <= s.order(); ++t)
      for (const auto& [y, c] : s.coefficient(t - step))
        QSeries::accumulate(s.coefficient(t), x * y, c);
  return s;
}

/// s * (1 - x q^step)^{times}.
inline QSeries multiply_by_binomial(QSeries s, const LaurentMonomial& x, int step, int times) {
  for (int rep = 0; rep < times; ++rep)
    for (int t = s.order(); t >= step; --t)
      for (const auto& [y, c] : s.coefficient(t - step))
        QSeries::accumulate(s.coefficient(t), x * y, -c);
  return s;
}

/// M(x, q) = prod_{k>=1} (1 - x q^k)^{-k}, truncated at q^K. Pass the unit
/// monomial for M(1, q).
inline QSeries macmahon_series(const LaurentMonomial& x, int order) {
  QSeries s = QSeries::one(order, x.size());
  for (int k = 1; k <= order; ++k) s = multiply_by_geometric(std::move(s), x, k, k);
  return s;
}

/// 1/a for a with constant term 1, by solving b_0 = 1,
/// b_t = -sum_{s=1..t} a_s b_{t-s}.
inline QSeries series_inverse(const QSeries& a) {
  if (!a.has_unit_constant_term())
    throw Error(ErrorKind::non_unit_constant_term, "series inverse needs constant term 1");
  QSeries b = QSeries::one(a.order(), a.variable_count());
  for (int t = 1; t <= a.order(); ++t) {
    LaurentPolynomial acc;
    for (int s = 1; s <= t; ++s)
      for (const auto& [x, c] : detail::poly_product(a.coefficient(s), b.coefficient(t - s)))
        QSeries::accumulate(acc, x, -c);
    b.coefficient(t) = std::move(acc);
  }
  return b;
}

/// a^e by binary exponentiation; negative powers go through the inverse.
inline QSeries series_power(const QSeries& a, const BigInt& e) {
  if (!a.has_unit_constant_term())
    throw Error(ErrorKind::non_unit_constant_term, "series power needs constant term 1");
  QSeries base = e < 0 ? series_inverse(a) : a;
  BigInt k = abs(e);
  QSeries result = QSeries::one(a.order(), a.variable_count());
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = series_multiply(result, base);
    k >>= 1;
    if (k > 0) base = series_multiply(base, base);
  }
  return result;
}

inline QSeries series_power(const QSeries& a, long e) { return series_power(a, BigInt(e)); }

/// prod_x M(x, q)^{e_x} * M(1, q)^{m1_power} truncated at q^K.
inline QSeries evaluate_factor_list(const SignedFactorList& f, int order) {
  if (f.m1_power().get_den() != 1)
    throw Error(ErrorKind::half_integer_m1,
                "M(1,q) power " + f.m1_power().get_str() +
                    " is not integral; evaluate the squared identity instead");
  const std::size_t vars = f.variable_count();
  QSeries out = QSeries::one(order, vars);
  if (f.m1_power() != 0)
    out = series_multiply(out,
                          series_power(macmahon_series(LaurentMonomial(vars), order),
                                       BigInt(f.m1_power().get_num())));
  for (const auto& [x, e] : f.factors())
    out = series_multiply(out, series_power(macmahon_series(x, order), e));
  return out;
}

inline QSeries evaluate_exponent_map(const ExponentMap& e, int order) {
  return evaluate_factor_list(to_factor_list(e), order);
}

inline QSeries evaluate_exponent_map(const SignedFactorList& f, int order) {
  return evaluate_factor_list(f, order);
}

namespace detail {

inline void write_monomial(std::ostream& os, const LaurentMonomial& x) {
  bool first = true;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const int e = x.exponents[k];
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'Q' << (k + 1);
    if (e != 1) os << '^' << e;
  }
}

}  // namespace detail

/// Terms "c * Q1^a1*Q2^a2 * q^k" joined by " + ", ordered by (k, monomial).
/// The monomial part is omitted for the unit monomial and exponents equal
/// to 1 are not written.
inline std::string to_string(const QSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    for (const auto& [x, c] : s.coefficient(k)) {
      if (!first) os << " + ";
      first = false;
      os << c.get_str() << " * ";
      if (!x.is_unit()) {
        detail::write_monomial(os, x);
        os << " * ";
      }
      os << "q^" << k;
    }
  }
  if (first) os << '0';
  os << " + O(q^" << (s.order() + 1) << ')';
  return os.str();
}

}  // namespace conifold_dt
