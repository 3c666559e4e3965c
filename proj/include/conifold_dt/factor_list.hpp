#pragma once

// MacMahon products whose arguments are arbitrary Laurent monomials in the
// curve variables Q_1..Q_r, as produced by changes of variables.

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "error.hpp"
#include "mmalgebra.hpp"
#include "strip.hpp"

namespace conifold_dt {

/// Q_1^{e_1} ... Q_r^{e_r}; the all-zero vector is the unit monomial.
struct LaurentMonomial {
  std::vector<int> exponents;

  LaurentMonomial() = default;
  explicit LaurentMonomial(std::size_t vars) : exponents(vars, 0) {}
  explicit LaurentMonomial(std::vector<int> e) : exponents(std::move(e)) {}

  std::size_t size() const noexcept { return exponents.size(); }

  bool is_unit() const noexcept {
    for (int e : exponents)
      if (e != 0) return false;
    return true;
  }

  /// Q_k, 1-based.
  static LaurentMonomial variable(std::size_t vars, int k) {
    LaurentMonomial out(vars);
    out.exponents.at(static_cast<std::size_t>(k - 1)) = 1;
    return out;
  }

  LaurentMonomial inverse() const {
    LaurentMonomial out = *this;
    for (int& e : out.exponents) e = -e;
    return out;
  }

  LaurentMonomial& operator*=(const LaurentMonomial& o) {
    if (o.size() != size())
      throw Error(ErrorKind::invalid_argument, "monomials over different variable counts");
    for (std::size_t k = 0; k < size(); ++k) exponents[k] += o.exponents[k];
    return *this;
  }

  LaurentMonomial pow(int k) const {
    LaurentMonomial out = *this;
    for (int& e : out.exponents) e *= k;
    return out;
  }

  friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) { return a *= b; }
  friend auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;
};

/// Q_ij = Q_i ... Q_j in a space of `vars` variables.
inline LaurentMonomial path_monomial(std::size_t vars, const EdgePath& p) {
  LaurentMonomial out(vars);
  for (int k = p.i; k <= p.j; ++k) out.exponents.at(static_cast<std::size_t>(k - 1)) = 1;
  return out;
}

/// prod_x M(x, q)^{e_x} * M(1, q)^{m1_power}, kept canonical: no zero
/// exponents and no unit monomial among the factor arguments.
class SignedFactorList {
 public:
  explicit SignedFactorList(std::size_t vars) : vars_(vars) {}

  std::size_t variable_count() const noexcept { return vars_; }
  const std::map<LaurentMonomial, BigInt>& factors() const noexcept { return factors_; }
  const Rational& m1_power() const noexcept { return m1_power_; }

  BigInt exponent(const LaurentMonomial& x) const {
    const auto it = factors_.find(x);
    return it == factors_.end() ? BigInt(0) : it->second;
  }

  void add(const LaurentMonomial& x, const BigInt& e) {
    if (x.size() != vars_)
      throw Error(ErrorKind::invalid_argument, "monomial has " + std::to_string(x.size()) +
                                                   " variables, expected " +
                                                   std::to_string(vars_));
    if (x.is_unit())
      throw Error(ErrorKind::invalid_argument, "unit monomial belongs in the M(1,q) power");
    if (e == 0) return;
    auto [it, inserted] = factors_.try_emplace(x, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
  }

  void set_m1_power(Rational r) {
    r.canonicalize();
    if (r.get_den() != 1 && r.get_den() != 2)
      throw Error(ErrorKind::invalid_argument, "M(1,q) power must be a multiple of 1/2");
    m1_power_ = std::move(r);
  }

  BigInt m1_power_times_2() const { return BigInt(m1_power_ * 2); }

  SignedFactorList& operator+=(const SignedFactorList& o) {
    if (o.vars_ != vars_)
      throw Error(ErrorKind::invalid_argument, "factor lists over different variable counts");
    for (const auto& [x, e] : o.factors_) add(x, e);
    set_m1_power(m1_power_ + o.m1_power_);
    return *this;
  }

  SignedFactorList scaled(const BigInt& k) const {
    SignedFactorList out(vars_);
    if (k == 0) return out;
    for (const auto& [x, e] : factors_) out.factors_.emplace(x, e * k);
    out.set_m1_power(m1_power_ * Rational(k));
    return out;
  }

  friend bool operator==(const SignedFactorList&, const SignedFactorList&) = default;

 private:
  std::size_t vars_;
  std::map<LaurentMonomial, BigInt> factors_;
  Rational m1_power_ = 0;
};

/// Rewrites an edge-path exponent map with arguments Q_ij = Q_i ... Q_j.
inline SignedFactorList to_factor_list(const ExponentMap& e) {
  const auto vars = static_cast<std::size_t>(e.diagram().interior_edges());
  SignedFactorList out(vars);
  for (const auto& [p, exp] : e.factors()) out.add(path_monomial(vars, p), exp);
  out.set_m1_power(e.m1_power());
  return out;
}

}  // namespace conifold_dt
