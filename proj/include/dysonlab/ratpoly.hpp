#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dysonlab::exact {

using Rat = mpq_class;

// Global generator registry. Generators are identified by name; ids are
// stable for the lifetime of the process.
int gen_id(const std::string& name);
const std::string& gen_name(int id);

// Power product of generators, sorted by generator id. Exponents may be
// negative (Laurent monomials, used for powers of 1/n).
struct Monomial {
  std::vector<std::pair<int, int>> factors;  // (gen, exp), exp != 0

  static Monomial one() { return {}; }
  static Monomial of(int gen, int exp = 1);

  Monomial operator*(const Monomial& o) const;
  int exponent_of(int gen) const;
  bool operator<(const Monomial& o) const { return factors < o.factors; }
  bool operator==(const Monomial& o) const { return factors == o.factors; }
  double eval(const std::map<int, double>& vals) const;
  std::string str() const;
};

class Poly;

// Derivative of generator g with respect to direction v. The default rule
// treats generators as independent variables. The Dyson-side rule encodes
// c_i = exp(-(t_i - t_{i-1})), so d c_i / d t_l = (delta_{l,i-1} - delta_{l,i}) c_i.
struct Derivation {
  virtual ~Derivation() = default;
  virtual Poly d(int gen, int var) const;
};

struct DysonDerivation : Derivation {
  int m;
  explicit DysonDerivation(int m_) : m(m_) {}
  Poly d(int gen, int var) const override;
};

// Sparse multivariate polynomial with exact rational coefficients,
// canonical form (sorted monomials, no zero terms).
class Poly {
 public:
  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Rat& c);
  static Poly constant(long num, long den = 1);
  static Poly gen(const std::string& name, int exp = 1);
  static Poly gen(int id, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // valid when is_constant()
  size_t n_terms() const { return terms_.size(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly scaled(const Rat& c) const;
  Poly pow(int k) const;  // k >= 0

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // d/d var with the given derivation rule for generators.
  Poly derivative(int var, const Derivation& rules) const;

  // Substitute generators by polynomials (missing ids are untouched).
  Poly substituted(const std::map<int, Poly>& sub) const;

  double eval(const std::map<int, double>& vals) const;

  // Drop monomials whose exponent of `gen` exceeds `max_exp`.
  Poly truncated(int gen, int max_exp) const;
  // Coefficient of gen^k, as a polynomial in the remaining generators.
  Poly coeff_of(int gen, int k) const;
  // Smallest/largest exponent of gen over all monomials (0 if absent).
  int min_exponent(int gen) const;
  int max_exponent(int gen) const;

  // Exact division by a single monomial times rational; throws if inexact.
  Poly divided_by_monomial(const Monomial& mono, const Rat& c) const;

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Rat& c);
  std::string str() const;

 private:
  std::map<Monomial, Rat> terms_;
};

// Truncated exponential series: sum_{k<=order} x^k / k!.
Poly exp_series(const Poly& x, int order);

}  // namespace dysonlab::exact
