#include "dysonlab/ratpoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace dysonlab::exact {

namespace {
std::vector<std::string>& registry() {
  static std::vector<std::string> names;
  return names;
}
std::unordered_map<std::string, int>& index() {
  static std::unordered_map<std::string, int> idx;
  return idx;
}
}  // namespace

int gen_id(const std::string& name) {
  auto& idx = index();
  auto it = idx.find(name);
  if (it != idx.end()) return it->second;
  int id = static_cast<int>(registry().size());
  registry().push_back(name);
  idx.emplace(name, id);
  return id;
}

const std::string& gen_name(int id) { return registry().at(static_cast<size_t>(id)); }

Monomial Monomial::of(int gen, int exp) {
  Monomial m;
  if (exp != 0) m.factors.emplace_back(gen, exp);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.factors.reserve(factors.size() + o.factors.size());
  size_t i = 0, j = 0;
  while (i < factors.size() || j < o.factors.size()) {
    if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first)) {
      r.factors.push_back(factors[i++]);
    } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
      r.factors.push_back(o.factors[j++]);
    } else {
      int e = factors[i].second + o.factors[j].second;
      if (e != 0) r.factors.emplace_back(factors[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

int Monomial::exponent_of(int gen) const {
  for (const auto& [g, e] : factors)
    if (g == gen) return e;
  return 0;
}

double Monomial::eval(const std::map<int, double>& vals) const {
  double r = 1.0;
  for (const auto& [g, e] : factors) {
    auto it = vals.find(g);
    if (it == vals.end()) throw std::runtime_error("Monomial::eval: no value for generator " + gen_name(g));
    r *= std::pow(it->second, e);
  }
  return r;
}

std::string Monomial::str() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << gen_name(g);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Poly Derivation::d(int gen, int var) const {
  return gen == var ? Poly::constant(1) : Poly::zero();
}

Poly DysonDerivation::d(int gen, int var) const {
  // c_i responds to t_l; everything else is an independent variable.
  const std::string& g = gen_name(gen);
  const std::string& v = gen_name(var);
  if (g.size() > 1 && g[0] == 'c' && v.size() > 1 && v[0] == 't') {
    int i = std::stoi(g.substr(1));
    int l = std::stoi(v.substr(1));
    if (l == i - 1) return Poly::gen(gen);
    if (l == i) return -Poly::gen(gen);
    return Poly::zero();
  }
  return gen == var ? Poly::constant(1) : Poly::zero();
}

Poly Poly::constant(const Rat& c) {
  Poly p;
  p.add_term(Monomial::one(), c);
  return p;
}

Poly Poly::constant(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return constant(r);
}

Poly Poly::gen(const std::string& name, int exp) { return gen(gen_id(name), exp); }

Poly Poly::gen(int id, int exp) {
  Poly p;
  p.add_term(Monomial::of(id, exp), Rat(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  return terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  if (c == 0) return Poly();
  Poly r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

Poly Poly::pow(int k) const {
  Poly r = Poly::constant(1);
  for (int i = 0; i < k; ++i) r = r * (*this);
  return r;
}

Poly Poly::derivative(int var, const Derivation& rules) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    for (size_t i = 0; i < m.factors.size(); ++i) {
      auto [g, e] = m.factors[i];
      Poly dg = rules.d(g, var);
      if (dg.is_zero()) continue;
      // d(g^e)/dv = e g^{e-1} dg; assemble the rest of the monomial.
      Monomial rest;
      rest.factors = m.factors;
      if (e == 1)
        rest.factors.erase(rest.factors.begin() + static_cast<long>(i));
      else
        rest.factors[i].second = e - 1;
      Poly part;
      part.add_term(rest, c * Rat(e));
      r += part * dg;
    }
  }
  return r;
}

Poly Poly::substituted(const std::map<int, Poly>& sub) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(c);
    for (const auto& [g, e] : m.factors) {
      auto it = sub.find(g);
      if (it == sub.end()) {
        term = term * Poly::gen(g, e);
      } else {
        if (e < 0) throw std::runtime_error("substituted: negative power of substituted generator");
        term = term * it->second.pow(e);
      }
    }
    r += term;
  }
  return r;
}

double Poly::eval(const std::map<int, double>& vals) const {
  double r = 0.0;
  for (const auto& [m, c] : terms_) r += c.get_d() * m.eval(vals);
  return r;
}

Poly Poly::truncated(int gen, int max_exp) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.exponent_of(gen) <= max_exp) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::coeff_of(int gen, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    if (m.exponent_of(gen) != k) continue;
    Monomial rest;
    for (const auto& f : m.factors)
      if (f.first != gen) rest.factors.push_back(f);
    r.add_term(rest, c);
  }
  return r;
}

int Poly::min_exponent(int gen) const {
  int mn = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent_of(gen);
    if (first || e < mn) mn = e;
    first = false;
  }
  return mn;
}

int Poly::max_exponent(int gen) const {
  int mx = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent_of(gen);
    if (first || e > mx) mx = e;
    first = false;
  }
  return mx;
}

Poly Poly::divided_by_monomial(const Monomial& mono, const Rat& c) const {
  if (c == 0) throw std::runtime_error("divided_by_monomial: zero divisor");
  Monomial inv;
  for (const auto& [g, e] : mono.factors) inv.factors.emplace_back(g, -e);
  Poly r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m * inv, cc / c);
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    first = false;
    Rat a = abs(c);
    bool unit = (a == 1) && !m.factors.empty();
    if (!unit) os << a.get_str();
    if (!m.factors.empty()) {
      if (!unit) os << "*";
      os << m.str();
    }
  }
  return os.str();
}

Poly exp_series(const Poly& x, int order) {
  Poly r = Poly::constant(1);
  Poly xp = Poly::constant(1);
  Rat fact(1);
  for (int k = 1; k <= order; ++k) {
    xp = xp * x;
    fact *= k;
    r += xp.scaled(Rat(1) / fact);
  }
  return r;
}

}  // namespace dysonlab::exact
