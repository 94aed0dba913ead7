#include "pretzel/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pretzel {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t n) {
  std::vector<mpz_class> v(n + 1);
  v[0] = -1;
  v[n] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpz_class(0); }

const mpz_class& IntPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPoly::sign_at(const mpq_class& x) const {
  // q^n f(p/q) = sum c_i p^i q^(n-i), and q > 0 for a canonical mpq.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

int IntPoly::sign_at_infinity(bool positive) const {
  if (is_zero()) return 0;
  int s = sgn(leading());
  if (!positive && degree() % 2 == 1) s = -s;
  return s;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::negate_variable() const {
  IntPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

IntPoly IntPoly::reversed() const {
  std::vector<mpz_class> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

std::size_t IntPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return 0;
}

IntPoly IntPoly::strip_x_power() const {
  std::size_t v = valuation();
  return IntPoly(std::vector<mpz_class>(coeffs_.begin() + static_cast<std::ptrdiff_t>(v), coeffs_.end()));
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  IntPoly r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> pseudo_divmod(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("pseudo division by the zero polynomial");
  if (f.degree() < g.degree()) return {IntPoly{}, f};
  const mpz_class& lc = g.leading();
  const int dg = g.degree();
  std::vector<mpz_class> rem = f.coeffs();
  std::vector<mpz_class> quo(static_cast<std::size_t>(f.degree() - dg + 1));
  for (int top = f.degree(); top >= dg; --top) {
    // rem <- lc * rem - rem[top] x^(top-dg) g, q <- lc * q + rem[top] x^(top-dg)
    mpz_class t = rem[static_cast<std::size_t>(top)];
    for (auto& q : quo) q *= lc;
    quo[static_cast<std::size_t>(top - dg)] += t;
    for (auto& r : rem) r *= lc;
    for (int i = 0; i <= dg; ++i) rem[static_cast<std::size_t>(top - dg + i)] -= t * g.coeffs()[static_cast<std::size_t>(i)];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  const mpz_class& lc = g.leading();
  const int dg = g.degree();
  std::vector<mpz_class> rem = f.coeffs();
  std::vector<mpz_class> quo(static_cast<std::size_t>(f.degree() - dg + 1));
  for (int top = f.degree(); top >= dg; --top) {
    mpz_class& head = rem[static_cast<std::size_t>(top)];
    if (head == 0) continue;
    if (!mpz_divisible_p(head.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    mpz_class t;
    mpz_divexact(t.get_mpz_t(), head.get_mpz_t(), lc.get_mpz_t());
    quo[static_cast<std::size_t>(top - dg)] = t;
    for (int i = 0; i <= dg; ++i) rem[static_cast<std::size_t>(top - dg + i)] -= t * g.coeffs()[static_cast<std::size_t>(i)];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  IntPoly a = f.primitive_part();
  IntPoly b = g.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_divmod(a, b).second.primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.degree() <= 0) return f.primitive_part();
  IntPoly g = gcd(f, f.derivative());
  auto q = exact_divide(f.primitive_part(), g);
  if (!q) throw std::logic_error("gcd does not divide its argument");
  return q->primitive_part();
}

nlohmann::json to_json(const IntPoly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : f.coeffs()) arr.push_back(c.get_str());
  return arr;
}

IntPoly int_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<mpz_class> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("polynomial coefficients must be decimal strings");
    mpz_class c;
    if (c.set_str(e.get<std::string>(), 10) != 0) throw std::invalid_argument("bad decimal coefficient: " + e.get<std::string>());
    v.push_back(std::move(c));
  }
  return IntPoly(std::move(v));
}

}  // namespace pretzel
