#include "pretzel/poly_core.hpp"

#include <stdexcept>
#include <string>

namespace pretzel {

namespace {

void check_pretzel_list(std::span<const long> p_list) {
  if (p_list.empty() || p_list.size() % 2 == 0)
    throw std::invalid_argument("pretzel parameter list must have odd length, got " + std::to_string(p_list.size()));
  for (long p : p_list)
    if (p < 1) throw std::invalid_argument("pretzel parameters must be positive, got " + std::to_string(p));
}

// Divide by the positive content only, so signs are preserved.
IntPoly drop_content(const IntPoly& f) {
  if (f.is_zero()) return f;
  mpz_class g = f.content();
  if (g == 1) return f;
  std::vector<mpz_class> c = f.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(c));
}

int sign_variations(const std::vector<IntPoly>& chain, const std::optional<mpq_class>& at, bool at_positive_end) {
  int count = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = at ? p.sign_at(*at) : p.sign_at_infinity(at_positive_end);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// Removes every root at the rational point a from f.
IntPoly remove_root_at(IntPoly f, const mpq_class& a) {
  const IntPoly linear(std::vector<mpz_class>{-a.get_num(), a.get_den()});
  while (!f.is_zero() && f.degree() > 0 && f.sign_at(a) == 0) {
    auto q = exact_divide(f, linear);
    if (!q) throw std::logic_error("rational root did not divide out");
    f = std::move(*q);
  }
  return f;
}

long mobius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

IntPoly bracket(long n) {
  if (n < 1) throw std::invalid_argument("bracket requires n >= 1, got " + std::to_string(n));
  return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(n), mpz_class(1)));
}

IntPoly pretzel_q(std::span<const long> p_list) {
  check_pretzel_list(p_list);
  const long k = static_cast<long>(p_list.size());
  std::vector<IntPoly> brackets;
  brackets.reserve(p_list.size());
  for (long p : p_list) brackets.push_back(bracket(p));

  IntPoly product = IntPoly::constant(1);
  for (const auto& b : brackets) product *= b;
  IntPoly result = product * IntPoly{-(k - 1), 1};
  for (std::size_t j = 0; j < brackets.size(); ++j) {
    IntPoly term = IntPoly::constant(1);
    for (std::size_t i = 0; i < brackets.size(); ++i)
      if (i != j) term *= brackets[i];
    result += term;
  }
  return result;
}

IntPoly alexander_minus2_pretzel(std::span<const long> p_list) {
  check_pretzel_list(p_list);
  if (p_list.front() != 2) throw std::invalid_argument("leading pretzel parameter must be 2");
  IntPoly d = pretzel_q(p_list).negate_variable().strip_x_power();
  if (d.coeff(0) < 0) d = -d;
  return d;
}

bool hyperbolicity_condition(std::span<const long> p_list) {
  check_pretzel_list(p_list);
  mpq_class sum = 0;
  for (long p : p_list) sum += mpq_class(1, p);
  return sum < mpq_class(static_cast<long>(p_list.size()) - 2);
}

bool is_reciprocal(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_reciprocal: zero polynomial");
  return f.reversed() == f;
}

bool simple_roots(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("simple_roots: zero polynomial");
  return gcd(f, f.derivative()).degree() <= 0;
}

std::vector<IntPoly> sturm_sequence(const IntPoly& f) {
  std::vector<IntPoly> chain;
  if (f.is_zero()) return chain;
  chain.push_back(f);
  IntPoly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(drop_content(d));
  while (true) {
    const IntPoly& a = chain[chain.size() - 2];
    const IntPoly& b = chain.back();
    IntPoly r = pseudo_divmod(a, b).second;
    if (r.is_zero()) break;
    // prem = lc^delta * rem; the next entry must be a positive multiple of -rem.
    const int delta = a.degree() - b.degree() + 1;
    const bool scale_negative = b.leading() < 0 && delta % 2 == 1;
    chain.push_back(drop_content(scale_negative ? r : -r));
  }
  return chain;
}

std::size_t count_real_roots(const IntPoly& f, const std::optional<mpq_class>& lo,
                             const std::optional<mpq_class>& hi) {
  if (f.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (lo && hi && *lo >= *hi) return 0;
  IntPoly g = squarefree_part(f);
  if (lo) g = remove_root_at(std::move(g), *lo);
  if (hi) g = remove_root_at(std::move(g), *hi);
  if (g.degree() <= 0) return 0;
  auto chain = sturm_sequence(g);
  int v_lo = sign_variations(chain, lo, false);
  int v_hi = sign_variations(chain, hi, true);
  return static_cast<std::size_t>(v_lo - v_hi);
}

IntPoly trace_polynomial(const IntPoly& f) {
  if (f.degree() % 2 != 0 || !is_reciprocal(f))
    throw std::invalid_argument("trace_polynomial needs an even-degree reciprocal polynomial");
  const std::size_t m = static_cast<std::size_t>(f.degree() / 2);
  // x^j + x^-j = D_j(y) with D_0 = 2, D_1 = y, D_{j+1} = y D_j - D_{j-1}.
  const IntPoly y{0, 1};
  IntPoly prev = IntPoly::constant(2);
  IntPoly cur = y;
  IntPoly g = IntPoly::constant(f.coeff(m));
  for (std::size_t j = 1; j <= m; ++j) {
    g += cur * f.coeff(m + j);
    IntPoly next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return g;
}

std::size_t count_unit_circle_roots(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("count_unit_circle_roots: zero polynomial");
  if (!is_reciprocal(f)) throw std::invalid_argument("count_unit_circle_roots: polynomial is not reciprocal");
  // x = +-1 sit where the x + 1/x substitution degenerates, so they are removed first.
  std::size_t count = 0;
  IntPoly g = f;
  if (g.eval(-1) == 0) {
    ++count;
    while (g.degree() > 0 && g.eval(-1) == 0) g = *exact_divide(g, IntPoly{1, 1});
  }
  if (g.eval(1) == 0) {
    ++count;
    while (g.degree() > 0 && g.eval(1) == 0) g = *exact_divide(g, IntPoly{-1, 1});
  }
  if (g.degree() >= 2) {
    IntPoly h = trace_polynomial(g);
    count += 2 * count_real_roots(h, mpq_class(-2), mpq_class(2));
  }
  return count;
}

long euler_phi(long n) {
  if (n < 1) throw std::invalid_argument("euler_phi requires n >= 1");
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly cyclotomic(long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic requires n >= 1");
  // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    long mu = mobius(n / d);
    if (mu == 1) num *= IntPoly::x_pow_minus_one(static_cast<std::size_t>(d));
    if (mu == -1) den *= IntPoly::x_pow_minus_one(static_cast<std::size_t>(d));
  }
  auto q = exact_divide(num, den);
  if (!q) throw std::logic_error("cyclotomic quotient is not exact");
  return *q;
}

CyclotomicSplit strip_cyclotomic(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("strip_cyclotomic: zero polynomial");
  CyclotomicSplit out;
  out.remainder = f;
  const long d = f.degree();
  const long bound = 2 * d * d + 6;
  for (long n = 1; n <= bound && out.remainder.degree() > 0; ++n) {
    if (euler_phi(n) > out.remainder.degree()) continue;
    IntPoly phi = cyclotomic(n);
    int mult = 0;
    while (out.remainder.degree() >= phi.degree()) {
      auto q = exact_divide(out.remainder, phi);
      if (!q) break;
      out.remainder = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.factors.push_back({n, mult});
  }
  return out;
}

bool RootProfile::is_salem(std::size_t degree) const {
  return all_simple && n_real_gt1 == 1 && n_real_in_01 == 1 && n_other == 0 && n_unit_circle >= 2 &&
         n_unit_circle + 2 == degree;
}

RootProfile root_profile(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("root_profile needs a nonconstant polynomial");
  if (!is_reciprocal(f)) throw std::invalid_argument("root_profile needs a reciprocal polynomial");
  RootProfile p;
  p.all_simple = simple_roots(f);
  p.n_real_gt1 = count_real_roots(f, mpq_class(1), std::nullopt);
  p.n_real_in_01 = count_real_roots(f, mpq_class(0), mpq_class(1));
  p.n_unit_circle = count_unit_circle_roots(f);
  const long rest = static_cast<long>(f.degree()) - static_cast<long>(p.n_unit_circle + p.n_real_gt1 + p.n_real_in_01);
  p.n_other = rest > 0 ? static_cast<std::size_t>(rest) : 0;
  return p;
}

RootProfile salem_profile(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("salem_profile needs a nonconstant polynomial");
  auto split = strip_cyclotomic(f);
  if (!split.factors.empty())
    throw std::invalid_argument("salem_profile: input still has the cyclotomic factor Phi_" +
                                std::to_string(split.factors.front().index));
  return root_profile(f);
}

nlohmann::json to_json(const RootProfile& p) {
  return {{"unit_circle", p.n_unit_circle},
          {"real_gt1", p.n_real_gt1},
          {"real_in_01", p.n_real_in_01},
          {"other", p.n_other},
          {"all_simple", p.all_simple}};
}

}  // namespace pretzel
