#include "piforge/symbolic.hpp"

#include <mutex>
#include <sstream>

#include "piforge/errors.hpp"

namespace piforge {

// -- QPoly -----------------------------------------------------------------

QPoly::QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

QPoly QPoly::constant(const mpq_class& c) { return QPoly({c}); }

QPoly QPoly::monomial(const mpq_class& c, int n) {
  std::vector<mpq_class> v(static_cast<std::size_t>(n) + 1);
  v.back() = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

mpq_class QPoly::coeff(int n) const {
  if (n < 0 || n > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(n)];
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() < 2) return {};
  std::vector<mpq_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return QPoly(std::move(d));
}

BigReal QPoly::eval(const BigReal& k) const {
  BigReal acc(k.prec());
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * k + BigReal(coeffs_[i], k.prec());
  return acc;
}

mpq_class QPoly::eval(const mpq_class& k) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * k + coeffs_[i];
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << (sgn(coeffs_[i]) > 0 ? " + " : " - ");
    else if (sgn(coeffs_[i]) < 0) os << "-";
    first = false;
    mpq_class mag = abs(coeffs_[i]);
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << (i == 0 || mag != 1 ? "*" : "") << "k";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<mpq_class> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + mpq_class(-1) * b; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return QPoly(std::move(v));
}

QPoly operator*(const mpq_class& c, const QPoly& a) {
  std::vector<mpq_class> v = a.coeffs_;
  for (auto& x : v) x *= c;
  return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw std::logic_error("QPoly division by zero");
  std::vector<mpq_class> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {QPoly(), a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(da - db) + 1);
  for (int i = da; i >= db; --i) {
    mpq_class c = rem[static_cast<std::size_t>(i)] / b.leading();
    quot[static_cast<std::size_t>(i - db)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a;
  QPoly y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? r : mpq_class(1) / r.leading() * r;
  }
  if (x.is_zero()) return x;
  return mpq_class(1) / x.leading() * x;
}

// -- RatFunc ---------------------------------------------------------------

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero()) throw std::logic_error("RatFunc with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  mpq_class lead = den.leading();
  num_ = mpq_class(1) / lead * num;
  den_ = mpq_class(1) / lead * den;
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

BigReal RatFunc::eval(const BigReal& k) const {
  BigReal d = den_.eval(k);
  if (d.is_zero()) throw DomainError("RatFunc::eval: pole at k = " + k.to_string(10));
  return num_.eval(k) / d;
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + RatFunc(mpq_class(-1) * b.num_, b.den_); }
RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::logic_error("RatFunc division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

// -- KEPoly ----------------------------------------------------------------

KEPoly KEPoly::term(int i, int j, const RatFunc& c) {
  KEPoly p;
  p.add({i, j}, c);
  return p;
}

void KEPoly::add(const Exponents& e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

int KEPoly::homogeneous_degree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    int d = e.first + e.second;
    if (degree >= 0 && d != degree) return -1;
    degree = d;
  }
  return degree;
}

BigReal KEPoly::eval(const BigReal& k, const BigReal& K, const BigReal& E) const {
  BigReal acc(k.prec());
  for (const auto& [e, c] : terms_) acc += c.eval(k) * pow(K, e.first) * pow(E, e.second);
  return acc;
}

KEPoly operator+(const KEPoly& a, const KEPoly& b) {
  KEPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add(e, c);
  return out;
}

KEPoly operator-(const KEPoly& a, const KEPoly& b) { return a + RatFunc::constant(-1) * b; }

KEPoly operator*(const KEPoly& a, const KEPoly& b) {
  KEPoly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

KEPoly operator*(const RatFunc& c, const KEPoly& a) {
  KEPoly out;
  for (const auto& [e, ca] : a.terms_) out.add(e, c * ca);
  return out;
}

KEPoly diff_k(const KEPoly& p) {
  const QPoly k = QPoly::monomial(1, 1);
  const RatFunc inv_k(QPoly::constant(1), k);
  const RatFunc inv_k_kp2(QPoly::constant(1), k - k * k * k);  // 1/(k(1-k^2))
  KEPoly out;
  for (const auto& [e, c] : p.terms()) {
    auto [i, j] = e;
    out = out + KEPoly::term(i, j, c.derivative());
    if (i > 0) {
      RatFunc ci = RatFunc::constant(i) * c;
      out = out + KEPoly::term(i - 1, j + 1, ci * inv_k_kp2);
      out = out - KEPoly::term(i, j, ci * inv_k);
    }
    if (j > 0) {
      RatFunc cj = RatFunc::constant(j) * c;
      out = out + KEPoly::term(i, j, cj * inv_k);
      out = out - KEPoly::term(i + 1, j - 1, cj * inv_k);
    }
  }
  return out;
}

const std::vector<KEPoly>& derivative_stack(int nu) {
  if (nu < 1) throw DomainError("derivative_stack: nu must be positive");
  static std::mutex mutex;
  static std::map<int, std::vector<KEPoly>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(nu);
  if (it != cache.end()) return it->second;

  // theta = z d/dz = k(1-k^2) / (2(1-2k^2)) d/dk
  const QPoly k = QPoly::monomial(1, 1);
  const RatFunc theta_factor(k - k * k * k, QPoly({2, 0, -4}));
  std::vector<KEPoly> stack{KEPoly::term(4 * nu, 0, RatFunc::constant(1))};
  for (int m = 1; m <= 2 * nu; ++m) {
    const KEPoly& prev = stack.back();
    stack.push_back(theta_factor * diff_k(prev) - RatFunc::constant(m - 1) * prev);
  }
  return cache.emplace(nu, std::move(stack)).first->second;
}

// -- numeric reduction -------------------------------------------------------

BigReal LaurentK::eval(const BigReal& K, const BigReal& pi) const {
  BigReal acc(K.prec());
  for (const auto& [e, c] : coeffs) acc += c * pow(K, e);
  return acc * pow(pi, pi_power);
}

LaurentK substitute_alpha(const KEPoly& p, const ModulusContext& ctx, const AlphaValue& a) {
  if (ctx.r != a.r) throw DomainError("substitute_alpha: modulus and alpha value belong to different r");
  const Bits wp = std::min(ctx.prec, a.prec);
  BigReal sr = sqrt_rational(ctx.r, wp);
  BigReal pi = const_pi(wp);
  BigReal alpha_coeff = 1 - a.value.with_prec(wp) / sr;  // E = alpha_coeff K + beta_pi / K
  BigReal beta_pi = pi / (4 * sr);
  BigReal k = ctx.k.with_prec(wp);
  LaurentK out;
  for (const auto& [e, c] : p.terms()) {
    auto [i, j] = e;
    BigReal cv = c.eval(k);
    mpz_class binom = 1;
    for (int s = 0; s <= j; ++s) {
      if (s > 0) binom = binom * (j - s + 1) / s;
      BigReal term = cv * BigReal(binom, wp) * pow(alpha_coeff, j - s) * pow(beta_pi, s);
      auto [slot, inserted] = out.coeffs.try_emplace(i + j - 2 * s, wp);
      slot->second += term;
    }
  }
  return out;
}

CoefficientSolution solve_coefficients(int nu, const ExactRational& r, Bits prec) {
  if (nu < 1 || nu > 3) throw DomainError("solve_coefficients: nu must be 1, 2 or 3");
  if (sgn(r) <= 0) throw DomainError("solve_coefficients: r must be positive");
  const Bits wp = prec + 64;
  ModulusContext ctx = singular_modulus(r, wp);
  AlphaValue a = alpha_direct(r, wp);
  if (abs(1 - 2 * square(ctx.k)) < pow2(-(prec / 2), wp))
    throw DegenerateSystemError("solve_coefficients: z = 1 at r = " + format_rational(r) + ", no series", 0);

  const auto& stack = derivative_stack(nu);
  std::vector<LaurentK> rows;
  for (const auto& g : stack) rows.push_back(substitute_alpha(g, ctx, a));
  auto coeff = [&](int m, int e) {
    auto it = rows[static_cast<std::size_t>(m)].coeffs.find(e);
    return it == rows[static_cast<std::size_t>(m)].coeffs.end() ? BigReal(wp) : it->second;
  };

  const int n = 2 * nu;
  // Equation t: coefficient of K^(4 nu - 2t) vanishes, t = 0..n-1.
  std::vector<std::vector<BigReal>> M(static_cast<std::size_t>(n), std::vector<BigReal>(static_cast<std::size_t>(n) + 1));
  BigReal scale(1, wp);
  for (int t = 0; t < n; ++t) {
    const int e = 4 * nu - 2 * t;
    for (int m = 1; m <= n; ++m) {
      M[t][m - 1] = coeff(m, e);
      scale = max(scale, abs(M[t][m - 1]));
    }
    M[t][n] = -coeff(0, e);
  }

  int rank = 0;
  const BigReal pivot_floor = pow2(-(wp / 2), wp) * scale;
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int i = col + 1; i < n; ++i)
      if (abs(M[i][col]) > abs(M[best][col])) best = i;
    if (abs(M[best][col]) <= pivot_floor) continue;
    std::swap(M[col], M[best]);
    ++rank;
    for (int i = col + 1; i < n; ++i) {
      BigReal f = M[i][col] / M[col][col];
      for (int j = col; j <= n; ++j) M[i][j] -= f * M[col][j];
    }
  }
  if (rank < n)
    throw DegenerateSystemError("solve_coefficients: rank " + std::to_string(rank) + " of " + std::to_string(n) +
                                    " at r = " + format_rational(r),
                                rank);

  std::vector<BigReal> A(static_cast<std::size_t>(n) + 1, BigReal(wp));
  A[0] = BigReal(1, wp);
  for (int i = n - 1; i >= 0; --i) {
    BigReal acc = M[i][n];
    for (int j = i + 1; j < n; ++j) acc -= M[i][j] * A[j + 1];
    A[i + 1] = acc / M[i][i];
  }

  // Residual of each vanishing condition, relative to the largest term in it.
  BigReal residual(wp);
  for (int t = 0; t < n; ++t) {
    const int e = 4 * nu - 2 * t;
    BigReal sum(wp);
    BigReal biggest(1, wp);
    for (int m = 0; m <= n; ++m) {
      BigReal term = A[m] * coeff(m, e);
      sum += term;
      biggest = max(biggest, abs(term));
    }
    residual = max(residual, abs(sum) / biggest);
  }
  if (residual > pow2(-prec + 48, wp))
    throw VerificationError("solve_coefficients: residual " + residual.to_string(6) + " above 2^(-prec+48)");

  BigReal c0(wp);
  for (int m = 0; m <= n; ++m) c0 += A[m] * coeff(m, 0);
  BigReal g = ldexp(c0, 4 * nu) / pow(const_pi(wp), 2 * nu);

  CoefficientSolution out;
  out.nu = nu;
  for (auto& x : A) out.A.push_back(x.with_prec(prec));
  out.g = g.with_prec(prec);
  out.residual = residual.with_prec(prec);
  out.rank = rank;
  return out;
}

}  // namespace piforge
