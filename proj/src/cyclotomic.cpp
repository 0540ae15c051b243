#include <optional>
#include "hinv/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hinv {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  return a / std::gcd(a, b) * b;
}

int64_t mod64(int64_t v, int64_t m) {
  int64_t r = v % m;
  return r < 0 ? r + m : r;
}

int64_t inverse_mod(int64_t a, int64_t m) {
  int64_t g = m, x = 0, r = mod64(a, m), y = 1;
  while (r != 0) {
    int64_t q = g / r;
    int64_t t = g - q * r;
    g = r;
    r = t;
    t = x - q * y;
    x = y;
    y = t;
  }
  if (g != 1) throw Error("not invertible modulo " + std::to_string(m));
  return mod64(x, m);
}

std::optional<int64_t> solve_linear_mod(int64_t a, int64_t r, int64_t m) {
  a = mod64(a, m);
  r = mod64(r, m);
  const int64_t g = std::gcd(a, m);
  if (r % g != 0) return std::nullopt;
  const int64_t mg = m / g;
  if (mg == 1) return 0;
  return static_cast<int64_t>((static_cast<__int128>(r / g) * inverse_mod(a / g, mg)) % mg);
}

int64_t euler_phi(int64_t m) {
  int64_t result = m;
  for (int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// ---------------------------------------------------------------- RootOfUnity

RootOfUnity::RootOfUnity(int64_t order, int64_t exp) : order_(order) {
  if (order <= 0) throw Error("root of unity order must be positive");
  exp_ = mod64(exp, order);
}

RootOfUnity RootOfUnity::lift(int64_t target) const {
  if (target <= 0 || target % order_ != 0) throw Error("incompatible orders");
  return RootOfUnity(target, exp_ * (target / order_));
}

int64_t RootOfUnity::multiplicative_order() const { return order_ / std::gcd(order_, exp_); }

RootOfUnity RootOfUnity::pow(int64_t k) const {
  __int128 e = static_cast<__int128>(exp_) * k;
  int64_t r = static_cast<int64_t>(e % order_);
  return RootOfUnity(order_, r);
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.order_ == b.order_) return RootOfUnity(a.order_, a.exp_ + b.exp_);
  int64_t m = lcm64(a.order_, b.order_);
  return RootOfUnity(m, a.exp_ * (m / a.order_) + b.exp_ * (m / b.order_));
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.order_ == b.order_) return a.exp_ == b.exp_;
  return static_cast<__int128>(a.exp_) * b.order_ == static_cast<__int128>(b.exp_) * a.order_;
}

std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
  __int128 l = static_cast<__int128>(a.exp_) * b.order_;
  __int128 r = static_cast<__int128>(b.exp_) * a.order_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string RootOfUnity::to_string() const {
  if (exp_ == 0) return "1";
  std::ostringstream os;
  os << "z" << order_ << "^" << exp_;
  return os.str();
}

// ---------------------------------------------------------------- polynomials

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b (b nonzero, trimmed).
void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  mpq_class lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    mpq_class f = a.back() / lead;
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

std::mutex g_poly_mutex;
std::map<int64_t, std::vector<mpz_class>> g_poly_cache;

std::vector<mpz_class> compute_cyclotomic(int64_t M) {
  if (M == 1) return {mpz_class(-1), mpz_class(1)};
  // x^M - 1 divided by prod_{d | M, d < M} Phi_d, exactly.
  QPoly num(M + 1, mpq_class(0));
  num[0] = -1;
  num[M] = 1;
  for (int64_t d = 1; d < M; ++d) {
    if (M % d != 0) continue;
    std::vector<mpz_class> pd = cyclotomic_poly(d);
    QPoly den(pd.begin(), pd.end());
    QPoly q, r;
    poly_divmod(num, den, q, r);
    if (!r.empty()) throw Error("cyclotomic division left a remainder");
    num = std::move(q);
  }
  std::vector<mpz_class> out;
  out.reserve(num.size());
  for (const auto& c : num) {
    if (c.get_den() != 1) throw Error("non-integral cyclotomic coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

std::vector<mpz_class> cyclotomic_poly(int64_t M) {
  if (M < 1) throw Error("cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(g_poly_mutex);
    auto it = g_poly_cache.find(M);
    if (it != g_poly_cache.end()) return it->second;
  }
  std::vector<mpz_class> p = compute_cyclotomic(M);
  std::lock_guard<std::mutex> lock(g_poly_mutex);
  g_poly_cache.emplace(M, p);
  return p;
}

// ---------------------------------------------------------------- CycContext

struct CycContext {
  int64_t M;
  int deg;
  QPoly phi;                 // monic, ascending, length deg+1
  std::vector<QPoly> powers; // x^k mod phi for 0 <= k < M, each length deg
};

namespace {

std::mutex g_ctx_mutex;
std::map<int64_t, std::unique_ptr<CycContext>> g_contexts;

const CycContext* context_for(int64_t M) {
  if (M < 1) throw Error("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_ctx_mutex);
  auto it = g_contexts.find(M);
  if (it != g_contexts.end()) return it->second.get();
  auto ctx = std::make_unique<CycContext>();
  ctx->M = M;
  std::vector<mpz_class> p = compute_cyclotomic(M);
  ctx->phi.assign(p.begin(), p.end());
  ctx->deg = static_cast<int>(p.size()) - 1;
  ctx->powers.reserve(M);
  QPoly cur(ctx->deg, mpq_class(0));
  cur[0] = 1;
  for (int64_t k = 0; k < M; ++k) {
    ctx->powers.push_back(cur);
    // multiply by x and reduce
    QPoly next(ctx->deg, mpq_class(0));
    mpq_class top = cur[ctx->deg - 1];
    for (int i = ctx->deg - 1; i >= 1; --i) next[i] = cur[i - 1];
    if (top != 0)
      for (int i = 0; i < ctx->deg; ++i) next[i] -= top * ctx->phi[i];
    cur = std::move(next);
  }
  const CycContext* raw = ctx.get();
  g_contexts.emplace(M, std::move(ctx));
  return raw;
}

// Index of the only nonzero coefficient, if there is exactly one.
std::optional<size_t> single_term(const QPoly& p) {
  std::optional<size_t> at;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) {
      if (at) return std::nullopt;
      at = i;
    }
  return at;
}

void reduce_into(const CycContext& ctx, QPoly& p) {
  const int d = ctx.deg;
  for (int k = static_cast<int>(p.size()) - 1; k >= d; --k) {
    if (p[k] == 0) continue;
    mpq_class c = p[k];
    for (int i = 0; i <= d; ++i) p[k - d + i] -= c * ctx.phi[i];
  }
  p.resize(d, mpq_class(0));
}

}  // namespace

// ---------------------------------------------------------------- CycNum

CycNum::CycNum(int64_t M) : ctx_(context_for(M)), c_(ctx_->deg, mpq_class(0)) {}

CycNum::CycNum(const CycContext* ctx) : ctx_(ctx) {}

CycNum::CycNum(int64_t M, std::vector<mpq_class> coeffs) : ctx_(context_for(M)), c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  if (static_cast<int>(c_.size()) < ctx_->deg) c_.resize(ctx_->deg, mpq_class(0));
  reduce_into(*ctx_, c_);
}

CycNum CycNum::from_int(int64_t M, long v) {
  CycNum out(M);
  out.c_[0] = v;
  return out;
}

CycNum CycNum::zeta_power(int64_t M, int64_t k) {
  CycNum out(M);
  out.c_ = out.ctx_->powers[mod64(k, M)];
  return out;
}

int64_t CycNum::order() const { return ctx_->M; }
int CycNum::degree() const { return ctx_->deg; }

bool CycNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void CycNum::check_same(const CycNum& o) const {
  if (ctx_ != o.ctx_) throw Error("order mismatch");
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum out(*this);
  out += o;
  return out;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum out(*this);
  out -= o;
  return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

CycNum CycNum::operator*(const CycNum& o) const {
  check_same(o);
  CycNum out(ctx_);
  // Monomial times monomial is the common case for Pauli matrices.
  if (auto i = single_term(c_), j = single_term(o.c_); i && j) {
    const mpq_class k = c_[*i] * o.c_[*j];
    out.c_ = ctx_->powers[(*i + *j) % static_cast<size_t>(ctx_->M)];
    if (k != 1)
      for (auto& x : out.c_)
        if (x != 0) x *= k;
    return out;
  }
  QPoly prod = poly_mul(c_, o.c_);
  if (prod.empty()) {
    out.c_.assign(ctx_->deg, mpq_class(0));
    return out;
  }
  reduce_into(*ctx_, prod);
  out.c_ = std::move(prod);
  return out;
}

CycNum CycNum::times_root(const RootOfUnity& r) const {
  if (ctx_->M % r.order() != 0) throw Error("incompatible orders");
  int64_t k = r.exp() * (ctx_->M / r.order());
  if (k == 0) return *this;
  return *this * CycNum::zeta_power(ctx_->M, k);
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw Error("division by zero");
  // Extended Euclid on (phi, a): track s with s*a == r (mod phi).
  QPoly r0 = ctx_->phi, r1 = c_;
  trim(r1);
  QPoly s0, s1{mpq_class(1)};
  while (!(r1.size() == 1)) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw Error("division by zero");
  }
  mpq_class unit = r1[0];
  for (auto& c : s1) c /= unit;
  return CycNum(ctx_->M, s1);
}

bool operator==(const CycNum& a, const CycNum& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z" << ctx_->M << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CycNum cyc_arith(CycOp op, const CycNum& a, const CycNum* b) {
  switch (op) {
    case CycOp::add:
      if (!b) throw Error("missing operand");
      return a + *b;
    case CycOp::mul:
      if (!b) throw Error("missing operand");
      return a * *b;
    case CycOp::inv:
      return a.inverse();
    case CycOp::neg:
      return -a;
  }
  throw Error("unknown operation");
}

CycNum embed_root(int64_t M, const RootOfUnity& r) {
  if (M % r.order() != 0) throw Error("incompatible orders");
  return CycNum::zeta_power(M, r.exp() * (M / r.order()));
}

}  // namespace hinv
