#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hinv {

/// Raised for every contract violation in the library. The message carries
/// the short reason ("division by zero", "order mismatch", ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);
/// Non-negative residue of v modulo m (m > 0).
int64_t mod64(int64_t v, int64_t m);
int64_t euler_phi(int64_t m);
/// Inverse of a modulo m; throws when gcd(a, m) != 1.
int64_t inverse_mod(int64_t a, int64_t m);
/// Smallest x >= 0 with a x = r (mod m), if any.
std::optional<int64_t> solve_linear_mod(int64_t a, int64_t r, int64_t m);

/// An element of the group of M-th roots of unity, stored as zeta_M^exp.
///
/// Products of roots with different orders are taken in mu_lcm. Equality
/// compares the underlying field elements, so zeta_4^1 == zeta_8^2.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(int64_t order, int64_t exp);

  static RootOfUnity one(int64_t order = 1) { return RootOfUnity(order, 0); }

  int64_t order() const { return order_; }
  int64_t exp() const { return exp_; }
  bool is_one() const { return exp_ == 0; }

  /// Same element written in mu_target; target must be a multiple of order().
  RootOfUnity lift(int64_t target) const;
  /// Smallest k >= 1 with r^k = 1.
  int64_t multiplicative_order() const;

  RootOfUnity inverse() const { return RootOfUnity(order_, order_ - exp_); }
  RootOfUnity pow(int64_t k) const;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
  friend RootOfUnity operator/(const RootOfUnity& a, const RootOfUnity& b) { return a * b.inverse(); }
  RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }

  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
  /// Orders by the angle exp/order in [0, 1).
  friend std::strong_ordering operator<=>(const RootOfUnity& a, const RootOfUnity& b);

  std::string to_string() const;

 private:
  int64_t order_ = 1;
  int64_t exp_ = 0;
};

/// Monic M-th cyclotomic polynomial, ascending coefficients.
std::vector<mpz_class> cyclotomic_poly(int64_t M);

struct CycContext;

/// Element of Q(zeta_M), kept reduced modulo the M-th cyclotomic polynomial.
class CycNum {
 public:
  /// The zero element of Q(zeta_M).
  explicit CycNum(int64_t M = 1);
  CycNum(int64_t M, std::vector<mpq_class> coeffs);

  static CycNum from_int(int64_t M, long v);
  static CycNum zeta_power(int64_t M, int64_t k);

  int64_t order() const;
  int degree() const;
  const std::vector<mpq_class>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }
  CycNum inverse() const;

  /// Multiplication by a root of unity of order dividing M.
  CycNum times_root(const RootOfUnity& r) const;

  friend bool operator==(const CycNum& a, const CycNum& b);

  std::string to_string() const;

 private:
  const CycContext* ctx_;
  std::vector<mpq_class> c_;

  void check_same(const CycNum& o) const;
  // Zero in an already resolved field; skips the context lookup.
  explicit CycNum(const CycContext* ctx);
};

enum class CycOp { add, mul, inv, neg };

/// Field operation dispatcher; b is ignored for the unary operations.
CycNum cyc_arith(CycOp op, const CycNum& a, const CycNum* b = nullptr);

/// zeta_M^(exp * M / r.order()).
CycNum embed_root(int64_t M, const RootOfUnity& r);

}  // namespace hinv
