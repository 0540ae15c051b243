#include "hinv/orbits.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace hinv {

ModMatrix2 ModMatrix2::make(int64_t n, int64_t a, int64_t b, int64_t c, int64_t d) {
  if (n < 1) throw Error("modulus must be positive");
  return ModMatrix2{n, {mod64(a, n), mod64(b, n), mod64(c, n), mod64(d, n)}};
}

int64_t ModMatrix2::det() const { return mod64(e[0] * e[3] - e[1] * e[2], n); }
int64_t ModMatrix2::trace() const { return mod64(e[0] + e[3], n); }

ModMatrix2 ModMatrix2::inverse() const {
  const int64_t di = inverse_mod(det(), n);
  return make(n, e[3] * di, -e[1] * di, -e[2] * di, e[0] * di);
}

ModMatrix2 ModMatrix2::operator*(const ModMatrix2& o) const {
  if (n != o.n) throw Error("modulus mismatch");
  return make(n, e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3], e[2] * o.e[0] + e[3] * o.e[2],
              e[2] * o.e[1] + e[3] * o.e[3]);
}

ModMatrix2 ModMatrix2::reduce(int64_t m) const {
  if (n % m != 0) throw Error("can only reduce to a divisor of the modulus");
  return make(m, e[0], e[1], e[2], e[3]);
}

GroupMap ModMatrix2::to_group_map() const {
  const FinAbGroup T({n, n});
  return GroupMap::from_rows(T, T, {e[0], e[1], e[2], e[3]});
}

ModMatrix2 ModMatrix2::from_group_map(const GroupMap& g) {
  const FinAbGroup& T = g.source();
  if (T.rank() != 2 || !T.is_homogeneous() || !g.is_square()) throw Error("not a 2x2 map of Z_n^2");
  return make(T.order(0), g.entry(0, 0), g.entry(0, 1), g.entry(1, 0), g.entry(1, 1));
}

std::string ModMatrix2::to_string() const {
  std::ostringstream os;
  os << "[[" << e[0] << "," << e[1] << "],[" << e[2] << "," << e[3] << "]]";
  return os.str();
}

std::vector<ModMatrix2> canonical_forms(int64_t n) {
  if (n < 2) throw Error("n must be at least 2");
  std::vector<ModMatrix2> out{ModMatrix2::make(n, 1, 0, 0, -1)};
  if (n % 2 == 0) out.push_back(ModMatrix2::make(n, 0, 1, 1, 0));
  if (n % 4 == 0) out.push_back(ModMatrix2::make(n, 1, 2, n / 2, -1));
  return out;
}

std::string canonical_label(size_t index) { return "theta" + std::to_string(index + 1); }

namespace {

bool in_locus(const ModMatrix2& A) { return A.det() == mod64(-1, A.n) && A.trace() == 0; }

int form_index(const std::vector<ModMatrix2>& forms, const ModMatrix2& B) {
  for (size_t k = 0; k < forms.size(); ++k)
    if (forms[k] == B) return static_cast<int>(k);
  return -1;
}

}  // namespace

OrbitResult orbit_reduce(const ModMatrix2& A) {
  if (!in_locus(A)) throw Error("not in the det -1, trace 0 locus");
  const int64_t n = A.n;
  const auto forms = canonical_forms(n);
  const ModMatrix2 moves[2] = {ModMatrix2::make(n, 1, 1, 0, 1), ModMatrix2::make(n, 1, 0, 1, 1)};
  const ModMatrix2 inv_moves[2] = {moves[0].inverse(), moves[1].inverse()};

  std::map<ModMatrix2, ModMatrix2> seen;  // state -> P with P^{-1} A P = state
  std::deque<ModMatrix2> queue;
  seen.emplace(A, ModMatrix2::identity(n));
  queue.push_back(A);
  while (!queue.empty()) {
    const ModMatrix2 B = queue.front();
    queue.pop_front();
    const ModMatrix2 P = seen.at(B);
    if (int k = form_index(forms, B); k >= 0) {
      return OrbitResult{B, P, static_cast<size_t>(k), seen.size()};
    }
    for (int s = 0; s < 2; ++s) {
      ModMatrix2 next = inv_moves[s] * B * moves[s];
      if (seen.count(next)) continue;
      seen.emplace(next, P * moves[s]);
      queue.push_back(next);
    }
  }
  throw Error("orbit contains no canonical form");
}

bool certify(const ModMatrix2& A, const OrbitResult& r) {
  if (r.P.det() != 1 % A.n) return false;
  if (!(r.P.inverse() * A * r.P == r.theta)) return false;
  const auto forms = canonical_forms(A.n);
  return r.index < forms.size() && forms[r.index] == r.theta;
}

bool verify_pairwise_nonconjugate(int64_t n) {
  const auto forms = canonical_forms(n);
  for (int64_t a = 0; a < n; ++a)
    for (int64_t b = 0; b < n; ++b)
      for (int64_t c = 0; c < n; ++c)
        for (int64_t d = 0; d < n; ++d) {
          const ModMatrix2 P = ModMatrix2::make(n, a, b, c, d);
          if (P.det() != 1 % n) continue;
          for (size_t i = 0; i < forms.size(); ++i)
            for (size_t j = 0; j < forms.size(); ++j)
              if (i != j && P * forms[j] == forms[i] * P) return false;
        }
  return true;
}

std::vector<TableCheck> conjugator_table_checks(int i) {
  if (i < 2) throw Error("table needs n = 2^i with i >= 2");
  const int64_t n = int64_t{1} << i, h = n / 2, q = n / 4;
  const ModMatrix2 theta1 = ModMatrix2::make(n, 1, 0, 0, -1);
  const ModMatrix2 theta2 = ModMatrix2::make(n, 0, 1, 1, 0);
  const ModMatrix2 theta3 = ModMatrix2::make(n, 1, 2, h, -1);
  auto M = [n](int64_t a, int64_t b, int64_t c, int64_t d) { return ModMatrix2::make(n, a, b, c, d); };

  std::vector<TableCheck> rows;
  auto add = [&](std::string name, ModMatrix2 tau, ModMatrix2 P, ModMatrix2 target) {
    rows.push_back(TableCheck{std::move(name), tau, P, target, false});
  };
  add("[[1,0],[0,-1]]", M(1, 0, 0, -1), M(1, 0, 0, 1), theta1);
  add("[[1,h],[0,-1]]", M(1, h, 0, -1), M(1, q, 0, 1), theta1);
  add("[[1,0],[h,-1]]", M(1, 0, h, -1), M(1, 0, q, 1), theta1);
  if (i == 2) {
    add("[[1,2],[2,-1]]", M(1, 2, 2, -1), M(1, 0, 0, 1), theta3);
    add("[[-1,0],[0,1]]", M(-1, 0, 0, 1), M(0, 1, -1, 0), theta1);
    add("[[-1,2],[0,1]]", M(-1, 2, 0, 1), M(1, 1, -1, 0), theta1);
    add("[[-1,0],[2,1]]", M(-1, 0, 2, 1), M(0, 1, -1, 1), theta1);
  } else {
    add("[[1,h],[h,-1]]", M(1, h, h, -1), M(q + 1, q, q, -q + 1), theta1);
    add("[[1+h,0],[0,-1-h]]", M(1 + h, 0, 0, -1 - h), M(1 + q, 1, -q, 1 - h), theta3);
    add("[[1+h,h],[0,-1-h]]", M(1 + h, h, 0, -1 - h), M(1, 1, q, 1 + q), theta3);
    add("[[1+h,0],[h,-1-h]]", M(1 + h, 0, h, -1 - h), M(1, 1 + q, 0, 1), theta3);
  }
  add("[[1+h,h],[h,-1-h]]", M(1 + h, h, h, -1 - h), M(1, 1, 0, 1), theta3);

  for (int64_t q1 = 0; q1 <= 1; ++q1)
    for (int64_t q2 = 0; q2 <= 1; ++q2) {
      const ModMatrix2 tau = M(h * q1, 1 + h * q2, 1 - h * q2, -h * q1);
      ModMatrix2 P;
      if (i == 2) P = M(1 - q2, q2 + 2 * q1 * q2, 2 * q1 - q2, 1 - q2 + 2 * q1 * q2);
      else if (i == 3) P = M(1, 2 * q2, 4 * q1 + 2 * q2, 1 + 4 * q2);
      else P = M(q * q2 - 1, 0, h * q1, -q * q2 - 1);
      add("second case q1=" + std::to_string(q1) + " q2=" + std::to_string(q2), tau, P, theta2);
    }

  for (auto& r : rows) r.ok = r.P.det() == 1 % n && r.P.inverse() * r.tau * r.P == r.target;
  return rows;
}

bool verify_conjugator_table(int64_t n) {
  int i = 0;
  while ((int64_t{1} << i) < n) ++i;
  if ((int64_t{1} << i) != n || i < 2) throw Error("n must be a power of 2 with n >= 4");
  for (const auto& r : conjugator_table_checks(i))
    if (!r.ok) return false;
  return true;
}

bool verify_odd_similarities(int64_t q) {
  if (q < 3 || q % 2 == 0) throw Error("q must be odd and at least 3");
  for (const ModMatrix2& A : {ModMatrix2::make(q, 1, 0, 0, -1), ModMatrix2::make(q, 0, 1, 1, 0),
                              ModMatrix2::make(q, 1, 2, 0, -1)}) {
    const OrbitResult r = orbit_reduce(A);
    if (!certify(A, r) || r.index != 0) return false;
  }
  return true;
}

LocusScan scan_locus(int64_t n) {
  LocusScan scan;
  scan.n = n;
  for (int64_t a = 0; a < n; ++a)
    for (int64_t b = 0; b < n; ++b)
      for (int64_t c = 0; c < n; ++c)
        for (int64_t d = 0; d < n; ++d) {
          const ModMatrix2 A = ModMatrix2::make(n, a, b, c, d);
          if (!in_locus(A)) continue;
          ++scan.locus_size;
          const OrbitResult r = orbit_reduce(A);
          if (certify(A, r)) ++scan.certified;
          scan.forms_reached.insert(r.index);
        }
  return scan;
}

}  // namespace hinv
