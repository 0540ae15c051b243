#include "hinv/abgroup.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hinv {

namespace {

int64_t mul_mod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(mod64(static_cast<int64_t>((static_cast<__int128>(a) * b) % m), m));
}

// p-adic valuation
int valuation(int64_t v, int64_t p) {
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// x in Z_l with x = 1 mod q and x = 0 mod l/q, q the p-part of l.
int64_t crt_idempotent(int64_t l, int64_t q) {
  int64_t m = l / q;
  if (m == 1) return 1 % l;
  return mod64(m * inverse_mod(m % q, q), l);
}

int64_t det_rec(std::vector<std::vector<int64_t>> a, int64_t m) {
  const size_t k = a.size();
  if (k == 0) return 1 % m;
  if (k == 1) return mod64(a[0][0], m);
  if (k == 2) return mod64(mul_mod(a[0][0], a[1][1], m) - mul_mod(a[0][1], a[1][0], m), m);
  int64_t acc = 0;
  for (size_t c = 0; c < k; ++c) {
    if (a[0][c] % m == 0) continue;
    std::vector<std::vector<int64_t>> minor;
    for (size_t r = 1; r < k; ++r) {
      std::vector<int64_t> row;
      for (size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      minor.push_back(std::move(row));
    }
    int64_t term = mul_mod(a[0][c], det_rec(std::move(minor), m), m);
    acc = mod64(c % 2 == 0 ? acc + term : acc - term, m);
  }
  return acc;
}

}  // namespace

std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// ---------------------------------------------------------------- GroupElem

std::string GroupElem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < residues.size(); ++i) os << (i ? "," : "") << residues[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- FinAbGroup

FinAbGroup::FinAbGroup(std::vector<int64_t> orders) : orders_(std::move(orders)) {
  card_ = 1;
  for (int64_t o : orders_) {
    if (o < 1) throw Error("group orders must be positive");
    card_ *= static_cast<size_t>(o);
  }
}

FinAbGroup FinAbGroup::parse(std::string_view d) {
  std::vector<int64_t> orders;
  if (d.empty() || d == "1" || d == "trivial") return FinAbGroup(std::vector<int64_t>{});
  size_t i = 0;
  auto read_int = [&](const char* what) {
    size_t start = i;
    while (i < d.size() && std::isdigit(static_cast<unsigned char>(d[i]))) ++i;
    if (start == i) throw Error(std::string("bad group descriptor: expected ") + what);
    return std::stoll(std::string(d.substr(start, i - start)));
  };
  while (true) {
    if (i >= d.size() || (d[i] != 'Z' && d[i] != 'z')) throw Error("bad group descriptor: expected 'Z'");
    ++i;
    int64_t order = read_int("order");
    int64_t power = 1;
    if (i < d.size() && d[i] == '^') {
      ++i;
      power = read_int("power");
    }
    if (order < 1 || power < 1) throw Error("bad group descriptor: nonpositive order or power");
    for (int64_t k = 0; k < power; ++k) orders.push_back(order);
    if (i == d.size()) break;
    if (d[i] != 'x' && d[i] != 'X') throw Error("bad group descriptor: expected 'x'");
    ++i;
  }
  return FinAbGroup(std::move(orders));
}

std::string FinAbGroup::descriptor() const {
  if (orders_.empty()) return "1";
  std::ostringstream os;
  size_t i = 0;
  bool first = true;
  while (i < orders_.size()) {
    size_t j = i;
    while (j < orders_.size() && orders_[j] == orders_[i]) ++j;
    if (!first) os << "x";
    first = false;
    os << "Z" << orders_[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  return os.str();
}

bool FinAbGroup::is_homogeneous() const {
  return std::all_of(orders_.begin(), orders_.end(), [&](int64_t o) { return o == orders_.front(); });
}

int64_t FinAbGroup::exponent() const {
  int64_t e = 1;
  for (int64_t o : orders_) e = lcm64(e, o);
  return e;
}

GroupElem FinAbGroup::zero() const { return GroupElem{std::vector<int64_t>(orders_.size(), 0)}; }

GroupElem FinAbGroup::generator(size_t j) const {
  GroupElem g = zero();
  g[j] = 1 % orders_[j];
  return g;
}

GroupElem FinAbGroup::make(std::vector<int64_t> raw) const {
  if (raw.size() != orders_.size()) throw Error("element has wrong number of coordinates");
  for (size_t j = 0; j < raw.size(); ++j) raw[j] = mod64(raw[j], orders_[j]);
  return GroupElem{std::move(raw)};
}

bool FinAbGroup::contains(const GroupElem& g) const {
  if (g.size() != orders_.size()) return false;
  for (size_t j = 0; j < g.size(); ++j)
    if (g[j] < 0 || g[j] >= orders_[j]) return false;
  return true;
}

GroupElem FinAbGroup::add(const GroupElem& a, const GroupElem& b) const {
  GroupElem out = a;
  for (size_t j = 0; j < orders_.size(); ++j) {
    out[j] += b[j];
    if (out[j] >= orders_[j]) out[j] -= orders_[j];
  }
  return out;
}

GroupElem FinAbGroup::sub(const GroupElem& a, const GroupElem& b) const {
  GroupElem out = a;
  for (size_t j = 0; j < orders_.size(); ++j) {
    out[j] -= b[j];
    if (out[j] < 0) out[j] += orders_[j];
  }
  return out;
}

GroupElem FinAbGroup::neg(const GroupElem& a) const { return sub(zero(), a); }

GroupElem FinAbGroup::scale(int64_t k, const GroupElem& a) const {
  GroupElem out = a;
  for (size_t j = 0; j < orders_.size(); ++j) out[j] = mul_mod(mod64(k, orders_[j]), a[j], orders_[j]);
  return out;
}

size_t FinAbGroup::index(const GroupElem& g) const {
  size_t idx = 0;
  for (size_t j = 0; j < orders_.size(); ++j) idx = idx * static_cast<size_t>(orders_[j]) + static_cast<size_t>(g[j]);
  return idx;
}

GroupElem FinAbGroup::element(size_t idx) const {
  GroupElem g = zero();
  for (size_t j = orders_.size(); j-- > 0;) {
    g[j] = static_cast<int64_t>(idx % static_cast<size_t>(orders_[j]));
    idx /= static_cast<size_t>(orders_[j]);
  }
  return g;
}

std::vector<GroupElem> FinAbGroup::elements() const {
  std::vector<GroupElem> out;
  out.reserve(card_);
  for (size_t i = 0; i < card_; ++i) out.push_back(element(i));
  return out;
}

int64_t element_order(const FinAbGroup& T, const GroupElem& g) {
  int64_t ord = 1;
  for (size_t j = 0; j < T.rank(); ++j) ord = lcm64(ord, T.order(j) / gcd64(T.order(j), g[j]));
  return ord;
}

// ---------------------------------------------------------------- GroupMap

GroupMap::GroupMap(FinAbGroup source, FinAbGroup target, std::vector<std::vector<int64_t>> columns)
    : src_(std::move(source)), dst_(std::move(target)), cols_(std::move(columns)) {
  if (cols_.size() != src_.rank()) throw Error("malformed matrix: column count must match source rank");
  for (auto& c : cols_) {
    if (c.size() != dst_.rank()) throw Error("malformed matrix: column length must match target rank");
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod64(c[i], dst_.order(i));
  }
}

GroupMap GroupMap::from_rows(FinAbGroup source, FinAbGroup target, const std::vector<int64_t>& rm) {
  const size_t rows = target.rank(), cols = source.rank();
  if (rm.size() != rows * cols) throw Error("malformed matrix: wrong number of entries");
  std::vector<std::vector<int64_t>> c(cols, std::vector<int64_t>(rows));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) c[j][i] = rm[i * cols + j];
  return GroupMap(std::move(source), std::move(target), std::move(c));
}

GroupMap GroupMap::identity(const FinAbGroup& T) {
  std::vector<std::vector<int64_t>> c(T.rank(), std::vector<int64_t>(T.rank(), 0));
  for (size_t j = 0; j < T.rank(); ++j) c[j][j] = 1;
  return GroupMap(T, T, std::move(c));
}

GroupMap GroupMap::negation(const FinAbGroup& T) {
  std::vector<std::vector<int64_t>> c(T.rank(), std::vector<int64_t>(T.rank(), 0));
  for (size_t j = 0; j < T.rank(); ++j) c[j][j] = -1;
  return GroupMap(T, T, std::move(c));
}

std::vector<int64_t> GroupMap::row_major() const {
  std::vector<int64_t> out;
  out.reserve(src_.rank() * dst_.rank());
  for (size_t i = 0; i < dst_.rank(); ++i)
    for (size_t j = 0; j < src_.rank(); ++j) out.push_back(cols_[j][i]);
  return out;
}

GroupElem GroupMap::apply(const GroupElem& g) const {
  std::vector<int64_t> acc(dst_.rank(), 0);
  for (size_t j = 0; j < src_.rank(); ++j) {
    if (g[j] == 0) continue;
    for (size_t i = 0; i < dst_.rank(); ++i) acc[i] = mod64(acc[i] + mul_mod(cols_[j][i], g[j], dst_.order(i)), dst_.order(i));
  }
  return GroupElem{std::move(acc)};
}

GroupElem GroupMap::image_of_generator(size_t j) const { return GroupElem{cols_[j]}; }

GroupMap GroupMap::compose(const GroupMap& other) const {
  if (!(other.dst_ == src_)) throw Error("cannot compose maps with mismatched groups");
  std::vector<std::vector<int64_t>> c;
  c.reserve(other.src_.rank());
  for (size_t j = 0; j < other.src_.rank(); ++j) c.push_back(apply(other.image_of_generator(j)).residues);
  return GroupMap(other.src_, dst_, std::move(c));
}

bool GroupMap::is_well_defined() const {
  for (size_t j = 0; j < src_.rank(); ++j) {
    GroupElem img = image_of_generator(j);
    if (src_.order(j) % element_order(dst_, img) != 0) return false;
  }
  return true;
}

std::string GroupMap::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < dst_.rank(); ++i) {
    os << (i ? ";" : "");
    for (size_t j = 0; j < src_.rank(); ++j) os << (j ? "," : "") << cols_[j][i];
  }
  os << "]";
  return os.str();
}

int64_t det_mod(const GroupMap& A, int64_t m) {
  const size_t k = A.source().rank();
  if (A.target().rank() != k) throw Error("malformed matrix: determinant of a non-square map");
  std::vector<std::vector<int64_t>> a(k, std::vector<int64_t>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) a[i][j] = mod64(A.entry(i, j), m);
  return det_rec(std::move(a), m);
}

int64_t trace_mod(const GroupMap& A, int64_t m) {
  int64_t t = 0;
  for (size_t i = 0; i < A.source().rank(); ++i) t = mod64(t + A.entry(i, i), m);
  return t;
}

bool is_automorphism(const FinAbGroup& T, const GroupMap& A) {
  if (!(A.source() == T) || !(A.target() == T)) throw Error("malformed matrix: dimensions do not match the group");
  if (!A.is_well_defined()) return false;
  if (T.rank() == 0) return true;
  if (T.is_homogeneous()) return gcd64(det_mod(A, T.order(0)), T.order(0)) == 1;
  if (T.cardinality() > 10000) throw Error("group too large");
  std::vector<char> seen(T.cardinality(), 0);
  for (size_t i = 0; i < T.cardinality(); ++i) {
    size_t img = T.index(A.apply(T.element(i)));
    if (seen[img]) return false;
    seen[img] = 1;
  }
  return true;
}

GroupMap inverse_automorphism(const GroupMap& A) {
  const FinAbGroup& T = A.source();
  if (!is_automorphism(T, A)) throw Error("not an automorphism");
  std::vector<std::vector<int64_t>> c(T.rank());
  for (size_t j = 0; j < T.rank(); ++j) {
    GroupElem target = T.generator(j);
    bool found = false;
    for (size_t i = 0; i < T.cardinality() && !found; ++i) {
      GroupElem g = T.element(i);
      if (A.apply(g) == target) {
        c[j] = g.residues;
        found = true;
      }
    }
    if (!found) throw Error("not an automorphism");
  }
  return GroupMap(T, T, std::move(c));
}

std::vector<GroupMap> enumerate_automorphisms(const FinAbGroup& T, const AutFilter& filter, size_t cap) {
  if (T.cardinality() > cap) throw Error("group too large");
  if ((filter.det || filter.trace) && !T.is_homogeneous()) throw Error("det/trace filter needs T = Z_n^k");
  const size_t k = T.rank();
  const std::vector<GroupElem> elems = T.elements();
  std::vector<GroupMap> out;

  // Depth-first over generator images; `sub` is the subgroup generated by
  // the images chosen so far, which must grow by a factor l_j at step j.
  std::vector<std::vector<int64_t>> cols(k);
  std::function<void(size_t, const std::vector<size_t>&)> rec = [&](size_t j, const std::vector<size_t>& sub) {
    if (j == k) {
      GroupMap A(T, T, cols);
      if (filter.det && det_mod(A, T.order(0)) != mod64(*filter.det, T.order(0))) return;
      if (filter.trace && trace_mod(A, T.order(0)) != mod64(*filter.trace, T.order(0))) return;
      out.push_back(std::move(A));
      return;
    }
    std::vector<char> in_sub(T.cardinality(), 0);
    for (size_t s : sub) in_sub[s] = 1;
    const int64_t l = T.order(j);
    for (const GroupElem& x : elems) {
      if (element_order(T, x) != l) continue;
      bool independent = true;
      GroupElem mult = x;
      for (int64_t m = 1; m < l && independent; ++m) {
        if (in_sub[T.index(mult)]) independent = false;
        mult = T.add(mult, x);
      }
      if (!independent) continue;
      std::vector<size_t> next;
      next.reserve(sub.size() * static_cast<size_t>(l));
      GroupElem step = T.zero();
      for (int64_t m = 0; m < l; ++m) {
        for (size_t s : sub) next.push_back(T.index(T.add(elems[s], step)));
        step = T.add(step, x);
      }
      cols[j] = x.residues;
      rec(j + 1, next);
    }
  };
  rec(0, {T.index(T.zero())});
  std::sort(out.begin(), out.end(), [](const GroupMap& a, const GroupMap& b) { return a.row_major() < b.row_major(); });
  return out;
}

// ---------------------------------------------------------------- characters

RootOfUnity Character::operator()(const GroupElem& g) const {
  RootOfUnity acc;
  for (size_t j = 0; j < on_generators.size(); ++j) acc = acc * on_generators[j].pow(g[j]);
  return acc;
}

int64_t Character::exp_in(const GroupElem& g, int64_t M) const {
  int64_t e = 0;
  for (size_t j = 0; j < on_generators.size(); ++j) {
    const RootOfUnity& v = on_generators[j];
    if (M % v.order() != 0) throw Error("incompatible orders");
    e = mod64(e + mul_mod(v.exp() * (M / v.order()) % M, g[j], M), M);
  }
  return e;
}

std::vector<Character> characters(const FinAbGroup& T) {
  std::vector<Character> out;
  out.reserve(T.cardinality());
  for (size_t idx = 0; idx < T.cardinality(); ++idx) {
    GroupElem e = T.element(idx);
    Character chi;
    for (size_t j = 0; j < T.rank(); ++j) chi.on_generators.emplace_back(T.order(j), e[j]);
    out.push_back(std::move(chi));
  }
  return out;
}

// ---------------------------------------------------------------- CRT split

std::vector<PrimeComponent> split_by_primes(const FinAbGroup& T, const GroupMap& tau) {
  if (!is_automorphism(T, tau)) throw Error("not an automorphism");
  std::vector<PrimeComponent> parts;
  for (auto [p, e] : factorize(static_cast<int64_t>(T.cardinality()))) {
    (void)e;
    PrimeComponent part;
    part.prime = p;
    std::vector<int64_t> orders;
    for (size_t j = 0; j < T.rank(); ++j) {
      if (T.order(j) % p != 0) continue;
      part.coordinates.push_back(j);
      orders.push_back(ipow(p, valuation(T.order(j), p)));
    }
    part.group = FinAbGroup(orders);
    const size_t r = part.coordinates.size();
    std::vector<std::vector<int64_t>> cols(r, std::vector<int64_t>(r));
    for (size_t jj = 0; jj < r; ++jj) {
      const size_t j = part.coordinates[jj];
      const int64_t lift = crt_idempotent(T.order(j), orders[jj]);
      for (size_t ii = 0; ii < r; ++ii) {
        const size_t i = part.coordinates[ii];
        cols[jj][ii] = mul_mod(tau.entry(i, j), lift, orders[ii]);
      }
    }
    part.map = GroupMap(part.group, part.group, std::move(cols));
    parts.push_back(std::move(part));
  }
  return parts;
}

GroupElem embed_component(const FinAbGroup& T, const PrimeComponent& part, const GroupElem& x) {
  GroupElem g = T.zero();
  for (size_t ii = 0; ii < part.coordinates.size(); ++ii) {
    const size_t i = part.coordinates[ii];
    const int64_t lift = crt_idempotent(T.order(i), part.group.order(ii));
    g[i] = mod64(g[i] + mul_mod(x[ii], lift, T.order(i)), T.order(i));
  }
  return g;
}

GroupMap crt_reassemble(const FinAbGroup& T, const std::vector<PrimeComponent>& parts) {
  std::vector<std::vector<int64_t>> cols(T.rank(), std::vector<int64_t>(T.rank(), 0));
  for (const PrimeComponent& part : parts) {
    const size_t r = part.coordinates.size();
    for (size_t jj = 0; jj < r; ++jj) {
      const size_t j = part.coordinates[jj];
      GroupElem img = embed_component(T, part, part.map.image_of_generator(jj));
      for (size_t i = 0; i < T.rank(); ++i) cols[j][i] = mod64(cols[j][i] + img[i], T.order(i));
    }
  }
  return GroupMap(T, T, std::move(cols));
}

}  // namespace hinv
