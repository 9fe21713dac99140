#include "skewq/sign_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skewq/errors.hpp"

namespace skewq {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw InvalidInput("number of variables must be in 1.." + std::to_string(kMaxVariables) +
                       ", got " + std::to_string(n));
  }
}

void check_index(int n, int i) {
  if (i < 1 || i > n) {
    throw InvalidInput("index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  }
}

Triple sorted_triple(int i, int j, int k) {
  Triple t{i, j, k};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

SignMatrix::SignMatrix(int n) : n_(n) {
  check_n(n);
  eps_.assign(binomial(n, 2), 1);
}

SignMatrix SignMatrix::from_neg_pairs(int n, std::span<const Pair> neg_pairs) {
  SignMatrix s(n);
  for (const auto& [i, j] : neg_pairs) s.set(i, j, -1);
  return s;
}

int SignMatrix::operator()(int i, int j) const {
  check_index(n_, i);
  check_index(n_, j);
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  return eps_[pair_rank(i, j)];
}

void SignMatrix::set(int i, int j, int sign) {
  check_index(n_, i);
  check_index(n_, j);
  if (i == j) throw InvalidInput("diagonal coefficients are fixed to +1");
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  if (i > j) std::swap(i, j);
  eps_[pair_rank(i, j)] = static_cast<std::int8_t>(sign);
}

std::vector<Pair> SignMatrix::neg_pairs() const {
  std::vector<Pair> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (eps_[pair_rank(i, j)] < 0) out.push_back({i, j});
  return out;
}

TripleSet::TripleSet(int n) : n_(n) {
  check_n(n);
  bits_.assign((binomial(n, 3) + 63) / 64, 0);
}

TripleSet::TripleSet(int n, std::span<const Triple> triples) : TripleSet(n) {
  for (const auto& t : triples) insert(t[0], t[1], t[2]);
}

bool TripleSet::contains(int i, int j, int k) const {
  const Triple t = sorted_triple(i, j, k);
  if (t[0] < 1 || t[2] > n_ || t[0] == t[1] || t[1] == t[2]) return false;
  const std::size_t r = triple_rank(t[0], t[1], t[2]);
  return (bits_[r / 64] >> (r % 64)) & 1;
}

void TripleSet::insert(int i, int j, int k) {
  const Triple t = sorted_triple(i, j, k);
  check_index(n_, t[0]);
  check_index(n_, t[2]);
  if (t[0] == t[1] || t[1] == t[2]) {
    throw InvalidInput("triple " + to_string(t) + " has repeated indices");
  }
  const std::size_t r = triple_rank(t[0], t[1], t[2]);
  bits_[r / 64] |= std::uint64_t{1} << (r % 64);
}

std::size_t TripleSet::size() const {
  std::size_t c = 0;
  for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Triple> TripleSet::triples() const {
  std::vector<Triple> out;
  const std::size_t total = binomial(n_, 3);
  for (std::size_t r = 0; r < total; ++r)
    if ((bits_[r / 64] >> (r % 64)) & 1) out.push_back(triple_unrank(r));
  return out;
}

bool TripleSet::satisfies_parity() const {
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b)
      for (int c = b + 1; c <= n_; ++c)
        for (int d = c + 1; d <= n_; ++d) {
          const int count = contains(a, b, c) + contains(a, b, d) + contains(a, c, d) +
                            contains(b, c, d);
          if (count % 2 != 0) return false;
        }
  return true;
}

int TripleSet::compare_encoding(const TripleSet& other) const {
  if (n_ != other.n_) return n_ < other.n_ ? -1 : 1;
  for (std::size_t w = 0; w < bits_.size(); ++w) {
    const std::uint64_t diff = bits_[w] ^ other.bits_[w];
    if (diff == 0) continue;
    const std::uint64_t low = diff & (~diff + 1);
    // The string with a '0' at the first differing position is smaller.
    return (bits_[w] & low) ? 1 : -1;
  }
  return 0;
}

std::string TripleSet::encoding() const {
  const std::size_t total = binomial(n_, 3);
  std::string s(total, '0');
  for (std::size_t r = 0; r < total; ++r)
    if ((bits_[r / 64] >> (r % 64)) & 1) s[r] = '1';
  return s;
}

std::uint64_t TripleSet::mask() const {
  if (binomial(n_, 3) > 64) throw GuardViolation("triple mask needs n <= 8");
  return bits_.empty() ? 0 : bits_[0];
}

TripleSet TripleSet::from_mask(int n, std::uint64_t mask) {
  TripleSet t(n);
  const std::size_t total = binomial(n, 3);
  if (total > 64) throw GuardViolation("triple mask needs n <= 8");
  if (total < 64 && (mask >> total) != 0) throw InvalidInput("triple mask has bits beyond C(n,3)");
  if (!t.bits_.empty()) t.bits_[0] = mask;
  else if (mask != 0) throw InvalidInput("triple mask must be empty for n < 3");
  return t;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1) throw InvalidInput("permutation of an empty set");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("permutation images are not a bijection of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  check_index(n, a);
  check_index(n, b);
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(a - 1)], images[static_cast<std::size_t>(b - 1)]);
  return Permutation(std::move(images));
}

TripleSet bad_triples(const SignMatrix& s) {
  const int n = s.n();
  TripleSet t(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (s(i, j) * s(j, k) * s(k, i) < 0) t.insert(i, j, k);
  return t;
}

SignMatrix realize_sign_matrix(const TripleSet& t) {
  if (!t.satisfies_parity()) {
    throw InvalidInput("triple set " + to_string(t) +
                       " is not a two-graph (some 4-subset holds an odd number of triples)");
  }
  const int n = t.n();
  SignMatrix s(n);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t.contains(i, j, n)) s.set(i, j, -1);
  return s;
}

TripleSet apply_permutation(const TripleSet& t, const Permutation& p) {
  if (t.n() != p.n()) {
    throw InvalidInput("permutation acts on " + std::to_string(p.n()) + " points, triple set on " +
                       std::to_string(t.n()));
  }
  TripleSet out(t.n());
  for (const auto& [i, j, k] : t.triples()) out.insert(p(i), p(j), p(k));
  return out;
}

SignMatrix apply_permutation(const SignMatrix& s, const Permutation& p) {
  if (s.n() != p.n()) {
    throw InvalidInput("permutation acts on " + std::to_string(p.n()) + " points, sign matrix on " +
                       std::to_string(s.n()));
  }
  SignMatrix out(s.n());
  for (const auto& [i, j] : s.neg_pairs()) out.set(p(i), p(j), -1);
  return out;
}

TripleSet canonical_form(const TripleSet& t) {
  const int n = t.n();
  if (n > kMaxCanonicalN) {
    throw GuardViolation("canonical_form is exhaustive over S_n and limited to n <= " +
                         std::to_string(kMaxCanonicalN));
  }
  if (t.empty()) return t;

  // Precompute member triples once; relabel each candidate into a fresh set.
  const auto members = t.triples();
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  TripleSet best = t;
  do {
    TripleSet image(n);
    for (const auto& [i, j, k] : members) {
      image.insert(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)],
                   images[static_cast<std::size_t>(k - 1)]);
    }
    if (image.compare_encoding(best) < 0) best = std::move(image);
  } while (std::next_permutation(images.begin(), images.end()));
  return best;
}

OrbitInvariant orbit_invariant(const TripleSet& t) {
  OrbitInvariant inv;
  inv.degrees.assign(static_cast<std::size_t>(t.n()), 0);
  for (const auto& tr : t.triples()) {
    ++inv.triple_count;
    for (int v : tr) ++inv.degrees[static_cast<std::size_t>(v - 1)];
  }
  std::sort(inv.degrees.begin(), inv.degrees.end());
  return inv;
}

std::string to_string(const Triple& t) {
  std::ostringstream os;
  os << '{' << t[0] << ',' << t[1] << ',' << t[2] << '}';
  return os.str();
}

std::string to_string(const TripleSet& t) {
  std::string s = "{";
  bool first = true;
  for (const auto& tr : t.triples()) {
    if (!first) s += ',';
    s += to_string(tr);
    first = false;
  }
  return s + "}";
}

}  // namespace skewq
