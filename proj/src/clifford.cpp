#include "skewq/clifford.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "skewq/errors.hpp"

namespace skewq {

namespace {

void check_m(int m) {
  if (m < 0 || m > kMaxGenerators) {
    throw InvalidInput("generator count must be in 0.." + std::to_string(kMaxGenerators));
  }
}

void check_generator(int m, int i) {
  if (i < 1 || i > m) {
    throw InvalidInput("generator index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(m));
  }
}

std::uint64_t unit(int i) { return std::uint64_t{1} << (i - 1); }

}  // namespace

CommutationMatrix::CommutationMatrix(int m) : m_(m) {
  check_m(m);
  mu_.assign(binomial(m, 2), 1);
}

CommutationMatrix CommutationMatrix::from_neg_mask(int m, std::uint64_t neg_mask) {
  CommutationMatrix c(m);
  for (std::size_t r = 0; r < c.mu_.size(); ++r)
    if ((neg_mask >> r) & 1) c.mu_[r] = -1;
  return c;
}

CommutationMatrix CommutationMatrix::from_neg_pairs(int m, std::span<const Pair> neg_pairs) {
  CommutationMatrix c(m);
  for (const auto& [i, j] : neg_pairs) c.set(i, j, -1);
  return c;
}

int CommutationMatrix::operator()(int i, int j) const {
  check_generator(m_, i);
  check_generator(m_, j);
  if (i == j) throw InvalidInput("mu is defined off the diagonal only");
  if (i > j) std::swap(i, j);
  return mu_[pair_rank(i, j)];
}

void CommutationMatrix::set(int i, int j, int sign) {
  check_generator(m_, i);
  check_generator(m_, j);
  if (i == j) throw InvalidInput("mu is defined off the diagonal only");
  if (sign != 1 && sign != -1) throw InvalidInput("mu must be +1 or -1");
  if (i > j) std::swap(i, j);
  mu_[pair_rank(i, j)] = static_cast<std::int8_t>(sign);
}

std::vector<Pair> CommutationMatrix::neg_pairs() const {
  std::vector<Pair> out;
  for (int i = 1; i <= m_; ++i)
    for (int j = i + 1; j <= m_; ++j)
      if (mu_[pair_rank(i, j)] < 0) out.push_back({i, j});
  return out;
}

F2Form::F2Form(int m) : m_(m) {
  check_m(m);
  rows_.assign(static_cast<std::size_t>(m), 0);
}

F2Form F2Form::from_edges(int m, std::span<const Pair> edges) {
  F2Form f(m);
  for (const auto& [i, j] : edges) f.set(i, j, true);
  return f;
}

void F2Form::set(int i, int j, bool value) {
  check_generator(m_, i);
  check_generator(m_, j);
  if (i == j) {
    if (value) throw InvalidInput("alternating form must have zero diagonal");
    return;
  }
  if (value) {
    rows_[i - 1] |= unit(j);
    rows_[j - 1] |= unit(i);
  } else {
    rows_[i - 1] &= ~unit(j);
    rows_[j - 1] &= ~unit(i);
  }
}

bool F2Form::pair(std::uint64_t x, std::uint64_t y) const {
  bool acc = false;
  for (std::uint64_t s = x; s != 0; s &= s - 1)
    acc ^= parity(rows_[static_cast<std::size_t>(std::countr_zero(s))] & y);
  return acc;
}

CommutationMatrix mu_matrix(const SignMatrix& s) {
  const int n = s.n();
  CommutationMatrix c(n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c.set(i, j, s(n, i) * s(i, j) * s(j, n));
  return c;
}

CommutationMatrix mu_matrix(const TripleSet& t) {
  const int n = t.n();
  CommutationMatrix c(n - 1);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t.contains(i, j, n)) c.set(i, j, -1);
  return c;
}

F2Form anticommutation_form(const CommutationMatrix& c) {
  F2Form f(c.m());
  for (int i = 1; i <= c.m(); ++i)
    for (int j = i + 1; j <= c.m(); ++j)
      if (c(i, j) == 1) f.set(i, j, true);
  return f;
}

int f2_rank(const F2Form& f) {
  std::vector<std::uint64_t> rows = f.rows();
  int rank = 0;
  for (int col = 0; col < f.m(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [bit](std::uint64_t r) { return (r & bit) != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != static_cast<std::size_t>(rank) && (rows[r] & bit)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

SymplecticBasis symplectic_basis(const F2Form& f) {
  SymplecticBasis basis;
  std::vector<std::uint64_t> pool;
  for (int i = 1; i <= f.m(); ++i) pool.push_back(unit(i));

  while (!pool.empty()) {
    const std::uint64_t u = pool.front();
    auto partner = std::find_if(pool.begin() + 1, pool.end(),
                                [&](std::uint64_t w) { return f.pair(u, w); });
    if (partner == pool.end()) {
      // u pairs to zero with the rest of the pool and with every pair
      // already split off, so it lies in the radical.
      basis.radical.push_back(u);
      pool.erase(pool.begin());
      continue;
    }
    const std::uint64_t v = *partner;
    pool.erase(partner);
    pool.erase(pool.begin());
    for (auto& w : pool) {
      std::uint64_t adjusted = w;
      if (f.pair(w, v)) adjusted ^= u;
      if (f.pair(w, u)) adjusted ^= v;
      w = adjusted;
    }
    basis.hyperbolic_pairs.emplace_back(u, v);
  }
  return basis;
}

std::string WedderburnType::render() const {
  std::string base = block_size == 1 ? "k" : "M_" + std::to_string(block_size) + "(k)";
  if (block_count == 1) return base;
  return base + "^" + std::to_string(block_count);
}

WedderburnType wedderburn_type(const F2Form& f) {
  const int rank = f2_rank(f);
  if (rank % 2 != 0) throw InvariantViolation("alternating form with odd rank");
  return {std::uint64_t{1} << (rank / 2), std::uint64_t{1} << (f.m() - rank)};
}

GaussianMatrix GaussianMatrix::identity(std::size_t dim) {
  GaussianMatrix id(dim);
  for (std::size_t i = 0; i < dim; ++i) id(i, i) = {1, 0};
  return id;
}

GaussianMatrix GaussianMatrix::scaled(GaussianInt s) const {
  GaussianMatrix out = *this;
  for (auto& e : out.a_) e = e * s;
  return out;
}

GaussianMatrix GaussianMatrix::kron(const GaussianMatrix& rhs) const {
  GaussianMatrix out(dim_ * rhs.dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) {
      const GaussianInt s = (*this)(r, c);
      if (s == GaussianInt{}) continue;
      for (std::size_t rr = 0; rr < rhs.dim_; ++rr)
        for (std::size_t cc = 0; cc < rhs.dim_; ++cc)
          out(r * rhs.dim_ + rr, c * rhs.dim_ + cc) = s * rhs(rr, cc);
    }
  return out;
}

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  if (a.dim_ != b.dim_) throw InvalidInput("matrix dimension mismatch");
  const std::size_t d = a.dim_;
  GaussianMatrix out(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const GaussianInt s = a(r, k);
      if (s == GaussianInt{}) continue;
      for (std::size_t c = 0; c < d; ++c) out(r, c) = out(r, c) + s * b(k, c);
    }
  return out;
}

bool GaussianMatrix::is_scalar(GaussianInt* s) const {
  if (dim_ == 0) return false;
  const GaussianInt diag = (*this)(0, 0);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if ((*this)(r, c) != (r == c ? diag : GaussianInt{})) return false;
  if (s) *s = diag;
  return true;
}

namespace {

constexpr std::uint64_t kPrime = 998244353;  // p = 1 mod 4, primitive root 3

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  for (; e; e >>= 1, b = b * b % kPrime)
    if (e & 1) r = r * b % kPrime;
  return r;
}

std::uint64_t to_field(std::int64_t x) {
  const auto p = static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(((x % p) + p) % p);
}

// Coordinates of x along the radical basis (bit k <-> radical[k]).
std::uint64_t radical_coordinates(const std::vector<std::uint64_t>& radical, std::uint64_t x) {
  // Gaussian elimination carrying combination masks.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  for (std::size_t k = 0; k < radical.size(); ++k) rows.emplace_back(radical[k], std::uint64_t{1} << k);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> echelon;
  for (auto [v, combo] : rows) {
    for (const auto& [ev, ec] : echelon)
      if (v & (ev & (~ev + 1))) {
        v ^= ev;
        combo ^= ec;
      }
    if (v) {
      // Keep echelon reduced against the new pivot.
      const std::uint64_t lead = v & (~v + 1);
      for (auto& [ev, ec] : echelon)
        if (ev & lead) {
          ev ^= v;
          ec ^= combo;
        }
      echelon.emplace_back(v, combo);
    }
  }
  std::uint64_t coords = 0;
  for (const auto& [ev, ec] : echelon)
    if (x & (ev & (~ev + 1))) {
      x ^= ev;
      coords ^= ec;
    }
  if (x != 0) throw InvariantViolation("vector outside the radical span");
  return coords;
}

GaussianMatrix pauli_x() {
  GaussianMatrix x(2);
  x(0, 1) = {1, 0};
  x(1, 0) = {1, 0};
  return x;
}

GaussianMatrix pauli_z() {
  GaussianMatrix z(2);
  z(0, 0) = {1, 0};
  z(1, 1) = {-1, 0};
  return z;
}

std::vector<GaussianMatrix> monomial_images(const std::vector<GaussianMatrix>& gens,
                                            std::size_t dim) {
  const std::size_t m = gens.size();
  std::vector<GaussianMatrix> prod(std::size_t{1} << m);
  prod[0] = GaussianMatrix::identity(dim);
  for (std::size_t a = 1; a < prod.size(); ++a) {
    const int h = std::bit_width(a) - 1;
    prod[a] = prod[a ^ (std::size_t{1} << h)] * gens[static_cast<std::size_t>(h)];
  }
  return prod;
}

}  // namespace

std::size_t modular_rank(std::span<const GaussianMatrix> mats) {
  if (mats.empty()) return 0;
  const std::uint64_t sqrt_m1 = pow_mod(3, (kPrime - 1) / 4);
  const std::size_t cols = mats.front().dim() * mats.front().dim();
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(mats.size());
  for (const auto& mat : mats) {
    if (mat.dim() * mat.dim() != cols) throw InvalidInput("matrix dimension mismatch");
    std::vector<std::uint64_t> row(cols);
    for (std::size_t e = 0; e < cols; ++e) {
      const auto& z = mat.entries()[e];
      row[e] = (to_field(z.re) + to_field(z.im) * sqrt_m1) % kPrime;
    }
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint64_t inv = pow_mod(rows[rank][col], kPrime - 2);
    for (auto& x : rows[rank]) x = x * inv % kPrime;
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const std::uint64_t factor = rows[r][col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] = (rows[r][c] + (kPrime - factor) * rows[rank][c]) % kPrime;
    }
    ++rank;
  }
  return rank;
}

RepresentationChecks verify_representation(const Representation& rep, const F2Form& f) {
  RepresentationChecks checks{true, true, true, true};
  const std::size_t d = rep.block_size;
  const GaussianMatrix id = GaussianMatrix::identity(d);
  const SymplecticBasis basis = symplectic_basis(f);

  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> central_characters;
  for (const auto& block : rep.blocks) {
    if (static_cast<int>(block.generators.size()) != f.m()) {
      checks = {};
      return checks;
    }
    for (int i = 0; i < f.m(); ++i) {
      const auto& ti = block.generators[static_cast<std::size_t>(i)];
      if (ti.dim() != d || !(ti * ti == id)) checks.involutions = false;
      for (int j = i + 1; j < f.m(); ++j) {
        const auto& tj = block.generators[static_cast<std::size_t>(j)];
        const GaussianMatrix ij = ti * tj;
        const GaussianMatrix ji = tj * ti;
        const bool anti = f(i + 1, j + 1);
        if (!(ij == (anti ? ji.scaled({-1, 0}) : ji))) checks.commutation = false;
      }
    }
    const auto mono = monomial_images(block.generators, d);
    if (modular_rank(mono) != d * d) checks.spans = false;

    std::vector<std::pair<std::int64_t, std::int64_t>> character;
    for (std::uint64_t w : basis.radical) {
      GaussianInt s;
      if (!mono[static_cast<std::size_t>(w)].is_scalar(&s)) {
        checks.distinct_blocks = false;
        break;
      }
      character.emplace_back(s.re, s.im);
    }
    central_characters.insert(character);
  }
  if (central_characters.size() != rep.blocks.size()) checks.distinct_blocks = false;
  return checks;
}

Representation explicit_representation(const CommutationMatrix& c) {
  const F2Form f = anticommutation_form(c);
  const SymplecticBasis basis = symplectic_basis(f);
  const std::size_t r = basis.hyperbolic_pairs.size();
  const std::size_t rad = basis.radical.size();

  Representation rep;
  rep.m = c.m();
  rep.block_size = std::size_t{1} << r;

  // Block-independent part of each generator: the tensor word and its phase.
  std::vector<GaussianMatrix> words;
  std::vector<std::uint64_t> radical_part;
  const GaussianMatrix x = pauli_x();
  const GaussianMatrix z = pauli_z();
  const GaussianMatrix id2 = GaussianMatrix::identity(2);
  for (int j = 1; j <= c.m(); ++j) {
    const std::uint64_t e = unit(j);
    std::uint64_t rest = e;
    GaussianMatrix word = GaussianMatrix::identity(1);
    int xz_slots = 0;
    for (const auto& [u, v] : basis.hyperbolic_pairs) {
      const bool alpha = f.pair(e, v);  // coefficient of u
      const bool beta = f.pair(e, u);   // coefficient of v
      if (alpha) rest ^= u;
      if (beta) rest ^= v;
      GaussianMatrix slot = alpha ? x : id2;
      if (beta) slot = slot * z;
      xz_slots += alpha && beta;
      word = word.kron(slot);
    }
    // (X Z)^2 = -I, so an odd number of such slots needs the phase i.
    static constexpr GaussianInt kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    words.push_back(word.scaled(kPhase[xz_slots % 4]));
    radical_part.push_back(radical_coordinates(basis.radical, rest));
  }

  for (std::uint64_t b = 0; b < (std::uint64_t{1} << rad); ++b) {
    RepresentationBlock block;
    for (std::size_t k = 0; k < rad; ++k) block.radical_signs.push_back((b >> k) & 1 ? -1 : 1);
    for (std::size_t j = 0; j < words.size(); ++j) {
      const bool negative = parity(radical_part[j] & b);
      block.generators.push_back(negative ? words[j].scaled({-1, 0}) : words[j]);
    }
    rep.blocks.push_back(std::move(block));
  }

  const RepresentationChecks checks = verify_representation(rep, f);
  if (!checks.all()) {
    throw InvariantViolation("explicit representation failed verification for mu negative pairs " +
                             std::to_string(c.neg_pairs().size()));
  }
  return rep;
}

}  // namespace skewq
