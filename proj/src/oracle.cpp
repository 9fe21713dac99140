#include "skewq/oracle.hpp"

#include <bit>
#include <set>

#include "skewq/errors.hpp"
#include "skewq/exact_linalg.hpp"

namespace skewq {

AlgebraTable::AlgebraTable(int m, std::vector<std::int8_t> sigma) : m_(m), sigma_(std::move(sigma)) {
  if (m < 0 || m > kMaxOracleGenerators) {
    throw GuardViolation("algebra tables are limited to m <= " +
                         std::to_string(kMaxOracleGenerators));
  }
  if (sigma_.size() != (std::size_t{1} << (2 * m))) throw InvalidInput("sigma table has wrong size");
}

AlgebraElement AlgebraTable::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  const std::size_t dim = dimension();
  if (x.size() != dim || y.size() != dim) throw InvalidInput("element length differs from 2^m");
  AlgebraElement out(dim);
  for (std::uint32_t a = 0; a < dim; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (std::uint32_t b = 0; b < dim; ++b) {
      if (sgn(y[b]) == 0) continue;
      const mpq_class term = x[a] * y[b];
      if (sigma(a, b) > 0) out[a ^ b] += term;
      else out[a ^ b] -= term;
    }
  }
  return out;
}

AlgebraElement AlgebraTable::unit() const { return monomial(0); }

AlgebraElement AlgebraTable::monomial(std::uint32_t a, const mpq_class& coeff) const {
  AlgebraElement e(dimension());
  e.at(a) = coeff;
  return e;
}

bool AlgebraTable::associative_at(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
  return sigma(a, b) * sigma(a ^ b, c) == sigma(b, c) * sigma(a, b ^ c);
}

AlgebraTable structure_constants(const CommutationMatrix& c) {
  const int m = c.m();
  if (m > kMaxOracleGenerators) {
    throw GuardViolation("algebra tables are limited to m <= " +
                         std::to_string(kMaxOracleGenerators));
  }
  // flips[i]: generators j < i whose transposition past t_i costs -mu_ij = -1.
  std::vector<std::uint32_t> flips(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j < i; ++j)
      if (c(i, j) == 1) flips[i - 1] |= 1u << (j - 1);

  const std::uint32_t dim = 1u << m;
  std::vector<std::int8_t> sigma(std::size_t{dim} * dim);
  for (std::uint32_t a = 0; a < dim; ++a)
    for (std::uint32_t b = 0; b < dim; ++b) {
      int inversions = 0;
      for (std::uint32_t s = a; s != 0; s &= s - 1)
        inversions += std::popcount(flips[static_cast<std::size_t>(std::countr_zero(s))] & b);
      sigma[(std::size_t{a} << m) | b] = (inversions & 1) ? -1 : 1;
    }
  return AlgebraTable(m, std::move(sigma));
}

std::size_t center_dimension(const AlgebraTable& tab) {
  const std::uint32_t dim = static_cast<std::uint32_t>(tab.dimension());
  // z t_i - t_i z = sum_a z_a (sigma(a,e_i) - sigma(e_i,a)) t^{a xor e_i}:
  // one equation per generator and output monomial.
  RationalMatrix rows;
  for (int i = 0; i < tab.m(); ++i) {
    const std::uint32_t e = 1u << i;
    for (std::uint32_t out = 0; out < dim; ++out) {
      std::vector<mpq_class> row(dim);
      const std::uint32_t a = out ^ e;
      row[a] = tab.sigma(a, e) - tab.sigma(e, a);
      rows.push_back(std::move(row));
    }
  }
  return dim - rational_rank(std::move(rows));
}

bool semisimplicity_check(const AlgebraTable& tab) {
  const std::uint32_t dim = static_cast<std::uint32_t>(tab.dimension());
  // Trace of left multiplication by t^c, read off the diagonal of its matrix.
  std::vector<mpq_class> trace(dim);
  for (std::uint32_t c = 0; c < dim; ++c)
    for (std::uint32_t x = 0; x < dim; ++x)
      if ((c ^ x) == x) trace[c] += tab.sigma(c, x);

  RationalMatrix gram(dim, std::vector<mpq_class>(dim));
  for (std::uint32_t a = 0; a < dim; ++a)
    for (std::uint32_t b = 0; b < dim; ++b) gram[a][b] = tab.sigma(a, b) * trace[a ^ b];
  return rational_rank(std::move(gram)) == dim;
}

bool idempotent_check(const AlgebraTable& tab, std::span<const AlgebraElement> elements) {
  const std::size_t dim = tab.dimension();
  AlgebraElement sum(dim);
  const AlgebraElement zero(dim);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].size() != dim) throw InvalidInput("element length differs from 2^m");
    if (tab.multiply(elements[i], elements[i]) != elements[i]) return false;
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (i != j && tab.multiply(elements[i], elements[j]) != zero) return false;
    for (std::size_t k = 0; k < dim; ++k) sum[k] += elements[i][k];
  }
  return sum == tab.unit();
}

std::string Certificate::failures() const {
  std::string s;
  auto add = [&s](bool ok, const char* what) {
    if (ok) return;
    if (!s.empty()) s += "; ";
    s += what;
  };
  add(center_matches, "center dimension differs from block count");
  add(semisimple, "trace form is degenerate");
  add(representation_ok, "explicit representation fails relations, span or block count");
  add(dimension_law, "block_count * block_size^2 != 2^m");
  return s;
}

namespace {

// Relations and spans judged against the table, not against the F_2 form
// the representation was built from.
bool representation_matches_table(const AlgebraTable& tab, const WedderburnType& w,
                                  const Representation& rep) {
  const int m = tab.m();
  const std::size_t d = static_cast<std::size_t>(w.block_size);
  if (rep.m != m || rep.block_size != d || rep.blocks.size() != w.block_count) return false;

  std::vector<std::uint32_t> central;
  for (std::uint32_t a = 0; a < tab.dimension(); ++a) {
    bool commutes = true;
    for (int i = 0; i < m && commutes; ++i)
      commutes = tab.sigma(a, 1u << i) == tab.sigma(1u << i, a);
    if (commutes) central.push_back(a);
  }

  const GaussianMatrix id = GaussianMatrix::identity(d);
  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> characters;
  for (const auto& block : rep.blocks) {
    if (block.generators.size() != static_cast<std::size_t>(m)) return false;
    for (int i = 0; i < m; ++i) {
      const auto& ti = block.generators[static_cast<std::size_t>(i)];
      if (ti.dim() != d) return false;
      const std::uint32_t ei = 1u << i;
      if (!(ti * ti == id.scaled({tab.sigma(ei, ei), 0}))) return false;
      for (int j = i + 1; j < m; ++j) {
        const std::uint32_t ej = 1u << j;
        const auto& tj = block.generators[static_cast<std::size_t>(j)];
        const int ratio = tab.sigma(ei, ej) * tab.sigma(ej, ei);
        if (!(ti * tj == (tj * ti).scaled({ratio, 0}))) return false;
      }
    }
    std::vector<GaussianMatrix> mono(tab.dimension());
    for (std::uint32_t a = 0; a < tab.dimension(); ++a) {
      GaussianMatrix p = id;
      for (std::uint32_t s = a; s != 0; s &= s - 1)
        p = p * block.generators[static_cast<std::size_t>(std::countr_zero(s))];
      mono[a] = std::move(p);
    }
    if (modular_rank(mono) != d * d) return false;

    std::vector<std::pair<std::int64_t, std::int64_t>> character;
    for (std::uint32_t a : central) {
      GaussianInt s;
      if (!mono[a].is_scalar(&s)) return false;
      character.emplace_back(s.re, s.im);
    }
    characters.insert(std::move(character));
  }
  return characters.size() == rep.blocks.size();
}

}  // namespace

Certificate certify_wedderburn(const AlgebraTable& tab, const WedderburnType& w,
                               const Representation& rep) {
  Certificate cert;
  cert.center_matches = center_dimension(tab) == w.block_count;
  cert.semisimple = semisimplicity_check(tab);
  cert.representation_ok = representation_matches_table(tab, w, rep);
  cert.dimension_law = w.block_count * w.block_size * w.block_size == tab.dimension();
  return cert;
}

Certificate certify(const CommutationMatrix& c) {
  const AlgebraTable tab = structure_constants(c);
  const WedderburnType w = wedderburn_type(anticommutation_form(c));
  const Representation rep = explicit_representation(c);
  return certify_wedderburn(tab, w, rep);
}

}  // namespace skewq
