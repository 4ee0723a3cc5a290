#include "rootcensus/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "rootcensus/errors.hpp"
#include "rootcensus/numeric.hpp"

namespace rootcensus {

namespace {

// Canonical admissible type isomorphic to a rejected (family, rank) pair,
// where one exists.
const char* canonical_alias(Family f, int rank) {
  switch (f) {
    case Family::B:
      if (rank == 1) return "A1";
      break;
    case Family::C:
      if (rank == 1) return "A1";
      if (rank == 2) return "B2";
      break;
    case Family::D:
      if (rank == 2) return "A1 x A1 (reducible)";
      if (rank == 3) return "A3";
      break;
    case Family::E:
      if (rank == 4) return "A4";
      if (rank == 5) return "D5";
      break;
    default:
      break;
  }
  return nullptr;
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 3;
    case Family::D: return 4;
    case Family::E: return 6;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

int max_rank(Family f) {
  switch (f) {
    case Family::E: return 8;
    case Family::F: return 4;
    case Family::G: return 2;
    default: return 1 << 20; // A, B, C, D are unbounded families
  }
}

// Squared lengths of the Bourbaki simple roots, scaled so short roots have
// norm 2. Bonds follow the Dynkin diagram; in finite type the bond strength
// is determined by the two lengths.
std::vector<int> simple_norms(CartanType t) {
  const int n = t.rank;
  std::vector<int> norms(n, 2);
  switch (t.family) {
    case Family::B: // alpha_n short, the rest long
      std::fill(norms.begin(), norms.end() - 1, 4);
      break;
    case Family::C: // alpha_n long, the rest short
      norms[n - 1] = 4;
      break;
    case Family::F: // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      norms[0] = norms[1] = 4;
      break;
    case Family::G: // alpha_1 short, alpha_2 long
      norms[1] = 6;
      break;
    default:
      break; // simply laced
  }
  return norms;
}

std::vector<std::pair<int, int>> dynkin_bonds(CartanType t) {
  const int n = t.rank;
  std::vector<std::pair<int, int>> bonds;
  if (t.family == Family::D) {
    for (int i = 0; i + 1 < n - 1; ++i) bonds.emplace_back(i, i + 1);
    bonds.emplace_back(n - 3, n - 1);
  } else if (t.family == Family::E) {
    // Bourbaki: chain 1-3-4-5-...-n with the branch node 2 attached to 4.
    bonds.emplace_back(0, 2);
    for (int i = 2; i + 1 < n; ++i) bonds.emplace_back(i, i + 1);
    bonds.emplace_back(1, 3);
  } else {
    for (int i = 0; i + 1 < n; ++i) bonds.emplace_back(i, i + 1);
  }
  return bonds;
}

// Leading principal minors of the symmetrized matrix, fraction-free.
bool symmetrization_positive_definite(const CartanMatrix& cm) {
  const int n = cm.rank;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = cm.gram(i, j);
  BigInt prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k]; // Bareiss pivot = k-th leading principal minor
  }
  return true;
}

} // namespace

bool is_admissible(Family f, int rank) noexcept {
  return rank >= min_rank(f) && rank <= max_rank(f);
}

CartanType CartanType::make(Family f, int rank) {
  if (!is_admissible(f, rank)) {
    std::string msg = std::string(1, static_cast<char>(f)) + std::to_string(rank) +
                      " is not an admissible irreducible type";
    if (const char* alias = canonical_alias(f, rank))
      msg += std::string("; the canonical isomorphic type is ") + alias;
    throw InvalidTypeError(msg);
  }
  return CartanType{f, rank};
}

CartanType CartanType::parse(std::string_view s) {
  if (s.size() != 2)
    throw InvalidTypeError("type string must match [A-Ga-g][1-9]: '" + std::string(s) + "'");
  const char fc = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const char rc = s[1];
  if (fc < 'A' || fc > 'G' || rc < '1' || rc > '9')
    throw InvalidTypeError("type string must match [A-Ga-g][1-9]: '" + std::string(s) + "'");
  return make(static_cast<Family>(fc), rc - '0');
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void CartanMatrix::validate() const {
  const int n = rank;
  if (n <= 0 || static_cast<int>(a.size()) != n || static_cast<int>(d.size()) != n)
    throw ConsistencyError("Cartan matrix has inconsistent dimensions");
  int dmin = d[0];
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(a[i].size()) != n)
      throw ConsistencyError("Cartan matrix is not square");
    if (a[i][i] != 2) throw ConsistencyError("Cartan matrix diagonal entry != 2");
    if (d[i] <= 0) throw ConsistencyError("symmetrizer entries must be positive");
    dmin = std::min(dmin, d[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw ConsistencyError("positive off-diagonal Cartan entry");
      if ((a[i][j] == 0) != (a[j][i] == 0))
        throw ConsistencyError("asymmetric zero pattern in Cartan matrix");
      if (d[i] * a[i][j] != d[j] * a[j][i])
        throw ConsistencyError("symmetrizers do not symmetrize the Cartan matrix");
    }
  }
  if (dmin != 1) throw ConsistencyError("minimum symmetrizer entry must be 1");
  if (!symmetrization_positive_definite(*this))
    throw ConsistencyError("symmetrized Cartan matrix is not positive definite");
}

CartanMatrix cartan_matrix(CartanType type) {
  type = CartanType::make(type.family, type.rank); // reject aggregate-built invalids
  const int n = type.rank;
  CartanMatrix cm;
  cm.type = type;
  cm.rank = n;
  cm.a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cm.a[i][i] = 2;

  const std::vector<int> norms = simple_norms(type);
  for (auto [i, j] : dynkin_bonds(type)) {
    // 2(ai,aj)/(ai,ai) with (ai,aj) = -max(|ai|^2,|aj|^2)/2 across a bond.
    const int m = std::max(norms[i], norms[j]);
    cm.a[i][j] = -m / norms[i];
    cm.a[j][i] = -m / norms[j];
  }
  cm.d.resize(n);
  for (int i = 0; i < n; ++i) cm.d[i] = norms[i] / 2;

  cm.validate();
  return cm;
}

std::optional<int> RootSystem::index_of(const std::vector<int>& coeffs) const {
  for (int i = 0; i < size(); ++i)
    if (positive_roots[i].coeffs == coeffs) return i;
  return std::nullopt;
}

std::vector<int> RootSystem::reflect(const std::vector<int>& c, int i) const {
  int pairing = 0;
  for (int j = 0; j < cartan.rank; ++j) pairing += cartan.a[i][j] * c[j];
  std::vector<int> out = c;
  out[i] -= pairing;
  return out;
}

namespace {

int height_of(const std::vector<int>& c) {
  return std::accumulate(c.begin(), c.end(), 0);
}

int norm2_of(const CartanMatrix& cm, const std::vector<int>& c) {
  int q = 0;
  for (int i = 0; i < cm.rank; ++i)
    for (int j = 0; j < cm.rank; ++j) q += c[i] * cm.gram(i, j) * c[j];
  return q / 2;
}

} // namespace

RootSystem generate_positive_roots(const CartanMatrix& cm) {
  const int n = cm.rank;
  const int height_cap = 4 * n * *std::max_element(cm.d.begin(), cm.d.end());

  RootSystem rs;
  rs.type = cm.type;
  rs.cartan = cm;

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> worklist;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    worklist.push_back(std::move(e));
  }

  while (!worklist.empty()) {
    const std::vector<int> c = std::move(worklist.back());
    worklist.pop_back();
    for (int i = 0; i < n; ++i) {
      std::vector<int> r = rs.reflect(c, i);
      if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
      if (height_of(r) > height_cap)
        throw CapExceededError(
            "positive-root closure exceeded the height cap " + std::to_string(height_cap) +
                "; the Cartan matrix does not look finite type",
            static_cast<std::uint64_t>(height_cap));
      if (seen.insert(r).second) worklist.push_back(std::move(r));
    }
  }

  // Height ascending, descending lex within a height: alpha_i lands at index i.
  std::vector<std::vector<int>> vecs(seen.begin(), seen.end());
  std::sort(vecs.begin(), vecs.end(), [](const auto& x, const auto& y) {
    const int hx = height_of(x), hy = height_of(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });

  rs.positive_roots.reserve(vecs.size());
  for (auto& v : vecs) {
    Root r;
    r.height = height_of(v);
    r.norm2 = norm2_of(cm, v);
    r.coeffs = std::move(v);
    rs.positive_roots.push_back(std::move(r));
  }

  for (int i = 0; i < n; ++i) {
    const Root& r = rs.positive_roots[i];
    if (r.height != 1 || r.coeffs[i] != 1)
      throw ConsistencyError("simple roots are not the height-1 unit vectors");
  }

  // The highest root must dominate every positive root componentwise.
  rs.highest_root_index = rs.size() - 1;
  const std::vector<int>& top = rs.positive_roots.back().coeffs;
  for (const Root& r : rs.positive_roots)
    for (int j = 0; j < n; ++j)
      if (r.coeffs[j] > top[j])
        throw ConsistencyError("no unique componentwise-maximal positive root");

  const int top_norm = rs.positive_roots.back().norm2;
  for (Root& r : rs.positive_roots)
    r.length_class = (r.norm2 == top_norm) ? LengthClass::Long : LengthClass::Short;

  return rs;
}

RootSystem build_root_system(CartanType type) {
  return generate_positive_roots(cartan_matrix(type));
}

std::vector<int> support(const Root& beta) {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(beta.coeffs.size()); ++i)
    if (beta.coeffs[i] != 0) s.push_back(i);
  return s;
}

bool has_full_support(const Root& beta) {
  return std::all_of(beta.coeffs.begin(), beta.coeffs.end(), [](int c) { return c != 0; });
}

LengthClass length_class(const RootSystem& rs, const Root& beta) {
  return beta.norm2 == rs.highest_root().norm2 ? LengthClass::Long : LengthClass::Short;
}

} // namespace rootcensus
