#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rootcensus {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One isomorphism class of irreducible crystallographic root systems.
///
/// Admissible ranks: A n>=1, B n>=2, C n>=3, D n>=4, E n in {6,7,8}, F n=4,
/// G n=2. Each isomorphism class appears exactly once; low-rank coincidences
/// (C2=B2, D3=A3, ...) are rejected with a message naming the canonical type.
struct CartanType {
  Family family;
  int rank;

  /// Parses "<letter><rank>" case-insensitively ("B4", "e8"). Throws
  /// InvalidTypeError on malformed strings and inadmissible ranks.
  static CartanType parse(std::string_view s);

  /// Validating constructor used by parse(); throws InvalidTypeError.
  static CartanType make(Family family, int rank);

  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

bool is_admissible(Family family, int rank) noexcept;

/// Integer Cartan matrix with convention a[i][j] = 2(ai,aj)/(ai,ai), plus the
/// positive symmetrizers d (min d = 1) that make diag(d)*a symmetric. Simple
/// roots are numbered in Bourbaki order, 0-based.
struct CartanMatrix {
  CartanType type;
  int rank = 0;
  std::vector<std::vector<int>> a;
  std::vector<int> d;

  /// (ai,aj) scaled so that short simple roots have squared length 2.
  int gram(int i, int j) const { return d[i] * a[i][j]; }

  /// Checks the structural invariants: diagonal 2, nonpositive off-diagonal
  /// entries with matching zero pattern, d[i]*a[i][j] == d[j]*a[j][i] with
  /// min d = 1, and positive definiteness of the symmetrization. Throws
  /// ConsistencyError on violation.
  void validate() const;
};

/// The standard Cartan matrix of an admissible type.
CartanMatrix cartan_matrix(CartanType type);

enum class LengthClass { Long, Short };

/// A positive root as its nonnegative integer coefficient vector over the
/// simple basis, with derived per-root attributes.
struct Root {
  std::vector<int> coeffs;
  int height = 0;                               // sum of coeffs
  int norm2 = 0;                                // c^T (DA) c / 2; equals d[i] for simples
  LengthClass length_class = LengthClass::Long; // Long iff norm2 == norm2(highest root)

  friend bool operator==(const Root&, const Root&) = default;
};

/// All positive roots of a finite-type Cartan matrix, ordered by height and,
/// within a height, by descending lexicographic order on coefficients. The
/// simple root alpha_i therefore sits at index i.
struct RootSystem {
  CartanType type;
  CartanMatrix cartan;
  std::vector<Root> positive_roots;
  int highest_root_index = -1;

  int rank() const { return cartan.rank; }
  int size() const { return static_cast<int>(positive_roots.size()); }
  const Root& highest_root() const { return positive_roots[highest_root_index]; }

  /// Index of the root with the given coefficient vector, if present.
  std::optional<int> index_of(const std::vector<int>& coeffs) const;

  /// Image of coefficient vector c under the simple reflection s_i:
  /// c - (sum_j a[i][j] c[j]) e_i.
  std::vector<int> reflect(const std::vector<int>& c, int i) const;
};

/// Closes the simple roots under simple reflections, keeping vectors with
/// all-nonnegative coefficients. Termination is guarded by a height cap of
/// 4 * n * max(d); matrices that are not of finite type trip the cap and
/// raise CapExceededError instead of looping forever.
RootSystem generate_positive_roots(const CartanMatrix& cm);

/// Convenience: cartan_matrix + generate_positive_roots.
RootSystem build_root_system(CartanType type);

/// {i : coeffs[i] != 0}, as sorted 0-based simple indices.
std::vector<int> support(const Root& beta);

/// True iff every simple root appears in beta with nonzero coefficient.
bool has_full_support(const Root& beta);

LengthClass length_class(const RootSystem& rs, const Root& beta);

} // namespace rootcensus
