#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankone/rational.hpp"

namespace rankone {

// Bad input: non-dominant weights, mismatched systems, out-of-range parameters.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coordinates in the orthonormal epsilon basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight zero(std::size_t dim) { return Weight(std::vector<Rational>(dim)); }
  // epsilon_{i+1}
  static Weight unit(std::size_t dim, std::size_t i);
  // "[4,3,3]", "[11/2,5/2]" or the JSON form with quoted rationals.
  static Weight parse(std::string_view text);

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  bool is_zero() const noexcept;

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  Weight& operator*=(const Rational& c);
  Weight operator-() const;
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
  friend Weight operator*(const Rational& c, Weight w) { return w *= c; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& lhs, const Weight& rhs) { return lhs.coords_ <=> rhs.coords_; }

  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

Rational inner(const Weight& x, const Weight& y);

// Mean subtraction onto the coordinate-sum-zero hyperplane.
Weight pr(const Weight& v);

// Scaled integer coordinates used by the hot loops.
using LatticeVector = std::vector<std::int64_t>;

struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector& v) const noexcept;
};

enum class Family { A, B, C, D, F4 };
enum class Role { G, K };
enum class LatticeKind { Integer, IntegerOrHalf, SumZero };

class RootSystem {
 public:
  // SU(rank+1), SO(2 rank+1), Sp(rank), SO(2 rank) with their integral lattices.
  static RootSystem classical(Family family, int rank, Role role = Role::G);
  static RootSystem f4();
  // B4 with the spin lattice, sitting inside F4 on the same torus.
  static RootSystem spin9();
  // S(U(n) x U(1)) in the n+1 coordinates of SU(n+1).
  static RootSystem su_isotropy(int n);
  // Sp(n) x Sp(1) in the n+1 coordinates of Sp(n+1).
  static RootSystem sp_isotropy(int n);
  // "D3", "B2", "A3", "C3", "F4".
  static RootSystem parse(std::string_view name);

  const std::string& name() const;
  Family family() const;
  int rank() const;
  Role role() const;
  LatticeKind lattice() const;
  std::size_t dim() const;
  std::int64_t scale() const;

  const std::vector<Weight>& positive_roots() const;
  const std::vector<Weight>& simple_roots() const;
  const Weight& rho() const;
  // Fundamental weights in simple-root order; throws for systems with a center.
  const std::vector<Weight>& fundamental_weights() const;

  bool in_lattice(const Weight& w) const;
  // Dominant and integral.
  bool is_dominant(const Weight& w) const;
  void require_dominant(const Weight& w, std::string_view what) const;
  // pr for SU-type coordinates, identity otherwise; checks the length.
  Weight canonical(const Weight& w) const;

  LatticeVector to_lattice(const Weight& w) const;
  Weight from_lattice(const LatticeVector& v) const;
  const std::vector<LatticeVector>& positive_lattice() const;
  const std::vector<LatticeVector>& simple_lattice() const;
  const LatticeVector& rho_lattice() const;
  bool lattice_dominant(const LatticeVector& v) const;
  void reflect(LatticeVector& v, std::size_t simple_index) const;
  LatticeVector dominant_conjugate(LatticeVector v) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.name() == b.name(); }

 private:
  struct Data;
  explicit RootSystem(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static RootSystem build(std::shared_ptr<Data> d);
  std::shared_ptr<const Data> d_;
};

Weight rho(const RootSystem& system);

// Highest weight of the contragredient representation.
Weight dual_weight(const RootSystem& system, const Weight& lambda);

std::vector<Weight> enumerate_dominant(const RootSystem& system, const Rational& casimir_bound);

std::uint64_t weyl_dim(const RootSystem& system, const Weight& lambda);

// Dominant weights of one irreducible with their multiplicities, in lattice form,
// ordered by decreasing |mu + rho|^2.
struct DominantCharacter {
  std::vector<std::pair<LatticeVector, std::int64_t>> entries;
  std::uint64_t dimension = 0;
};

// Freudenthal recursion over dominant weights; memoized, thread safe.
std::shared_ptr<const DominantCharacter> dominant_character(const RootSystem& system, const Weight& lambda);

// Every weight of the irreducible, lattice form, sorted lexicographically.
std::vector<std::pair<LatticeVector, std::int64_t>> lattice_weights(const RootSystem& system, const Weight& lambda);

std::map<Weight, std::int64_t> weight_multiplicities(const RootSystem& system, const Weight& lambda);

void clear_character_cache();

// F4 data in the coordinates used throughout: omega_i and the Spin(9) weights upsilon_i.
Weight f4_omega(int i);
Weight spin9_upsilon(int i);

}  // namespace rankone
