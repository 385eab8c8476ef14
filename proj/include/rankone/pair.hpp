#pragma once

#include <string>
#include <string_view>

#include "rankone/weights.hpp"

namespace rankone {

enum class PairKind { OddSphere, EvenSphere, ComplexProj, QuaternionProj, CayleyPlane };

// One of the five compact rank-one symmetric pairs (G, K).
//   OddSphere(n)      SO(2n)/SO(2n-1)          n >= 2
//   EvenSphere(n)     SO(2n+1)/SO(2n)          n >= 2
//   ComplexProj(n)    SU(n+1)/S(U(n) x U(1))   n >= 2
//   QuaternionProj(n) Sp(n+1)/Sp(n) x Sp(1)    n >= 1
//   CayleyPlane       F4/Spin(9)
class SymmetricPair {
 public:
  static SymmetricPair odd_sphere(int n);
  static SymmetricPair even_sphere(int n);
  static SymmetricPair complex_projective(int n);
  static SymmetricPair quaternion_projective(int n);
  static SymmetricPair cayley_plane();
  // "so-odd", "so-even", "su", "sp", "f4"; n is ignored for f4.
  static SymmetricPair parse(std::string_view key, int n);

  PairKind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  const RootSystem& g() const noexcept { return g_; }
  const RootSystem& k() const noexcept { return k_; }
  const Weight& direction() const noexcept { return direction_; }
  int manifold_dim() const noexcept;
  std::string key() const;
  std::string name() const;

  // Restriction of a G-weight to the maximal torus of K.
  Weight restrict_weight(const Weight& w) const;
  LatticeVector restrict_lattice(const LatticeVector& v) const;

  // Validate user-provided weights; SU coordinates are projected first.
  Weight g_weight(const Weight& w) const;
  Weight k_weight(const Weight& w) const;

  friend bool operator==(const SymmetricPair& a, const SymmetricPair& b) {
    return a.kind_ == b.kind_ && a.n_ == b.n_;
  }

 private:
  SymmetricPair(PairKind kind, int n, RootSystem g, RootSystem k, Weight direction)
      : kind_(kind), n_(n), g_(std::move(g)), k_(std::move(k)), direction_(std::move(direction)) {}

  PairKind kind_;
  int n_;
  RootSystem g_;
  RootSystem k_;
  Weight direction_;
};

}  // namespace rankone
