#include "rankone/pair.hpp"

namespace rankone {

SymmetricPair SymmetricPair::odd_sphere(int n) {
  if (n < 2) throw DomainError("SO(2n)/SO(2n-1) needs n >= 2");
  const auto d = static_cast<std::size_t>(n);
  return SymmetricPair(PairKind::OddSphere, n, RootSystem::classical(Family::D, n),
                       RootSystem::classical(Family::B, n - 1, Role::K), Weight::unit(d, 0));
}

SymmetricPair SymmetricPair::even_sphere(int n) {
  if (n < 2) throw DomainError("SO(2n+1)/SO(2n) needs n >= 2");
  const auto d = static_cast<std::size_t>(n);
  return SymmetricPair(PairKind::EvenSphere, n, RootSystem::classical(Family::B, n),
                       RootSystem::classical(Family::D, n, Role::K), Weight::unit(d, 0));
}

SymmetricPair SymmetricPair::complex_projective(int n) {
  if (n < 2) throw DomainError("SU(n+1)/S(U(n)xU(1)) needs n >= 2");
  const auto d = static_cast<std::size_t>(n) + 1;
  return SymmetricPair(PairKind::ComplexProj, n, RootSystem::classical(Family::A, n), RootSystem::su_isotropy(n),
                       Weight::unit(d, 0) - Weight::unit(d, d - 1));
}

SymmetricPair SymmetricPair::quaternion_projective(int n) {
  if (n < 1) throw DomainError("Sp(n+1)/Sp(n)xSp(1) needs n >= 1");
  const auto d = static_cast<std::size_t>(n) + 1;
  return SymmetricPair(PairKind::QuaternionProj, n, RootSystem::classical(Family::C, n + 1),
                       RootSystem::sp_isotropy(n), Weight::unit(d, 0) + Weight::unit(d, 1));
}

SymmetricPair SymmetricPair::cayley_plane() {
  return SymmetricPair(PairKind::CayleyPlane, 0, RootSystem::f4(), RootSystem::spin9(), Weight{1, 0, 0, 0});
}

SymmetricPair SymmetricPair::parse(std::string_view key, int n) {
  if (key == "so-odd") return odd_sphere(n);
  if (key == "so-even") return even_sphere(n);
  if (key == "su") return complex_projective(n);
  if (key == "sp") return quaternion_projective(n);
  if (key == "f4") return cayley_plane();
  throw DomainError("unknown pair '" + std::string(key) + "' (expected so-odd, so-even, su, sp, f4)");
}

int SymmetricPair::manifold_dim() const noexcept {
  switch (kind_) {
    case PairKind::OddSphere: return 2 * n_ - 1;
    case PairKind::EvenSphere: return 2 * n_;
    case PairKind::ComplexProj: return 2 * n_;
    case PairKind::QuaternionProj: return 4 * n_;
    case PairKind::CayleyPlane: return 16;
  }
  return 0;
}

std::string SymmetricPair::key() const {
  switch (kind_) {
    case PairKind::OddSphere: return "so-odd";
    case PairKind::EvenSphere: return "so-even";
    case PairKind::ComplexProj: return "su";
    case PairKind::QuaternionProj: return "sp";
    case PairKind::CayleyPlane: return "f4";
  }
  return {};
}

std::string SymmetricPair::name() const {
  const std::string n = std::to_string(n_);
  switch (kind_) {
    case PairKind::OddSphere: return "SO(" + std::to_string(2 * n_) + ")/SO(" + std::to_string(2 * n_ - 1) + ")";
    case PairKind::EvenSphere: return "SO(" + std::to_string(2 * n_ + 1) + ")/SO(" + std::to_string(2 * n_) + ")";
    case PairKind::ComplexProj: return "SU(" + std::to_string(n_ + 1) + ")/S(U(" + n + ")xU(1))";
    case PairKind::QuaternionProj: return "Sp(" + std::to_string(n_ + 1) + ")/Sp(" + n + ")xSp(1)";
    case PairKind::CayleyPlane: return "F4/Spin(9)";
  }
  return {};
}

Weight SymmetricPair::restrict_weight(const Weight& w) const {
  if (w.size() != g_.dim()) throw DomainError("weight " + w.str() + " does not belong to " + g_.name());
  if (kind_ != PairKind::OddSphere) return w;
  std::vector<Rational> c(w.begin(), w.end() - 1);
  return Weight(std::move(c));
}

LatticeVector SymmetricPair::restrict_lattice(const LatticeVector& v) const {
  if (kind_ != PairKind::OddSphere) return v;
  return LatticeVector(v.begin(), v.end() - 1);
}

Weight SymmetricPair::g_weight(const Weight& w) const {
  Weight c = g_.canonical(w);
  g_.require_dominant(c, "G highest weight");
  return c;
}

Weight SymmetricPair::k_weight(const Weight& w) const {
  Weight c = k_.canonical(w);
  k_.require_dominant(c, "K highest weight");
  return c;
}

}  // namespace rankone
