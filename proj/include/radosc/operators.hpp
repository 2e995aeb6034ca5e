#pragma once

// Ladder operators of the radial oscillator acting on lattice kets |s, l>:
//
//   a+-   diagonal moves (s, l) -> (s +- 1, l -+ 1)        boson pair 1
//   b+-   horizontal moves (s, l) -> (s, l +- 1)           boson pair 2
//   L+-,L3  su(1,1) on fixed-l hierarchies  (L+ = a+ b+, L- = b- a-)
//   J+-,J3  su(2) on fixed-n hierarchies    (J+ = a+ b-, J- = b+ a-)
//   C+-,C3  su(2) on s + l = const hierarchies
//
// A boundary guard ("unphysical") throws; a vanishing coefficient returns the
// zero state.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radosc/errors.hpp"
#include "radosc/statespace.hpp"

namespace radosc {

enum class OpKind {
  APlus, AMinus, BPlus, BMinus,
  LPlus, LMinus, L3,
  JPlus, JMinus, J3,
  CPlus, CMinus, C3,
  Ns, Nell,
};

constexpr std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::APlus: return "a+";
    case OpKind::AMinus: return "a-";
    case OpKind::BPlus: return "b+";
    case OpKind::BMinus: return "b-";
    case OpKind::LPlus: return "L+";
    case OpKind::LMinus: return "L-";
    case OpKind::L3: return "L3";
    case OpKind::JPlus: return "J+";
    case OpKind::JMinus: return "J-";
    case OpKind::J3: return "J3";
    case OpKind::CPlus: return "C+";
    case OpKind::CMinus: return "C-";
    case OpKind::C3: return "C3";
    case OpKind::Ns: return "Ns";
    case OpKind::Nell: return "Nl";
  }
  return "?";
}

/// Image of one basis ket: coefficient times target ket.
struct KetImage {
  double coeff;
  QNums target;
};

/// Single-ket action. Returns nullopt when the coefficient vanishes.
inline std::optional<KetImage> apply_to_ket(OpKind kind, const QNums& q) {
  const double s = q.s;
  const double l = q.ell;
  auto unphysical = [&]() -> UnphysicalState {
    return UnphysicalState(std::string(to_string(kind)) + " applied to " + to_string(q) +
                           " leaves the physical lattice");
  };
  auto image = [](double c, int s2, int l2) -> std::optional<KetImage> {
    if (c == 0.0) return std::nullopt;
    return KetImage{c, QNums{s2, l2}};
  };
  switch (kind) {
    case OpKind::APlus:
      if (q.ell == 0) throw unphysical();
      return image(std::sqrt(s + 1.0), q.s + 1, q.ell - 1);
    case OpKind::AMinus:
      return image(std::sqrt(s), q.s - 1, q.ell + 1);
    case OpKind::BPlus:
      return image(std::sqrt(s + l + 1.5), q.s, q.ell + 1);
    case OpKind::BMinus:
      if (q.ell == 0) throw unphysical();
      return image(std::sqrt(s + l + 0.5), q.s, q.ell - 1);
    case OpKind::LPlus:
      return image(std::sqrt((s + 1.0) * (s + l + 1.5)), q.s + 1, q.ell);
    case OpKind::LMinus:
      return image(std::sqrt(s * (s + l + 0.5)), q.s - 1, q.ell);
    case OpKind::L3:
      return image(s + (2.0 * l + 3.0) / 4.0, q.s, q.ell);
    case OpKind::JPlus:
      if (q.ell < 2) throw unphysical();
      return image(std::sqrt((s + 1.0) * (s + l + 0.5)), q.s + 1, q.ell - 2);
    case OpKind::JMinus:
      return image(std::sqrt(s * (s + l + 1.5)), q.s - 1, q.ell + 2);
    case OpKind::J3:
      return image(-0.25 * (2.0 * l + 1.0), q.s, q.ell);
    case OpKind::CPlus:
      return image(std::sqrt((s + 1.0) * l), q.s + 1, q.ell - 1);
    case OpKind::CMinus:
      return image(std::sqrt(s * (l + 1.0)), q.s - 1, q.ell + 1);
    case OpKind::C3:
      return image(0.5 * (s - l), q.s, q.ell);
    case OpKind::Ns:
      return image(s, q.s, q.ell);
    case OpKind::Nell:
      return image(s + l + 0.5, q.s, q.ell);
  }
  return std::nullopt;
}

inline StateVector apply(OpKind kind, const StateVector& state) {
  StateVector::Map out;
  for (const auto& [q, c] : state.amplitudes()) {
    if (auto img = apply_to_ket(kind, q)) out[img->target] += img->coeff * c;
  }
  return StateVector(std::move(out));
}

/// Applies the operators right to left: apply_product({A, B}, v) = A (B v).
inline StateVector apply_product(std::initializer_list<OpKind> ops, StateVector v) {
  for (auto it = std::rbegin(ops); it != std::rend(ops); ++it) v = apply(*it, v);
  return v;
}

/// sum_i coeff_i * Op_i + identity * I.
struct OpCombination {
  std::vector<std::pair<cplx, OpKind>> terms;
  cplx identity{};
};

inline StateVector apply(const OpCombination& comb, const StateVector& v) {
  StateVector out = comb.identity * v;
  for (const auto& [c, k] : comb.terms) out = out + c * apply(k, v);
  return out;
}

/// [A, B] v = A(B v) - B(A v).
inline StateVector commutator(OpKind a, OpKind b, const StateVector& v) {
  return apply(a, apply(b, v)) - apply(b, apply(a, v));
}

/// max over basis kets of || ([A, B] - expected) |q> ||.
inline double commutator_residual(OpKind a, OpKind b, const OpCombination& expected,
                                  const std::vector<QNums>& basis) {
  double worst = 0.0;
  for (const auto& q : basis) {
    const auto ket = StateVector::ket(q.s, q.ell);
    worst = std::max(worst, (commutator(a, b, ket) - apply(expected, ket)).norm());
  }
  return worst;
}

/// One commutation relation [A, B] = expected.
struct AlgebraRelation {
  std::string name;
  OpKind a;
  OpKind b;
  OpCombination expected;
};

/// Boson pairs, the three Lie algebras and the mixed boson/generator relations.
inline std::vector<AlgebraRelation> algebra_relations() {
  using K = OpKind;
  auto op = [](cplx c, K k) { return OpCombination{{{c, k}}, 0.0}; };
  const OpCombination zero{};
  const OpCombination id{{}, 1.0};
  return {
      {"[a-,a+]=1", K::AMinus, K::APlus, id},
      {"[b-,b+]=1", K::BMinus, K::BPlus, id},
      {"[a-,b+]=0", K::AMinus, K::BPlus, zero},
      {"[a-,b-]=0", K::AMinus, K::BMinus, zero},
      {"[a+,b+]=0", K::APlus, K::BPlus, zero},
      {"[a+,b-]=0", K::APlus, K::BMinus, zero},
      {"[L-,L+]=2L3", K::LMinus, K::LPlus, op(2.0, K::L3)},
      {"[L3,L+]=L+", K::L3, K::LPlus, op(1.0, K::LPlus)},
      {"[L3,L-]=-L-", K::L3, K::LMinus, op(-1.0, K::LMinus)},
      {"[L3,a+]=a+/2", K::L3, K::APlus, op(0.5, K::APlus)},
      {"[L3,a-]=-a-/2", K::L3, K::AMinus, op(-0.5, K::AMinus)},
      {"[L3,b+]=b+/2", K::L3, K::BPlus, op(0.5, K::BPlus)},
      {"[L3,b-]=-b-/2", K::L3, K::BMinus, op(-0.5, K::BMinus)},
      {"[L+,a-]=-b+", K::LPlus, K::AMinus, op(-1.0, K::BPlus)},
      {"[L-,a+]=b-", K::LMinus, K::APlus, op(1.0, K::BMinus)},
      {"[L+,b-]=-a+", K::LPlus, K::BMinus, op(-1.0, K::APlus)},
      {"[L-,b+]=a-", K::LMinus, K::BPlus, op(1.0, K::AMinus)},
      {"[J-,J+]=-2J3", K::JMinus, K::JPlus, op(-2.0, K::J3)},
      {"[J3,J+]=J+", K::J3, K::JPlus, op(1.0, K::JPlus)},
      {"[J3,J-]=-J-", K::J3, K::JMinus, op(-1.0, K::JMinus)},
      {"[J+,b+]=a+", K::JPlus, K::BPlus, op(1.0, K::APlus)},
      {"[J-,b-]=-a-", K::JMinus, K::BMinus, op(-1.0, K::AMinus)},
      {"[J+,a-]=-b-", K::JPlus, K::AMinus, op(-1.0, K::BMinus)},
      {"[J-,a+]=b+", K::JMinus, K::APlus, op(1.0, K::BPlus)},
      {"[J3,a+]=a+/2", K::J3, K::APlus, op(0.5, K::APlus)},
      {"[J3,a-]=-a-/2", K::J3, K::AMinus, op(-0.5, K::AMinus)},
      {"[J3,b-]=b-/2", K::J3, K::BMinus, op(0.5, K::BMinus)},
      {"[J3,b+]=-b+/2", K::J3, K::BPlus, op(-0.5, K::BPlus)},
      {"[C-,C+]=-2C3", K::CMinus, K::CPlus, op(-2.0, K::C3)},
      {"[C3,C+]=C+", K::C3, K::CPlus, op(1.0, K::CPlus)},
      {"[C3,C-]=-C-", K::C3, K::CMinus, op(-1.0, K::CMinus)},
  };
}

/// Kets |s, l> with smin <= s <= smax, lmin <= l <= lmax.
inline std::vector<QNums> lattice_block(int smin, int smax, int lmin, int lmax) {
  if (smin < 0 || lmin < 0) throw DomainError("lattice_block: bounds must be >= 0");
  std::vector<QNums> out;
  for (int ell = lmin; ell <= lmax; ++ell)
    for (int s = smin; s <= smax; ++s) out.push_back({s, ell});
  return out;
}

/// Finite su(2) representation in Hubbard form: basis index p = 1..2j+1 carries
/// S3 eigenvalue j - p + 1; S+ has entries sqrt(k(2j+1-k)) at (k, k+1).
struct RepMatrices {
  double j = 0.0;
  Eigen::MatrixXd s3;
  Eigen::MatrixXd s_plus;
  Eigen::MatrixXd s_minus;
  std::vector<QNums> basis_map;

  int dim() const { return static_cast<int>(s3.rows()); }
};

inline RepMatrices hubbard_su2_on_basis(int dim) {
  if (dim < 1) throw DomainError("hubbard_su2_on_basis: dimension must be >= 1");
  RepMatrices rep;
  rep.j = 0.5 * (dim - 1);
  rep.s3 = Eigen::MatrixXd::Zero(dim, dim);
  rep.s_plus = Eigen::MatrixXd::Zero(dim, dim);
  for (int p = 0; p < dim; ++p) rep.s3(p, p) = rep.j - p;
  for (int k = 1; k < dim; ++k) rep.s_plus(k - 1, k) = std::sqrt(k * (dim - k) * 1.0);
  rep.s_minus = rep.s_plus.transpose();
  return rep;
}

/// Representation on the energy level n: j = n/4 (n even) or (n-1)/4 (n odd),
/// basis p <-> |n, 2(p-1)>_e (n even) or |n, 2p-1>_e (n odd).
inline RepMatrices su2_rep_matrices(int n) {
  if (n < 0) throw DomainError("su2_rep_matrices: n must be >= 0");
  RepMatrices rep = hubbard_su2_on_basis(degeneracy(n));
  for (int p = 1; p <= rep.dim(); ++p) {
    const int ell = n % 2 == 0 ? 2 * (p - 1) : 2 * p - 1;
    rep.basis_map.push_back(QNums::from_energy(n, ell));
  }
  return rep;
}

/// Twice the highest weight of the level-n representation.
constexpr int su2_two_j(int n) { return n % 2 == 0 ? n / 2 : (n - 1) / 2; }

enum class DickeCase { D1, D2, D3, D4, E4a, E4b };

constexpr std::string_view to_string(DickeCase c) {
  switch (c) {
    case DickeCase::D1: return "D1";
    case DickeCase::D2: return "D2";
    case DickeCase::D3: return "D3";
    case DickeCase::D4: return "D4";
    case DickeCase::E4a: return "E4a";
    case DickeCase::E4b: return "E4b";
  }
  return "?";
}

inline std::optional<DickeCase> parse_dicke_case(std::string_view name) {
  for (auto c : {DickeCase::D1, DickeCase::D2, DickeCase::D3, DickeCase::D4, DickeCase::E4a,
                 DickeCase::E4b})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

/// Orthonormal basis of an auxiliary su(2) representation built from
/// intermediary (Dicke-like) states. vectors[p-1] has weight mu = j - p + 1.
struct DickeBasis {
  DickeCase case_id = DickeCase::D1;
  double chi = 0.0;
  std::vector<StateVector> vectors;

  int dim() const { return static_cast<int>(vectors.size()); }
  double j() const { return 0.5 * (dim() - 1); }
};

namespace detail {

/// Equal-weight superposition of energy-space kets; the k-th term carries e^{-i k chi}.
inline StateVector equal_weight(std::initializer_list<std::pair<int, int>> energy_kets, double chi) {
  StateVector::Map m;
  const double w = 1.0 / std::sqrt(static_cast<double>(energy_kets.size()));
  int k = 0;
  for (const auto& [n, ell] : energy_kets) m[QNums::from_energy(n, ell)] += w * std::polar(1.0, -chi * k++);
  return StateVector(std::move(m));
}

inline StateVector ket_e(int n, int ell) {
  const auto q = QNums::from_energy(n, ell);
  return StateVector::ket(q.s, q.ell);
}

}  // namespace detail

inline DickeBasis dicke_basis(DickeCase case_id, double chi = 0.0) {
  using detail::equal_weight;
  using detail::ket_e;
  if (!(chi >= 0.0 && chi < 2.0 * std::numbers::pi))
    throw DomainError("dicke_basis: chi must lie in [0, 2pi)");
  DickeBasis b{case_id, chi, {}};
  switch (case_id) {
    case DickeCase::D1:
      b.vectors = {ket_e(2, 0), equal_weight({{1, 1}, {3, 1}}, chi), ket_e(2, 2)};
      break;
    case DickeCase::D2:
      b.vectors = {ket_e(1, 1), equal_weight({{2, 2}, {2, 0}}, chi), ket_e(3, 1)};
      break;
    case DickeCase::D3:
      b.vectors = {ket_e(3, 1), equal_weight({{2, 2}, {4, 2}}, chi), ket_e(3, 3)};
      break;
    case DickeCase::D4:
      b.vectors = {ket_e(2, 2), equal_weight({{3, 3}, {3, 1}}, chi), ket_e(4, 2)};
      break;
    case DickeCase::E4a:
      b.vectors = {ket_e(4, 0), equal_weight({{3, 1}, {5, 1}}, chi),
                   equal_weight({{2, 2}, {4, 2}, {6, 2}}, chi), equal_weight({{3, 3}, {5, 3}}, chi),
                   ket_e(4, 4)};
      break;
    case DickeCase::E4b:
      throw DomainError("dicke_basis: no explicit basis is defined for case E4b");
  }
  return b;
}

}  // namespace radosc
