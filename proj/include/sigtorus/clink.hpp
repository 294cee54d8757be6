#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sigtorus/angle.hpp"
#include "sigtorus/hermitian.hpp"
#include "sigtorus/laurent.hpp"
#include "sigtorus/matrix.hpp"

namespace sigtorus {

/// One sign per color, each +1 or -1.
using SignVector = std::vector<int>;

/// "+-+" style label of a sign vector.
std::string sign_string(const SignVector& eps);
SignVector parse_sign_string(const std::string& s);
/// All 2^mu sign vectors, (+,...,+) first, in binary order with '-' as 1.
std::vector<SignVector> all_sign_vectors(std::size_t mu);

/// The 2^mu generalized Seifert matrices A^eps of a C-complex basis.
/// Invariant: every A^eps is n x n and A^{-eps} = (A^eps)^T.
class SeifertSystem {
 public:
  SeifertSystem() = default;
  /// Throws DimensionMismatch, SchemaError (missing sign vector) or
  /// SymmetryViolation (transpose rule broken; the message names the sign vector).
  SeifertSystem(std::size_t mu, std::map<SignVector, IntMatrix> matrices);

  /// mu colors, n x n zero matrices.
  static SeifertSystem zero(std::size_t mu, std::size_t n);
  /// The same matrix A for every sign vector; A must be symmetric.
  static SeifertSystem constant(std::size_t mu, const IntMatrix& a);

  std::size_t colors() const { return mu_; }
  std::size_t size() const { return n_; }
  const IntMatrix& at(const SignVector& eps) const;
  const std::map<SignVector, IntMatrix>& matrices() const { return matrices_; }

 private:
  std::size_t mu_ = 0;
  std::size_t n_ = 0;
  std::map<SignVector, IntMatrix> matrices_;
};

/// A component of a colored link: color and index within the color, both 0-based.
/// Serialized as "color.index" with 1-based numbers.
struct ComponentId {
  std::size_t color = 0;
  std::size_t index = 0;
  friend auto operator<=>(const ComponentId&, const ComponentId&) = default;
};

/// A mu-colored link described by C-complex data.
///
/// Sublinks are keyed by the sorted 0-based list of colors they keep; their own
/// colors are renumbered 0..k-1 in that order. Recursive members are shared
/// and immutable.
class ColoredLink {
 public:
  ColoredLink() = default;
  ColoredLink(std::vector<std::size_t> components_per_color, SeifertSystem seifert);

  std::size_t colors() const { return components_per_color_.size(); }
  const std::vector<std::size_t>& components_per_color() const { return components_per_color_; }
  std::size_t component_count() const { return offsets_.empty() ? 0 : offsets_.back(); }
  /// Global 0-based index of a component.
  std::size_t global_index(ComponentId c) const;
  ComponentId component(std::size_t global) const;

  const SeifertSystem& seifert() const { return seifert_; }

  /// lk(a, b) between two distinct components; 0 when never set.
  std::int64_t linking(ComponentId a, ComponentId b) const;
  std::int64_t linking_global(std::size_t a, std::size_t b) const;
  void set_linking(ComponentId a, ComponentId b, std::int64_t lk);
  /// lk(L_i, L_j) summed over components of the two colors (i != j).
  std::int64_t color_linking(std::size_t i, std::size_t j) const;

  const std::optional<RationalFunction>& conway() const { return conway_; }
  void set_conway(std::optional<RationalFunction> nabla);

  int rank_alexander() const { return rank_alexander_; }
  bool rank_supplied() const { return rank_supplied_; }
  void set_rank_alexander(int rank);

  using SublinkMap = std::map<std::vector<std::size_t>, std::shared_ptr<const ColoredLink>>;
  const SublinkMap& sublinks() const { return sublinks_; }
  void set_sublink(std::vector<std::size_t> colors_kept, ColoredLink sub);
  /// L' = L minus color 0, or nullptr when absent.
  const ColoredLink* sublink_without_first() const;

  const ColoredLink* underlying_oriented() const { return underlying_.get(); }
  void set_underlying_oriented(ColoredLink oriented);

 private:
  std::vector<std::size_t> components_per_color_;
  std::vector<std::size_t> offsets_;
  SeifertSystem seifert_;
  IntMatrix linking_;
  std::optional<RationalFunction> conway_;
  int rank_alexander_ = 0;
  bool rank_supplied_ = false;
  SublinkMap sublinks_;
  std::shared_ptr<const ColoredLink> underlying_;
};

/// H(omega) = sum_eps prod_j (1 - conj(omega_j)^{eps_j}) A^eps. Defined on the
/// whole torus; it is the zero matrix at omega = (1, ..., 1).
HermitianMatrix assemble_H(const ColoredLink& link, const TorusPoint& omega);

struct SignatureNullity {
  int sigma = 0;
  int eta = 0;
  int dimension = 0;
  friend bool operator==(const SignatureNullity&, const SignatureNullity&) = default;
};

/// sum_eps |prod_j (1 - conj(omega_j)^{eps_j})| * ||A^eps||_F, the size of the
/// terms that make up H(omega). Cancellation far below it means an exact zero.
double term_scale(const ColoredLink& link, const TorusPoint& omega);

/// Relative zero threshold used by signature_nullity: tol * prod_j sin(pi theta_j),
/// floored at 64 ulp. Near the corner a color whose two Seifert matrices agree
/// damps H by |1 - omega_j|, so a fixed threshold would swallow real eigenvalues.
double zero_threshold(const TorusPoint& omega, double tol);

/// sigma_L(omega), eta_L(omega). Throws BoundaryPoint if some omega_j = 1.
///
/// The inertia is taken on H(omega) / term_scale. Positive scaling leaves the
/// inertia unchanged; dividing by the term size rather than by ||H|| keeps
/// the zero threshold meaningful both near the boundary, where every entry is
/// tiny, and for matrices that are exactly singular. Coefficients are built
/// from exactly reduced angles so their rounding stays at the ulp level.
SignatureNullity signature_nullity(const ColoredLink& link, const TorusPoint& omega,
                                   double tol = kDefaultTolerance);

/// Linking matrix of the oriented link eps_1 L_1 u ... u eps_mu L_mu.
/// Off-diagonal eps_i eps_j lk(K_i, K_j); diagonal makes each row sum to zero.
IntMatrix linking_matrix(const ColoredLink& link, const SignVector& eps_per_color);
IntMatrix linking_matrix(const ColoredLink& link);

}  // namespace sigtorus
