#pragma once

// Composition F o G of sampled set-valued functions and the verifiers for
// its structural properties and conjugation formula.
//
// Off the grids both functions follow their declared rays:
//   G(x + s d) = G(x) + s v         (G's domain rays, "descent rays")
//   F(y + s r) = F(y) + s w         (F's domain rays, "ray images")
// F o G(x) is the closed convex hull of F over the vertices of G(x), plus
// the images under F of the recession directions of G(x).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latconv/setvalued_fn.hpp"
#include "latconv/status.hpp"

namespace latconv {

struct CompositionInstance {
  SetValuedFn G;  // X grid -> upper sets of Y
  SetValuedFn F;  // Y grid -> upper sets of Z
  std::vector<Vec> x_dual_grid;
  std::vector<Rational> lambda_grid;  // empty: default scales
  char assumption_mode = 'a';
  std::vector<Vec> y_dual_directions;
  std::vector<Vec> z_dual_directions;
};

class CompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws CompositionError when some vertex of a G value is off F's grid or
/// some recession direction of G has no declared image under F.
void check_composability(const CompositionInstance& inst);

/// Image of a Y direction under F's rays; nullopt for unbounded descent.
std::optional<Vec> ray_image(const SetValuedFn& f, const Vec& ray);

UpperSet compose(const CompositionInstance& inst, const Vec& x);
/// F o G on G's grid, with domain rays (d, image of v).
SetValuedFn compose_all(const CompositionInstance& inst);

struct Implication {
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  std::optional<PairWitness> witness;
};

struct Prop31Report {
  Implication convex;
  Implication decreasing;
};

Prop31Report check_prop_3_1(const CompositionInstance& inst, int samples, std::uint64_t seed);

/// (support of F o G(x), inf over G(x) of the F scalarization).
std::pair<ExtReal, ExtReal> comp_scalarization_identity(const CompositionInstance& inst, const Vec& zstar,
                                                        const Vec& x);

struct Cor33Report {
  CheckStatus status = CheckStatus::Pass;
  bool premise = false;
  bool conclusion = false;
};

Cor33Report check_cor_3_3(const CompositionInstance& inst, const Vec& zstar);

struct AssumptionCheck {
  bool holds = false;
  std::string detail;
  std::optional<Vec> witness;
};

struct AssumptionStatus {
  char mode = 'a';
  AssumptionCheck a34, a35a, a35b;
  bool satisfied() const { return a34.holds && (a35a.holds || a35b.holds); }
};

AssumptionStatus check_assumptions(const CompositionInstance& inst);

struct Thm36Report {
  ExtReal lhs, rhs, rhs_refined, gap;
  bool weak_duality = true;
  bool formula_exact = false;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Vec> minimizer;  // y' attaining the right-hand side
  std::string detail;
};

struct Cor37Report {
  CheckStatus status = CheckStatus::Pass;
  std::optional<UpperSet> rhs;
  SetComparison comparison;
  std::string detail;
};

struct Lemma42Report {
  bool holds = true;
  std::size_t boundary_points = 0;
  std::optional<Vec> witness_x;
  std::optional<Vec> witness_y;
};

/// Caches the composed function, dual bases and assumption status of one
/// instance. All methods are const and safe to call concurrently.
class CompositionVerifier {
 public:
  explicit CompositionVerifier(CompositionInstance inst, int samples = 64, std::uint64_t seed = 42);

  const CompositionInstance& instance() const { return inst_; }
  const SetValuedFn& composition() const { return fog_; }
  const AssumptionStatus& assumptions() const { return assumptions_; }
  bool convex_premises() const { return convex_premises_; }
  bool hypotheses_hold() const { return assumptions_.satisfied() && convex_premises_; }

  /// Directions of the dual of Z+ used as z*: base plus derived normals.
  const std::vector<Vec>& z_directions() const { return z_dirs_; }
  /// Directions of the dual of Y+ (the compact cone base when one exists).
  const std::vector<Vec>& y_directions() const { return y_dirs_; }
  /// Scenario x* grid plus hull slopes of the composed scalarization.
  std::vector<Vec> x_dual_grid(const Vec& zstar) const;

  /// Candidate y' = lambda * d for the infimum, with and without refinement.
  std::vector<Vec> y_candidates(const Vec& zstar, bool refined) const;

  Thm36Report theorem_3_6(const Vec& xstar, const Vec& zstar) const;
  Cor37Report corollary_3_7(const Vec& x) const;
  Lemma42Report lemma_4_2i(const Vec& ystar, const std::vector<Vec>& ys) const;
  /// Y points probed by the section closure check: F's grid, capped by samples.
  std::vector<Vec> y_probes(int samples, std::uint64_t seed) const;

 private:
  ExtReal rhs_over(const Vec& xstar, const Vec& zstar, const std::vector<Vec>& ys, std::optional<Vec>* arg) const;

  CompositionInstance inst_;
  SetValuedFn fog_;
  AssumptionStatus assumptions_;
  bool convex_premises_ = false;
  std::optional<Vec> y_normalization_;
  std::vector<Vec> y_dirs_;
  std::vector<Vec> z_dirs_;
};

Thm36Report theorem_3_6_verify(const CompositionInstance& inst, const Vec& xstar, const Vec& zstar);
Cor37Report corollary_3_7_verify(const CompositionInstance& inst, const Vec& x);
bool lemma_4_2i_check(const CompositionInstance& inst, const Vec& y, const Vec& ystar);

/// Default scales for the y* search when the scenario gives none.
std::vector<Rational> default_lambda_grid();

}  // namespace latconv
