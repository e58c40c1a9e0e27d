#pragma once

#include <string>
#include <vector>

#include "bclm/matcore.hpp"
#include "bclm/rng.hpp"
#include "bclm/types.hpp"

// Quantum domain objects (states, POVM triples, ensembles) and exact
// evaluation of every quantity entering the bound k_0 <= A/B.

namespace bclm {

// Denominator guard: B below this means every state is numerically
// orthogonal to the reference and the bound diverges.
inline constexpr double kDenominatorFloor = 1e-6;

inline constexpr double kStateTol = 1e-8;
// POVM checks are looser than state checks: SDP solutions carry solver-level
// error.
inline constexpr double kPovmTol = 1e-7;

struct PureState {
  CVector vec;

  int dim() const { return static_cast<int>(vec.size()); }
  CMatrix projector() const { return vec * vec.adjoint(); }
};

struct DensityMatrix {
  CMatrix mat;

  DensityMatrix() = default;
  explicit DensityMatrix(const CMatrix& m) : mat(hermitian_part(m)) {}

  int dim() const { return static_cast<int>(mat.rows()); }
};

struct PovmTriple {
  CMatrix e1, e2, e3;

  int dim() const { return static_cast<int>(e1.rows()); }
  const CMatrix& element(int k) const { return k == 0 ? e1 : (k == 1 ? e2 : e3); }
};

/// Index of the unordered pair (i, j), i > j, in the fixed enumeration
/// (1,0), (2,0), (2,1), (3,0), ...
inline int pair_index(int i, int j) { return i * (i - 1) / 2 + j; }
inline int pair_count(int n) { return n * (n - 1) / 2; }

/// A full candidate solution: reference state, n states, one POVM triple per
/// unordered pair, plus the average error rate the bound is evaluated at.
struct Ensemble {
  int d = 0;
  int n = 0;
  double eps_bar = 0.0;
  DensityMatrix rho_c;
  std::vector<DensityMatrix> states;  // n entries
  std::vector<PovmTriple> povms;      // pair_count(n) entries, pair_index order

  const PovmTriple& povm(int i, int j) const { return povms[pair_index(i, j)]; }
  PovmTriple& povm(int i, int j) { return povms[pair_index(i, j)]; }
};

struct ObjectiveBreakdown {
  double numerator_a = 0.0;
  double denominator_b = 0.0;
  double bound = 0.0;
  std::vector<double> antidist;  // per pair_index
  std::vector<double> overlaps;  // per state, omega_Q(rho_c, rho_i)
};

/// 1 - sqrt(1 - |<psi|phi>|^2); twice the minimum single-shot error
/// probability for discriminating the two pure states.
double overlap_pure(const PureState& psi, const PureState& phi);

/// 1 - ||rho - sigma||_* / 2; reduces to overlap_pure on pure inputs.
double overlap_general(const DensityMatrix& rho, const DensityMatrix& sigma);

/// trace(E1 rho_i) + trace(E2 rho_j) + trace(E3 rho_c); 0 means the triple is
/// perfectly antidistinguished by the measurement.
double antidist(const PovmTriple& povm, const DensityMatrix& rho_i,
                const DensityMatrix& rho_j, const DensityMatrix& rho_c);

/// Full objective: A = 1 + sum antidist + (3/2) n (n-1) eps_bar over
/// B = sum overlaps. Throws DegenerateDenominator when B <= kDenominatorFloor.
ObjectiveBreakdown evaluate(const Ensemble& ens);

/// Haar-distributed unit vector.
PureState random_pure(int d, Rng& rng);

/// Wishart-style random density matrix of the requested rank:
/// G G^H / trace(G G^H) with G a d x rank complex Gaussian matrix.
DensityMatrix random_density(int d, int rank, Rng& rng);

/// Real-parameter count of the underlying angle-parameterised search space,
/// (2d-1) n + (d^2-1)(n^2-n)/2. Diagnostic only.
long param_count(int d, int n);

// Invariant checks; each returns a list of human-readable violations (empty
// when valid). Used by the eval command and by tests.
std::vector<std::string> validate(const DensityMatrix& rho,
                                  double tol = kStateTol);
std::vector<std::string> validate(const PovmTriple& povm,
                                  double tol = kPovmTol);
std::vector<std::string> validate(const Ensemble& ens);

}  // namespace bclm
