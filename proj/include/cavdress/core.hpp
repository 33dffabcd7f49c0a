#pragma once

#include <cstddef>
#include <vector>

namespace cavdress {

/* hbar and c, overridable so the whole library can run in natural units
   (hbar = c = 1) for oracle comparisons and nondimensionalized tests. */
struct PhysicalConstants {
  double hbar = 1.054571817e-34;  // J s (CODATA)
  double c = 2.99792458e8;        // m / s (exact)
};

// Shape of the ultraviolet regularization. Sharp is the model default; the
// smooth exponential variant exists only as a sensitivity knob.
enum class CutoffKind { Sharp, SmoothExponential };

/* Dimensional inputs of the single-cavity model: a mirror of mass `mass`
   bound by a harmonic trap of frequency `omega0` at equilibrium distance
   `length` from the fixed wall, with field modes retained up to
   `omega_cut`. Every other module takes its numbers from here. */
struct PhysicalParams {
  double mass = 0.0;       // kg
  double omega0 = 0.0;     // rad/s, mirror trap frequency
  double length = 0.0;     // m, equilibrium cavity length L0
  double omega_cut = 0.0;  // rad/s, ultraviolet cutoff
  PhysicalConstants constants{};
  CutoffKind cutoff = CutoffKind::Sharp;

  // Throws std::invalid_argument naming the first offending field.
  void validate() const;
};

/* Discrete mode frequencies omega_k = c k pi / L0 for k = 1..K, all at or
   below the cutoff. Equally spaced by construction; k = 0 carries zero
   coupling and is excluded. */
struct ModeBasis {
  std::vector<double> frequencies;  // rad/s, strictly increasing

  std::size_t size() const { return frequencies.size(); }
  bool empty() const { return frequencies.empty(); }
  // Mode spacing c pi / L0 (equal to the fundamental).
  double spacing() const { return frequencies.empty() ? 0.0 : frequencies.front(); }
};

/* All modes with omega_k <= omega_cut. An empty basis (cutoff below the
   fundamental) is a legal result. */
ModeBasis build_mode_basis(const PhysicalParams& p);

/* Radiation-pressure coupling energies
     C[k][j] = sign (-1)^(k+j) (hbar/2)^(3/2) / (L0 sqrt(M)) sqrt(w_k w_j / w0),
   symmetric and sign-alternating along rows and columns. `sign` is +1 for
   the left cavity and -1 for the right one; second-order energies are
   insensitive to it. */
struct CouplingMatrix {
  std::vector<double> entries;  // row-major dim x dim, joules
  std::size_t dim = 0;
  int sign = +1;

  double operator()(std::size_t k, std::size_t j) const {
    return entries[k * dim + j];
  }
};

CouplingMatrix build_coupling_matrix(const PhysicalParams& p, const ModeBasis& basis,
                                     int sign = +1);

/* Per-mode amplitude weight of the regularization: 1 for the sharp cutoff,
   exp(-omega/(2 omega_cut)) for the smooth knob (so squared quantities
   carry exp(-omega/omega_cut) per mode). */
double mode_weight(const PhysicalParams& p, double omega);

/* Static Casimir energy -pi hbar c / (24 L0) of the fixed-walls
   configuration. Reported on its own: the model's zero of energy already
   contains it, so it is never added to the dressing shifts. */
double static_casimir_energy(const PhysicalParams& p);

}  // namespace cavdress
