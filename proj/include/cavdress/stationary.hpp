#pragma once

#include <cstddef>
#include <vector>

#include "cavdress/core.hpp"

namespace cavdress {

/* Amplitudes of the two-photon-one-phonon components of the interacting
   ground state,
     D[j][k] = (-1)^(j+k) (1/L0) sqrt(hbar w_j w_k / (8 M w0)) / (w0 + w_k + w_j),
   stored unnormalized (normalization would only matter at fourth order). */
struct DressedAmplitudes {
  std::vector<double> entries;  // row-major dim x dim, dimensionless
  std::size_t dim = 0;

  double operator()(std::size_t j, std::size_t k) const {
    return entries[j * dim + k];
  }
};

DressedAmplitudes dressed_amplitudes(const PhysicalParams& p, const ModeBasis& basis);

/* Second-order stationary energy shifts. e_total is the ground-state shift;
   the field/mirror/interaction pieces split it per Hamiltonian term and obey
     e_interaction = 2 e_total   (exactly)
     e_field + e_mirror = -e_total. */
struct StationaryShifts {
  double e_total = 0.0;        // J, < 0
  double e_field = 0.0;        // J, > 0
  double e_mirror = 0.0;       // J, > 0
  double e_interaction = 0.0;  // J, = 2 e_total
};

StationaryShifts stationary_shifts(const PhysicalParams& p, const ModeBasis& basis);

}  // namespace cavdress
