#include "cavdress/core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cavdress {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0))
    throw std::invalid_argument(std::string(name) + " must be positive (got " +
                                std::to_string(v) + ")");
}

}  // namespace

void PhysicalParams::validate() const {
  require_positive(constants.hbar, "hbar");
  require_positive(constants.c, "c");
  require_positive(mass, "mass");
  require_positive(omega0, "omega0");
  require_positive(length, "length");
  require_positive(omega_cut, "omega_cut");
}

ModeBasis build_mode_basis(const PhysicalParams& p) {
  p.validate();
  const double w1 = p.constants.c * M_PI / p.length;
  // floor() can land one off when omega_cut/w1 sits on a representability
  // edge; nudge until the <= invariant holds exactly for the stored values.
  long k = static_cast<long>(std::floor(p.omega_cut / w1));
  while (k >= 1 && static_cast<double>(k) * w1 > p.omega_cut) --k;
  while (static_cast<double>(k + 1) * w1 <= p.omega_cut) ++k;
  if (k < 0) k = 0;

  ModeBasis basis;
  basis.frequencies.reserve(static_cast<std::size_t>(k));
  for (long i = 1; i <= k; ++i)
    basis.frequencies.push_back(static_cast<double>(i) * w1);
  return basis;
}

double mode_weight(const PhysicalParams& p, double omega) {
  if (p.cutoff == CutoffKind::Sharp) return 1.0;
  return std::exp(-omega / (2.0 * p.omega_cut));
}

CouplingMatrix build_coupling_matrix(const PhysicalParams& p, const ModeBasis& basis,
                                     int sign) {
  p.validate();
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("coupling sign must be +1 or -1");

  const std::size_t dim = basis.size();
  CouplingMatrix m;
  m.dim = dim;
  m.sign = sign;
  m.entries.assign(dim * dim, 0.0);

  const double hbar = p.constants.hbar;
  const double pref = std::pow(0.5 * hbar, 1.5) / (p.length * std::sqrt(p.mass));
  for (std::size_t k = 0; k < dim; ++k) {
    const double wk = basis.frequencies[k];
    const double rowf = pref * mode_weight(p, wk);
    for (std::size_t j = 0; j <= k; ++j) {
      const double wj = basis.frequencies[j];
      double v = rowf * mode_weight(p, wj) * std::sqrt(wk * wj / p.omega0);
      // (-1)^(k+j) with 1-based mode indices k+1, j+1.
      if ((k + j) % 2 != 0) v = -v;
      v *= sign;
      m.entries[k * dim + j] = v;
      m.entries[j * dim + k] = v;
    }
  }
  return m;
}

double static_casimir_energy(const PhysicalParams& p) {
  if (!(p.length > 0.0)) throw std::invalid_argument("length must be positive");
  return -M_PI * p.constants.hbar * p.constants.c / (24.0 * p.length);
}

}  // namespace cavdress
