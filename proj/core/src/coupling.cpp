#include "pgrn/coupling.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace pgrn {

CouplingSet build_couplings(const GrngSpec& spec) {
  spec.validate();
  const int n = spec.n_bits;

  CouplingSet c;
  c.n_bits = n;
  c.beta = spec.beta;
  c.g0 = spec.g0();

  // G0 as a double: exact up to 53 bits, correctly rounded above.
  const double g0d = std::ldexp(1.0, n) - 1.0;
  c.a_const = 1.0 / (2.0 * g0d * spec.sigma);
  c.b_const = (1.0 - 2.0 * spec.mu) / (2.0 * spec.sigma);

  // Products are grouped so that scaling beta by a power of two scales jB and
  // h exactly, keeping the temperature-scaling identity exact in floating
  // point.
  const double a2 = c.a_const * c.a_const;
  const double jb_coef = spec.beta * a2;
  const double h_coef = spec.beta * (c.a_const * c.b_const);

  c.jA.resize(n);
  c.jB.resize(n);
  c.h.resize(n);
  double c_sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::ldexp(1.0, i);
    c.jA[i] = d;
    c.jB[i] = -jb_coef * d;
    c.h[i] = -h_coef * d;
    c_sum += d * d;
  }
  c.c_const = a2 * c_sum;

  c.j_keep_threshold = 0;
  c.h_keep_threshold = 0;
  if (spec.resolved_precision() < 2 * n)
    return truncate_couplings(c, spec.resolved_precision());
  return c;
}

CouplingSet truncate_couplings(const CouplingSet& c, int precision) {
  if (precision < 1 || precision > 2 * c.n_bits)
    throw ConfigError("precision must be in [1, 2*n_bits], got " +
                      std::to_string(precision));
  CouplingSet out = c;
  out.j_keep_threshold = std::max(0, 2 * c.n_bits - precision);
  out.h_keep_threshold = std::max(0, c.n_bits - precision);
  return out;
}

DenseMatrix materialize_full_matrix(const CouplingSet& c) {
  if (c.n_bits > 4096)
    throw CapacityError("dense matrix supported up to 4096 bits, got " +
                        std::to_string(c.n_bits));
  if (c.n_bits > 16)
    std::cerr << "note: materializing a " << c.n_bits << "x" << c.n_bits
              << " dense matrix; the rank-1 form avoids this\n";
  DenseMatrix m;
  m.n = c.n_bits;
  m.data.assign(static_cast<std::size_t>(m.n) * m.n, 0.0);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) m.at(i, j) = c.j_entry(i, j);
  return m;
}

std::string describe_couplings(const CouplingSet& c) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "n_bits " << c.n_bits << "\n"
     << "beta " << c.beta << "\n"
     << "g0 " << c.g0 << "\n"
     << "A " << c.a_const << "\n"
     << "B " << c.b_const << "\n"
     << "C " << c.c_const << "\n"
     << "j_keep_threshold " << c.j_keep_threshold << " (pair i,j kept iff i+j >= threshold)\n"
     << "h_keep_threshold " << c.h_keep_threshold << " (bias i kept iff i >= threshold)\n";
  int j_dropped = 0;
  for (int i = 0; i < c.n_bits; ++i)
    for (int j = i + 1; j < c.n_bits; ++j)
      if (!c.j_kept(i, j)) ++j_dropped;
  int h_dropped = 0;
  for (int i = 0; i < c.n_bits; ++i)
    if (!c.h_kept(i)) ++h_dropped;
  os << "dropped_pairs " << j_dropped << "\n"
     << "dropped_biases " << h_dropped << "\n"
     << "bit jB h kept_bias\n";
  for (int i = 0; i < c.n_bits; ++i)
    os << i << " " << c.jB[i] << " " << c.h[i] << " " << (c.h_kept(i) ? 1 : 0)
       << "\n";
  return os.str();
}

}  // namespace pgrn
