#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgrn/spec.hpp"

namespace pgrn {

/// Symmetric couplings J and biases h for a network whose Boltzmann
/// distribution over G = sum_i 2^i (s_i+1)/2 approximates N(mu*G0, sigma*G0).
///
/// J is rank-1 off the diagonal: J[i][j] = jA[i] * jB[j] for i != j, zero on
/// the diagonal. jA carries the raw bit weights 2^i; jB and h carry the
/// physical scale including beta. Truncation never rewrites the vectors; it
/// only moves the keep thresholds, so tightening precision is idempotent and
/// p = 2*n_bits reproduces the untruncated network bit for bit.
struct CouplingSet {
  int n_bits = 0;
  double beta = 1.0;
  std::vector<double> jA;  // 2^i
  std::vector<double> jB;  // -beta * A^2 * 2^i
  std::vector<double> h;   // -beta * A * B * 2^i
  double a_const = 0.0;    // A = 1 / (2 * G0 * sigma), unscaled
  double b_const = 0.0;    // B = (1 - 2*mu) / (2 * sigma), unscaled
  double c_const = 0.0;    // A^2 * sum_i 4^i, unscaled
  std::uint64_t g0 = 0;
  int j_keep_threshold = 0;  // pair (i,j), i != j, kept iff i + j >= threshold
  int h_keep_threshold = 0;  // bias i kept iff i >= threshold

  bool j_kept(int i, int j) const {
    return i != j && i + j >= j_keep_threshold;
  }
  bool h_kept(int i) const { return i >= h_keep_threshold; }

  double j_entry(int i, int j) const { return j_kept(i, j) ? jA[i] * jB[j] : 0.0; }
  double h_entry(int i) const { return h_kept(i) ? h[i] : 0.0; }
};

CouplingSet build_couplings(const GrngSpec& spec);

/// Returns a copy restricted to the `precision` most significant weight bits:
/// pairs with i + j < 2*n_bits - precision and biases with i < n_bits -
/// precision are dropped.
CouplingSet truncate_couplings(const CouplingSet& c, int precision);

struct DenseMatrix {
  int n = 0;
  std::vector<double> data;  // row-major n*n
  double& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
  double at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
};

/// Expands J to a dense matrix. Warns on stderr above 16 bits (the matrix is
/// fine to build, just quadratic) and refuses outright above 4096 bits.
DenseMatrix materialize_full_matrix(const CouplingSet& c);

/// Human-readable dump of the network parameters for inspection.
std::string describe_couplings(const CouplingSet& c);

}  // namespace pgrn
