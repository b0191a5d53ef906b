#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hgs/statesim.hpp"

namespace hgs
{

/// Tolerance for Hermiticity checks and eigenvalue accuracy.
inline constexpr double hermitian_tolerance = 1e-10;

/// rho_A = Tr_{complement of A} |s><s|, indexed by the qubits of A packed in
/// increasing order (lowest qubit of A is the least significant index bit).
Eigen::MatrixXcd reduced_density( const ComplexState& s, VertexSet subsystem );
/// Real symmetric fast path for sign states.
Eigen::MatrixXd reduced_density( const SignState& s, VertexSet subsystem );

double lambda_max( const Eigen::MatrixXcd& m );
double lambda_max( const Eigen::MatrixXd& m );

struct CutRecord
{
  VertexSet subsystem = 0;
  double lambda_max = 0;
};

struct BipartitionReport
{
  int num_qubits = 0;
  std::vector<CutRecord> cuts;
  double lambda_star = 0;
  double e2 = 0;

  /// `cut <A-mask> lambda <float>` per cut, then `E2 <float>`.
  std::string to_string() const;
};

/// One representative per unordered bipartition {A, complement}: the smaller
/// side, or the side holding qubit 1 when both have n/2 qubits.
std::vector<VertexSet> bipartition_representatives( int num_qubits );

/// E_2 = 1 - max over bipartitions of the largest eigenvalue of rho_A.
BipartitionReport genuine_multipartite_geometric( const ComplexState& s );
BipartitionReport genuine_multipartite_geometric( const SignState& s );

struct ProductOverlapOptions
{
  int restarts = 32;
  int sweeps = 200;
  double convergence = 1e-12;
  /// Called with the squared overlap after every single-site update.
  std::function<void( int restart, double overlap )> on_update;
};

/// Lower bound on max |<phi_1 ... phi_n|s>|^2 over product states, by
/// alternating single-site maximization from random starting points.
double product_overlap( const ComplexState& s, std::mt19937_64& rng, const ProductOverlapOptions& options = {} );

} // namespace hgs
