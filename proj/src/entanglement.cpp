#include "hgs/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

namespace hgs
{

namespace
{

constexpr int max_entanglement_qubits = 12;

void check_subsystem( int num_qubits, VertexSet subsystem )
{
  const int size = set_size( subsystem );
  if ( !is_subset( subsystem, full_set( num_qubits ) ) || size < 1 || size > num_qubits - 1 )
    throw invalid_input( "subsystem " + format_set( subsystem ) + " is not a proper nonempty subset of the qubits" );
}

/// Packs the bits of x selected by mask into the low bits, keeping order.
std::uint64_t gather_bits( std::uint64_t x, VertexSet mask ) noexcept
{
  std::uint64_t out = 0;
  int pos = 0;
  while ( mask )
  {
    const auto low = mask & -mask;
    if ( x & low )
      out |= std::uint64_t{ 1 } << pos;
    ++pos;
    mask ^= low;
  }
  return out;
}

/// Amplitudes arranged as a (2^|A|) x (2^|complement|) matrix.
template<typename Matrix, typename Amp>
Matrix split_amplitudes( int num_qubits, VertexSet subsystem, Amp&& amp )
{
  const auto rest = full_set( num_qubits ) & ~subsystem;
  Matrix m( Eigen::Index( 1 ) << set_size( subsystem ), Eigen::Index( 1 ) << set_size( rest ) );
  const std::uint64_t dim = std::uint64_t{ 1 } << num_qubits;
  for ( std::uint64_t x = 0; x < dim; ++x )
    m( gather_bits( x, subsystem ), gather_bits( x, rest ) ) = amp( x );
  return m;
}

void check_entanglement_size( int num_qubits )
{
  if ( num_qubits < 2 || num_qubits > max_entanglement_qubits )
    throw invalid_input( "entanglement report needs 2.." + std::to_string( max_entanglement_qubits ) + " qubits" );
}

template<typename State>
BipartitionReport bipartition_report( const State& s )
{
  check_entanglement_size( s.num_qubits() );
  BipartitionReport report;
  report.num_qubits = s.num_qubits();
  for ( auto cut : bipartition_representatives( s.num_qubits() ) )
  {
    const double lambda = lambda_max( reduced_density( s, cut ) );
    report.cuts.push_back( { cut, lambda } );
    report.lambda_star = std::max( report.lambda_star, lambda );
  }
  report.e2 = 1.0 - report.lambda_star;
  return report;
}

using Site = std::array<Amplitude, 2>;

/// Contracts the qubit at bit position `pos` with conj(site).
std::vector<Amplitude> contract_site( const std::vector<Amplitude>& v, int pos, const Site& site )
{
  const std::uint64_t low_mask = ( std::uint64_t{ 1 } << pos ) - 1u;
  std::vector<Amplitude> out( v.size() / 2 );
  const auto c0 = std::conj( site[0] );
  const auto c1 = std::conj( site[1] );
  for ( std::uint64_t y = 0; y < out.size(); ++y )
  {
    const std::uint64_t x0 = ( ( y & ~low_mask ) << 1 ) | ( y & low_mask );
    out[y] = c0 * v[x0] + c1 * v[x0 | ( low_mask + 1 )];
  }
  return out;
}

/// Environment of qubit `site` (0-based): s contracted with every other
/// conj(phi_k). Qubits above `site` are peeled from the top first, after which
/// `site` is the top bit and the rest are removed below it.
Site environment( const ComplexState& s, const std::vector<Site>& phi, int site )
{
  auto v = s.amplitudes();
  const int n = s.num_qubits();
  for ( int k = n - 1; k > site; --k )
    v = contract_site( v, k, phi[k] );
  for ( int k = site - 1; k >= 0; --k )
    v = contract_site( v, k, phi[k] );
  return { v[0], v[1] };
}

} // namespace

Eigen::MatrixXcd reduced_density( const ComplexState& s, VertexSet subsystem )
{
  check_subsystem( s.num_qubits(), subsystem );
  const auto m = split_amplitudes<Eigen::MatrixXcd>( s.num_qubits(), subsystem, [&]( auto x ) { return s[x]; } );
  return m * m.adjoint();
}

Eigen::MatrixXd reduced_density( const SignState& s, VertexSet subsystem )
{
  check_subsystem( s.num_qubits(), subsystem );
  const auto m = split_amplitudes<Eigen::MatrixXd>( s.num_qubits(), subsystem, [&]( auto x ) { return double( s.sign( x ) ); } );
  // entries are integers until the final scaling by 1/2^n
  Eigen::MatrixXd rho = m * m.transpose();
  return rho * std::ldexp( 1.0, -s.num_qubits() );
}

double lambda_max( const Eigen::MatrixXcd& m )
{
  if ( m.rows() != m.cols() || m.rows() == 0 )
    throw invalid_input( "lambda_max needs a nonempty square matrix" );
  if ( ( m - m.adjoint() ).cwiseAbs().maxCoeff() > hermitian_tolerance )
    throw invalid_input( "matrix is not Hermitian" );
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver( m, Eigen::EigenvaluesOnly );
  return solver.eigenvalues().maxCoeff();
}

double lambda_max( const Eigen::MatrixXd& m )
{
  if ( m.rows() != m.cols() || m.rows() == 0 )
    throw invalid_input( "lambda_max needs a nonempty square matrix" );
  if ( ( m - m.transpose() ).cwiseAbs().maxCoeff() > hermitian_tolerance )
    throw invalid_input( "matrix is not symmetric" );
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver( m, Eigen::EigenvaluesOnly );
  return solver.eigenvalues().maxCoeff();
}

std::string BipartitionReport::to_string() const
{
  std::string out;
  char buffer[96];
  for ( const auto& cut : cuts )
  {
    std::snprintf( buffer, sizeof buffer, "cut %llu lambda %.12f\n", static_cast<unsigned long long>( cut.subsystem ), cut.lambda_max );
    out += buffer;
  }
  std::snprintf( buffer, sizeof buffer, "E2 %.12g\n", std::abs( e2 ) < 1e-12 ? 0.0 : e2 );
  return out + buffer;
}

std::vector<VertexSet> bipartition_representatives( int num_qubits )
{
  std::vector<VertexSet> cuts;
  const auto all = full_set( num_qubits );
  for ( VertexSet a = 1; a < all; ++a )
  {
    const int size = set_size( a );
    if ( 2 * size < num_qubits || ( 2 * size == num_qubits && ( a & 1u ) ) )
      cuts.push_back( a );
  }
  return cuts;
}

BipartitionReport genuine_multipartite_geometric( const ComplexState& s )
{
  return bipartition_report( s );
}

BipartitionReport genuine_multipartite_geometric( const SignState& s )
{
  return bipartition_report( s );
}

double product_overlap( const ComplexState& s, std::mt19937_64& rng, const ProductOverlapOptions& options )
{
  if ( options.restarts < 1 )
    throw invalid_input( "product_overlap needs at least one restart" );
  const int n = s.num_qubits();
  std::normal_distribution<double> gauss;

  double best = 0;
  for ( int restart = 0; restart < options.restarts; ++restart )
  {
    std::vector<Site> phi( n );
    for ( auto& site : phi )
    {
      site = { Amplitude{ gauss( rng ), gauss( rng ) }, Amplitude{ gauss( rng ), gauss( rng ) } };
      const double norm = std::sqrt( std::norm( site[0] ) + std::norm( site[1] ) );
      site[0] /= norm;
      site[1] /= norm;
    }

    double overlap = 0;
    for ( int sweep = 0; sweep < options.sweeps; ++sweep )
    {
      const double before = overlap;
      for ( int j = 0; j < n; ++j )
      {
        const auto env = environment( s, phi, j );
        const double norm = std::sqrt( std::norm( env[0] ) + std::norm( env[1] ) );
        if ( norm == 0 )
          continue;
        // <phi_j|env> is maximized by phi_j = env / |env|, with value |env|
        phi[j] = { env[0] / norm, env[1] / norm };
        overlap = norm * norm;
        if ( options.on_update )
          options.on_update( restart, overlap );
      }
      if ( sweep > 0 && overlap - before < options.convergence )
        break;
    }
    best = std::max( best, overlap );
  }
  return best;
}

} // namespace hgs
