#pragma once

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hgs/boolfn.hpp"
#include "hgs/hypergraph.hpp"

namespace hgs
{

/// Comparison tolerance for the complex backend.
inline constexpr double state_tolerance = 1e-9;
/// Tolerance on squared norms.
inline constexpr double norm_tolerance = 1e-12;

using Amplitude = std::complex<double>;

/// Exact backend: amplitudes (-1)^signs(x) / sqrt(2^n).
///
/// Every state reachable from |+>^n by C^kZ gates (and by X, Z, up to global
/// phase) lives here with zero floating-point error.
class SignState
{
public:
  explicit SignState( TruthTable signs )
      : signs_( std::move( signs ) ) {}

  int num_qubits() const noexcept { return signs_.num_vars(); }
  std::uint64_t dimension() const noexcept { return signs_.num_bits(); }
  const TruthTable& signs() const noexcept { return signs_; }
  TruthTable& signs() noexcept { return signs_; }

  int sign( std::uint64_t x ) const noexcept { return signs_.get( x ) ? -1 : 1; }
  double magnitude() const noexcept;
  double amplitude( std::uint64_t x ) const noexcept { return sign( x ) * magnitude(); }

  friend bool operator==( const SignState&, const SignState& ) = default;

private:
  TruthTable signs_;
};

/// Dense complex backend, used where Y gates, random probes or projectors
/// leave the equal-weight sign manifold.
class ComplexState
{
public:
  ComplexState( int num_qubits, std::vector<Amplitude> amplitudes );

  int num_qubits() const noexcept { return n_; }
  std::uint64_t dimension() const noexcept { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }
  std::vector<Amplitude>& amplitudes() noexcept { return amps_; }
  const Amplitude& operator[]( std::uint64_t x ) const noexcept { return amps_[x]; }
  Amplitude& operator[]( std::uint64_t x ) noexcept { return amps_[x]; }

  double squared_norm() const noexcept;

private:
  int n_;
  std::vector<Amplitude> amps_;
};

SignState plus_state( int num_qubits );
ComplexState to_complex( const SignState& s );

/// |g> = prod_{e in E} C^{|e|}Z_e |+>^n.
SignState build_state( const Hypergraph& h );

/// C^kZ on the qubits of `edge`: negates amplitudes whose label contains it.
SignState apply_ckz( const SignState& s, VertexSet edge );
ComplexState apply_ckz( const ComplexState& s, VertexSet edge );

enum class Pauli
{
  I,
  X,
  Y,
  Z
};

char pauli_name( Pauli p ) noexcept;

ComplexState apply_local_pauli( const ComplexState& s, int qubit, Pauli p );
/// X and Z keep the sign backend exact. Y = iXZ is available on the sign
/// backend only up to its global factor i, see `apply_local_pauli_up_to_phase`.
SignState apply_local_pauli( const SignState& s, int qubit, Pauli p );
SignState apply_local_pauli_up_to_phase( const SignState& s, int qubit, Pauli p );

/// K_i = X_i (x) prod_{t in tuples} C^{|t|}Z_t; an empty tuple contributes -1.
struct StabilizerOperator
{
  int vertex = 0;
  std::vector<VertexSet> tuples;

  bool has_global_sign() const noexcept;
  std::string to_string() const;
};

StabilizerOperator stabilizer( const Hypergraph& h, int vertex );

SignState apply_stabilizer( const SignState& s, const StabilizerOperator& k );
ComplexState apply_stabilizer( const ComplexState& s, const StabilizerOperator& k );

/// K_i |g> == |g> for every vertex, compared exactly on the sign backend.
bool verify_stabilized( const Hypergraph& h );

using StateMap = std::function<ComplexState( const ComplexState& )>;

/// || (AB - BA) |probe> ||.
double commutator_residual( const StateMap& a, const StateMap& b, const ComplexState& probe );
double commutator_residual( const StabilizerOperator& a, const StabilizerOperator& b, const ComplexState& probe );

/// Haar-like random state (normalized complex Gaussian vector).
ComplexState random_state( int num_qubits, std::mt19937_64& rng );

/// Projects random probes with prod_i (I + K_i)/2 and checks every nonzero
/// image is parallel to build_state(h).
bool uniqueness_check( const Hypergraph& h, std::mt19937_64& rng, int probes = 20 );

bool equal_up_to_global_phase( const ComplexState& a, const ComplexState& b );
/// For sign states the only candidate scalars are +1 and -1.
bool equal_up_to_global_phase( const SignState& a, const SignState& b );

/// State dump: header `n <int> backend <sign|complex>`, then `x sign` or
/// `x re im` per basis label.
std::string format_state( const SignState& s );
std::string format_state( const ComplexState& s );
std::variant<SignState, ComplexState> parse_state( std::string_view text );

} // namespace hgs
