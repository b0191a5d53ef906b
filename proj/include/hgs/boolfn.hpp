#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/vertex_set.hpp"

namespace hgs
{

inline constexpr int max_table_vars = 20;

/// A Boolean function f : {0,1}^n -> {0,1} stored as 2^n packed bits.
///
/// Bit x holds f(x), where basis label x carries qubit i at bit position i-1
/// (qubit 1 least significant). For a real equally weighted state the table
/// is the sign pattern: bit set means amplitude -1.
class TruthTable
{
public:
  explicit TruthTable( int num_vars );

  int num_vars() const noexcept { return num_vars_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t{ 1 } << num_vars_; }

  bool get( std::uint64_t x ) const noexcept { return ( words_[x >> 6] >> ( x & 63 ) ) & 1u; }
  void set( std::uint64_t x, bool value ) noexcept;
  void flip( std::uint64_t x ) noexcept { words_[x >> 6] ^= std::uint64_t{ 1 } << ( x & 63 ); }

  std::uint64_t count_ones() const noexcept;
  bool is_zero() const noexcept;

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// Flip every bit (global sign change of the corresponding state).
  void complement() noexcept;

  friend bool operator==( const TruthTable&, const TruthTable& ) = default;

private:
  void mask_tail() noexcept;

  int num_vars_;
  std::vector<std::uint64_t> words_;
};

/// Algebraic normal form: f(x) = constant XOR (XOR over m of AND_{i in m} x_i).
///
/// Monomials are kept sorted by mask value without duplicates. The constant
/// term is the empty monomial; it corresponds to a global sign and is never a
/// hyperedge.
struct MonomialSet
{
  int num_vars = 0;
  std::vector<VertexSet> monomials;
  bool constant = false;

  friend bool operator==( const MonomialSet&, const MonomialSet& ) = default;
};

TruthTable truth_table_from_hex( std::string_view hex, int num_vars );
std::string to_hex( const TruthTable& tt );

/// In-place GF(2) Moebius (subset-sum) butterfly over a packed table of
/// 2^num_vars bits. The transform is its own inverse.
void mobius_inplace( std::span<std::uint64_t> words, int num_vars ) noexcept;

MonomialSet mobius_transform( const TruthTable& tt );

bool evaluate_anf( const MonomialSet& ms, std::uint64_t x );

/// Table text format: line `n <int>`, then the hex string.
TruthTable parse_truth_table( std::string_view text );
std::string format_truth_table( const TruthTable& tt );

} // namespace hgs
