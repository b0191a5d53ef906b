#include "hgs/boolfn.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "text_util.hpp"

namespace hgs
{

namespace
{

constexpr std::array<std::uint64_t, 6> low_half_masks = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull };

void check_num_vars( int n )
{
  if ( n < 1 || n > max_table_vars )
    throw invalid_input( "qubit count " + std::to_string( n ) + " outside 1.." + std::to_string( max_table_vars ) );
}

int hex_value( char c )
{
  if ( c >= '0' && c <= '9' )
    return c - '0';
  if ( c >= 'a' && c <= 'f' )
    return c - 'a' + 10;
  if ( c >= 'A' && c <= 'F' )
    return c - 'A' + 10;
  return -1;
}

} // namespace

TruthTable::TruthTable( int num_vars )
    : num_vars_( num_vars )
{
  check_num_vars( num_vars );
  words_.assign( num_vars >= 6 ? std::size_t{ 1 } << ( num_vars - 6 ) : 1u, 0u );
}

void TruthTable::set( std::uint64_t x, bool value ) noexcept
{
  auto bit = std::uint64_t{ 1 } << ( x & 63 );
  if ( value )
    words_[x >> 6] |= bit;
  else
    words_[x >> 6] &= ~bit;
}

std::uint64_t TruthTable::count_ones() const noexcept
{
  std::uint64_t total = 0;
  for ( auto w : words_ )
    total += std::popcount( w );
  return total;
}

bool TruthTable::is_zero() const noexcept
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0; } );
}

void TruthTable::complement() noexcept
{
  for ( auto& w : words_ )
    w = ~w;
  mask_tail();
}

void TruthTable::mask_tail() noexcept
{
  if ( num_vars_ < 6 )
    words_[0] &= ( std::uint64_t{ 1 } << num_bits() ) - 1u;
}

TruthTable truth_table_from_hex( std::string_view hex, int num_vars )
{
  check_num_vars( num_vars );
  const std::uint64_t bits = std::uint64_t{ 1 } << num_vars;
  const std::size_t digits = ( bits + 3 ) / 4;
  if ( hex.size() != digits )
    throw invalid_input( "hex string has " + std::to_string( hex.size() ) + " digits, expected " + std::to_string( digits ) );

  TruthTable tt( num_vars );
  for ( std::size_t pos = 0; pos < digits; ++pos )
  {
    const int value = hex_value( hex[digits - 1 - pos] );
    if ( value < 0 )
      throw invalid_input( std::string( "non-hex character '" ) + hex[digits - 1 - pos] + "'" );
    for ( int b = 0; b < 4; ++b )
    {
      if ( !( ( value >> b ) & 1 ) )
        continue;
      const std::uint64_t x = 4 * pos + b;
      if ( x >= bits )
        throw invalid_input( "hex digit sets bits beyond the table size" );
      tt.set( x, true );
    }
  }
  return tt;
}

std::string to_hex( const TruthTable& tt )
{
  static constexpr char digit_chars[] = "0123456789ABCDEF";
  const std::size_t digits = ( tt.num_bits() + 3 ) / 4;
  std::string out( digits, '0' );
  for ( std::size_t pos = 0; pos < digits; ++pos )
  {
    int value = 0;
    for ( int b = 0; b < 4; ++b )
    {
      const std::uint64_t x = 4 * pos + b;
      if ( x < tt.num_bits() && tt.get( x ) )
        value |= 1 << b;
    }
    out[digits - 1 - pos] = digit_chars[value];
  }
  return out;
}

void mobius_inplace( std::span<std::uint64_t> words, int num_vars ) noexcept
{
  const int in_word = std::min( num_vars, 6 );
  for ( auto& w : words )
    for ( int i = 0; i < in_word; ++i )
      w ^= ( w & low_half_masks[i] ) << ( 1u << i );

  for ( std::size_t stride = 1; stride < words.size(); stride <<= 1 )
    for ( std::size_t base = 0; base < words.size(); base += 2 * stride )
      for ( std::size_t j = base; j < base + stride; ++j )
        words[j + stride] ^= words[j];
}

MonomialSet mobius_transform( const TruthTable& tt )
{
  auto coeffs = tt;
  mobius_inplace( coeffs.words(), coeffs.num_vars() );

  MonomialSet ms;
  ms.num_vars = tt.num_vars();
  ms.constant = coeffs.get( 0 );
  auto words = coeffs.words();
  for ( std::size_t wi = 0; wi < words.size(); ++wi )
  {
    auto w = words[wi];
    if ( wi == 0 )
      w &= ~std::uint64_t{ 1 };
    while ( w )
    {
      ms.monomials.push_back( ( wi << 6 ) | static_cast<std::uint64_t>( std::countr_zero( w ) ) );
      w &= w - 1;
    }
  }
  return ms;
}

bool evaluate_anf( const MonomialSet& ms, std::uint64_t x )
{
  if ( ms.num_vars < 64 && ( x >> ms.num_vars ) != 0 )
    throw invalid_input( "basis label " + std::to_string( x ) + " out of range for n=" + std::to_string( ms.num_vars ) );
  bool value = ms.constant;
  for ( auto m : ms.monomials )
    value ^= is_subset( m, x );
  return value;
}

TruthTable parse_truth_table( std::string_view text )
{
  auto lines = detail::tokenize( text );
  if ( lines.size() != 2 || lines[0].tokens.size() != 2 || lines[1].tokens.size() != 1 )
    throw invalid_input( "truth table file must contain 'n <int>' and one hex line" );
  return truth_table_from_hex( lines[1].tokens[0], detail::parse_header( lines[0] ) );
}

std::string format_truth_table( const TruthTable& tt )
{
  return "n " + std::to_string( tt.num_vars() ) + "\n" + to_hex( tt ) + "\n";
}

} // namespace hgs
