#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "hgs/vertex_set.hpp"

namespace hgs::detail
{

struct Line
{
  int number;
  std::vector<std::string_view> tokens;
};

/// Splits text into whitespace-separated tokens per line. `#` starts a
/// comment; blank lines are dropped.
inline std::vector<Line> tokenize( std::string_view text )
{
  std::vector<Line> lines;
  int number = 0;
  while ( !text.empty() )
  {
    ++number;
    auto end = text.find( '\n' );
    auto line = text.substr( 0, end );
    text = end == std::string_view::npos ? std::string_view{} : text.substr( end + 1 );

    if ( auto hash = line.find( '#' ); hash != std::string_view::npos )
      line = line.substr( 0, hash );

    Line parsed{ number, {} };
    std::size_t pos = 0;
    while ( pos < line.size() )
    {
      while ( pos < line.size() && std::isspace( static_cast<unsigned char>( line[pos] ) ) )
        ++pos;
      auto start = pos;
      while ( pos < line.size() && !std::isspace( static_cast<unsigned char>( line[pos] ) ) )
        ++pos;
      if ( pos > start )
        parsed.tokens.push_back( line.substr( start, pos - start ) );
    }
    if ( !parsed.tokens.empty() )
      lines.push_back( std::move( parsed ) );
  }
  return lines;
}

template<typename Int>
Int parse_int( std::string_view token, int line )
{
  Int value{};
  auto [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
    throw invalid_input( "line " + std::to_string( line ) + ": expected integer, got '" + std::string( token ) + "'" );
  return value;
}

/// Parses a `n <int>` header line.
inline int parse_header( const Line& line )
{
  if ( line.tokens.size() < 2 || line.tokens[0] != "n" )
    throw invalid_input( "line " + std::to_string( line.number ) + ": expected header 'n <int>'" );
  return parse_int<int>( line.tokens[1], line.number );
}

} // namespace hgs::detail
