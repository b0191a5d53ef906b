#pragma once

#include <string>

#include "hgs/boolfn.hpp"
#include "hgs/hypergraph.hpp"

namespace hgs
{

/// Recovers the hypergraph of a real equally weighted state by erasing minus
/// signs level by level: for k = 1..n, every label with k excitations that
/// still carries a minus sign contributes the edge support(x) and has C^kZ
/// applied to the working table. Labels within a level are visited in
/// increasing order. Requires tt(0) = 0.
Hypergraph extract_layered( const TruthTable& tt );

/// Same result through the Moebius transform: the edges are the ANF monomials.
Hypergraph extract_fast( const TruthTable& tt );

enum class Balance
{
  Constant,
  Balanced,
  Unbalanced
};

std::string to_string( Balance b );

struct BalanceReport
{
  Balance balance = Balance::Constant;
  std::uint64_t minus_signs = 0;
  /// Whether the edge {1..n} occurs in the extracted hypergraph.
  bool full_edge = false;
};

/// Does not require normalization; full_edge is read from the ANF, where the
/// constant term never affects the top monomial.
BalanceReport classify_balance( const TruthTable& tt );

} // namespace hgs
