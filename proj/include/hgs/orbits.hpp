#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hgs/statesim.hpp"

namespace hgs
{

inline constexpr int max_orbit_qubits = 4;

/// Sign vector of a state normalized to a plus sign at x = 0. Local Paulis on
/// sign states only ever produce global factors in {+-1, +-i}, so two states
/// share a key exactly when they agree up to global phase.
struct OrbitKey
{
  std::uint32_t signs = 0;

  friend auto operator<=>( const OrbitKey&, const OrbitKey& ) = default;
};

OrbitKey orbit_key( const SignState& s );

/// Keys of P_1 (x) ... (x) P_n |s> over all 4^n local Pauli products.
std::set<OrbitKey> local_pauli_orbit( const SignState& s );

/// All nonempty k-uniform hypergraphs on n vertices.
std::vector<Hypergraph> uniform_hypergraphs( int n, int k );

struct ClassPairStats
{
  int k = 0;
  int k_other = 0;
  std::uint64_t states = 0;
  std::uint64_t targets = 0;
  std::uint64_t violations = 0;
};

struct OrbitClassStats
{
  int k = 0;
  std::uint64_t states = 0;
  std::uint64_t min_orbit = 0;
  std::uint64_t max_orbit = 0;
};

struct Violation
{
  Hypergraph source;
  Hypergraph target;
};

struct InequivalenceReport
{
  int num_qubits = 0;
  std::vector<OrbitClassStats> classes;
  std::vector<ClassPairStats> pairs;
  std::vector<Violation> violations;

  std::string to_string() const;
};

/// For every k != k', checks that no local Pauli product maps a nonempty
/// k-uniform hypergraph state onto a nonempty k'-uniform one.
InequivalenceReport class_inequivalence_report( int n );

} // namespace hgs
