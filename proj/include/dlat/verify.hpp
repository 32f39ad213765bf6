#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dlat/lattice.hpp"
#include "dlat/poset.hpp"
#include "dlat/type_a.hpp"

// Exhaustive cross-checks shared by the `verify` command and the test suites.
// Each check returns an empty string on success, otherwise a description of the
// first discrepancy found.
namespace dlat::verify {

// L = J(j(L)) through canonical_iso_to_ideals, and L = M(m(L)) through filters.
std::string ideal_round_trip(const ColoredLattice& L);
std::string filter_round_trip(const ColoredLattice& L);
// P = j(J(P)) through principal ideals, P = m(M(P)) through principal filters.
std::string poset_round_trips(const VertexColoredPoset& P);
// The six isomorphism families for operations on posets and lattices.
std::string operation_identities(const VertexColoredPoset& P, const VertexColoredPoset& Q,
                                 const std::map<int, int>& sigma);
// is_diamond_colored, balanced, distributive, modular, rank identity.
std::string structure(const ColoredLattice& L);

// Partition/tableau/circle/diagonal maps commute and the four L edge rules agree
// with each other and with the ideal lattice of the box poset.
std::string coordinates(const BoxSpec& spec);
// D edges from partition, circle and diagonal move vectors coincide; every edge is a
// geometric domino move and every geometric move is exactly one edge.
std::string transport(const BoxSpec& spec);
// Phi is a colored isomorphism L_A -> D_A, inverse to phi_inverse, compatible with apply_p.
std::string phi_iso(const BoxSpec& spec);
// Solver distances equal BFS distances over all pairs, in both L_A and D_A, via join and meet.
std::string solver(const BoxSpec& spec);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

std::vector<std::string> suite_names();
// Without a spec the shape suites sweep every box with k(N-k) <= 8.
SuiteReport run_suite(const std::string& name, std::optional<BoxSpec> spec, std::uint64_t seed);

}  // namespace dlat::verify
