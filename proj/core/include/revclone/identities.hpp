#pragma once

#include <revclone/map.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace revclone
{

/// Uniformly random table.
map random_map( std::mt19937_64& rng, alphabet a, unsigned arity, unsigned coarity );

/// Uniformly random balanced bijection on A^n.
map random_bijection( std::mt19937_64& rng, alphabet a, unsigned n );

/// An equation between two operation chains, checked on one random instance per trial.
/// A trial returns a description of the instance when the two sides differ.
struct identity_law
{
  std::string name;
  std::string statement;
  std::function<std::optional<std::string>( std::mt19937_64&, alphabet )> trial;
};

/// The exchange laws between select/insert and the operations, the composition rewrite
/// into oplus, bullet and a wire permutation, and the permutation forms of the unary operations.
std::vector<identity_law> const& identity_laws();

struct law_result
{
  std::string name;
  std::string statement;
  unsigned trials = 0;
  unsigned failures = 0;
  std::string first_failure;
};

/// Runs every law (or only those whose name contains `filter`) `trials` times.
/// Law i draws from its own generator seeded with seed + i, so reports are reproducible.
std::vector<law_result> check_identities( alphabet a, unsigned trials, std::uint64_t seed,
                                          std::string_view filter = {} );

} // namespace revclone
