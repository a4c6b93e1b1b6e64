#pragma once

#include <revclone/map.hpp>
#include <revclone/permutation.hpp>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace revclone
{

/// A map together with the name it is known by (file stem, builtin name, ...).
struct named_map
{
  std::string name;
  map value;
};

/// Unary map of a letter permutation.
map unary( alphabet a, alphabet_permutation const& alpha );

/// TG(n, alpha, o): applies alpha to the last wire when every other wire carries o.
/// TG(1, alpha, o) is alpha itself.
map tg( alphabet a, unsigned n, alphabet_permutation const& alpha, letter o );

/// The transposition of two distinct tuples of the same length.
map elementary( alphabet a, std::span<letter const> x, std::span<letter const> y );

/// The two tuples swapped by an elementary map, in index order, or nothing.
std::optional<std::pair<tuple, tuple>> elementary_pair( map const& f );

bool is_elementary( map const& f );

/// Elementary and the swapped tuples differ in exactly one coordinate.
bool is_atomic( map const& f );

/// phi_n(a) = (a, ..., a).
map fanout( alphabet a, unsigned n );

/// {(1 2), (1 ... k), TG(n, (1 2), 1), TG(n, (1 ... k), 1)}.
std::vector<named_map> standard_generators( alphabet a, unsigned n );

/// Expands a builtin generator name. `arity` sizes the families that need it
/// (std4, id, proj2 ignore or use it as documented in `builtin_names`).
/// Returns nothing for unknown names.
std::optional<std::vector<named_map>> builtin_generators( std::string const& name, alphabet a, unsigned arity );

/// One line per builtin name with a short description.
std::vector<std::pair<std::string, std::string>> builtin_names();

} // namespace revclone
