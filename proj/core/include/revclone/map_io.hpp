#pragma once

#include <revclone/map.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace revclone
{

/// Reads the `.map` text format:
///
///     # comment
///     alphabet 3
///     arity 2
///     coarity 1
///     1 1 -> 2
///     ...
///
/// Rows may come in any order but must cover every input tuple exactly once.
map read_map( std::istream& in );
map read_map_file( std::filesystem::path const& path );
map parse_map( std::string const& text );

/// Writes the canonical form: header, then rows in lexicographic input order.
void write_map( std::ostream& out, map const& f );
std::string format_map( map const& f );

} // namespace revclone
