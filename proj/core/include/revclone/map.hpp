#pragma once

#include <revclone/alphabet.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace revclone
{

/// A total (n,m)-map f : A^n -> A^m stored as a dense truth table.
///
/// Row r holds f(decode(r)), rows are ordered by the big-endian tuple index.
/// Maps are immutable values; every operation returns a fresh map.
class map
{
public:
  /// `table` holds k^n rows of m letters each, row-major.
  map( alphabet a, unsigned arity, unsigned coarity, std::vector<letter> table );

  /// Builds a map by calling `fn(input, output)` for every input tuple in index order.
  template<class Fn>
  static map from_function( alphabet a, unsigned arity, unsigned coarity, Fn&& fn )
  {
    auto const rows = a.tuple_count( arity );
    std::vector<letter> table( rows * coarity );
    tuple input( arity );
    for ( std::uint64_t r = 0; r < rows; ++r )
    {
      decode_into( r, a.size(), input );
      fn( std::span<letter const>( input ), std::span<letter>( table.data() + r * coarity, coarity ) );
    }
    return map( a, arity, coarity, std::move( table ) );
  }

  /// i_n.
  static map identity( alphabet a, unsigned n );

  alphabet alpha() const noexcept { return alphabet_; }
  unsigned k() const noexcept { return alphabet_.size(); }
  unsigned arity() const noexcept { return arity_; }
  unsigned coarity() const noexcept { return coarity_; }
  std::uint64_t rows() const noexcept { return rows_; }

  /// Output tuple of row r.
  std::span<letter const> row( std::uint64_t r ) const noexcept
  {
    return { table_.data() + r * coarity_, coarity_ };
  }

  /// Index of the output tuple of row r in A^m.
  std::uint64_t image_index( std::uint64_t r ) const noexcept { return encode_unchecked( row( r ), k() ); }

  std::span<letter const> table() const noexcept { return table_; }

  /// f(x); throws on a length mismatch or an out-of-range letter.
  tuple operator()( std::span<letter const> x ) const;

  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==( map const& f, map const& g ) noexcept
  {
    return f.hash_ == g.hash_ && f.alphabet_ == g.alphabet_ && f.arity_ == g.arity_ &&
           f.coarity_ == g.coarity_ && f.table_ == g.table_;
  }

private:
  alphabet alphabet_;
  unsigned arity_;
  unsigned coarity_;
  std::uint64_t rows_;
  std::vector<letter> table_;
  std::size_t hash_;
};

/// f(x), see `map::operator()`.
tuple evaluate( map const& f, std::span<letter const> x );

/// arity(f) == coarity(f).
bool is_balanced( map const& f ) noexcept;

/// True iff f is a bijection A^n -> A^n. Unbalanced maps are never bijective,
/// including over the one-letter alphabet.
bool is_bijective( map const& f );

/// f^{-1}; throws `domain_error` unless f is bijective.
map inverse( map const& f );

/// Bijection of A^n from a partial assignment: `partial[r]` is the image index of
/// row r, or -1. Unassigned rows take the unused images in increasing order.
/// Throws `domain_error` if two rows share an image.
map complete_bijection( alphabet a, unsigned n, std::vector<std::int64_t> const& partial );

/// The unary map x -> alpha(x), alpha given by its 1-based image list.
map unary_map( alphabet a, std::span<unsigned const> images );

} // namespace revclone

template<>
struct std::hash<revclone::map>
{
  std::size_t operator()( revclone::map const& f ) const noexcept { return f.hash(); }
};
