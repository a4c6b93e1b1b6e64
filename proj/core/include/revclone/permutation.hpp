#pragma once

#include <revclone/error.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace revclone
{

/// Cycle notation, each cycle a list of 1-based points: {{1,2,3},{4,5}} is (1 2 3)(4 5).
using cycle_list = std::vector<std::vector<unsigned>>;

/// A bijection of {1, ..., d}.
///
/// Products are read left to right: the image of p under `a * b` is (p^a)^b,
/// so `(1 2 3) * (1 2) == (2 3)`. The tag keeps permutations of letters and
/// permutations of wire positions from being mixed up.
template<class Tag>
class permutation
{
public:
  permutation() = default;

  /// Identity of the given degree.
  explicit permutation( unsigned degree ) : images_( degree )
  {
    std::iota( images_.begin(), images_.end(), 1u );
  }

  /// `images[p - 1]` is the image of p.
  static permutation from_images( std::vector<unsigned> images )
  {
    std::vector<bool> seen( images.size(), false );
    for ( auto const q : images )
    {
      if ( q == 0u || q > images.size() || seen[q - 1u] )
      {
        throw domain_error( "image list is not a permutation of {1.." + std::to_string( images.size() ) + "}" );
      }
      seen[q - 1u] = true;
    }
    permutation p;
    p.images_ = std::move( images );
    return p;
  }

  static permutation from_cycles( unsigned degree, cycle_list const& cycles )
  {
    permutation p( degree );
    std::vector<bool> used( degree, false );
    for ( auto const& cycle : cycles )
    {
      for ( std::size_t i = 0; i < cycle.size(); ++i )
      {
        auto const a = cycle[i];
        if ( a == 0u || a > degree )
        {
          throw domain_error( "cycle point " + std::to_string( a ) + " outside {1.." + std::to_string( degree ) + "}" );
        }
        if ( used[a - 1u] )
        {
          throw domain_error( "cycles are not disjoint: point " + std::to_string( a ) + " repeats" );
        }
        used[a - 1u] = true;
        p.images_[a - 1u] = cycle[( i + 1 ) % cycle.size()];
      }
    }
    return p;
  }

  /// Product of possibly overlapping cycles, applied left to right.
  static permutation from_cycle_product( unsigned degree, cycle_list const& cycles )
  {
    permutation p( degree );
    for ( auto const& cycle : cycles )
    {
      p = p * from_cycles( degree, { cycle } );
    }
    return p;
  }

  /// The k-cycle (1 2 ... k).
  static permutation full_cycle( unsigned degree )
  {
    std::vector<unsigned> cycle( degree );
    std::iota( cycle.begin(), cycle.end(), 1u );
    return from_cycles( degree, { cycle } );
  }

  /// The transposition (a b).
  static permutation transposition( unsigned degree, unsigned a, unsigned b )
  {
    if ( a == b )
    {
      return permutation( degree );
    }
    return from_cycles( degree, { { a, b } } );
  }

  unsigned degree() const noexcept { return static_cast<unsigned>( images_.size() ); }

  /// p^alpha.
  unsigned apply( unsigned p ) const { return images_.at( p - 1u ); }
  unsigned operator()( unsigned p ) const { return apply( p ); }

  std::vector<unsigned> const& images() const noexcept { return images_; }

  permutation inverse() const
  {
    permutation q;
    q.images_.resize( images_.size() );
    for ( unsigned p = 1; p <= degree(); ++p )
    {
      q.images_[images_[p - 1u] - 1u] = p;
    }
    return q;
  }

  permutation pow( long long e ) const
  {
    auto base = e < 0 ? inverse() : *this;
    auto n = static_cast<unsigned long long>( e < 0 ? -e : e );
    permutation result( degree() );
    while ( n != 0 )
    {
      if ( n & 1u )
      {
        result = result * base;
      }
      base = base * base;
      n >>= 1u;
    }
    return result;
  }

  bool is_identity() const noexcept
  {
    for ( unsigned p = 1; p <= degree(); ++p )
    {
      if ( images_[p - 1u] != p )
      {
        return false;
      }
    }
    return true;
  }

  bool is_involution() const { return ( *this * *this ).is_identity(); }

  /// Points moved by the permutation, in increasing order.
  std::vector<unsigned> support() const
  {
    std::vector<unsigned> moved;
    for ( unsigned p = 1; p <= degree(); ++p )
    {
      if ( images_[p - 1u] != p )
      {
        moved.push_back( p );
      }
    }
    return moved;
  }

  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  cycle_list cycles() const
  {
    cycle_list result;
    std::vector<bool> seen( degree(), false );
    for ( unsigned p = 1; p <= degree(); ++p )
    {
      if ( seen[p - 1u] || images_[p - 1u] == p )
      {
        continue;
      }
      std::vector<unsigned> cycle;
      for ( auto q = p; !seen[q - 1u]; q = images_[q - 1u] )
      {
        seen[q - 1u] = true;
        cycle.push_back( q );
      }
      result.push_back( std::move( cycle ) );
    }
    return result;
  }

  /// +1 for even permutations, -1 for odd ones.
  int sign() const
  {
    int s = 1;
    for ( auto const& c : cycles() )
    {
      if ( c.size() % 2 == 0 )
      {
        s = -s;
      }
    }
    return s;
  }

  /// Cycle notation, e.g. "(1 2 3)(4 5)"; the identity prints as "()".
  std::string to_string() const
  {
    auto const cs = cycles();
    if ( cs.empty() )
    {
      return "()";
    }
    std::string s;
    for ( auto const& c : cs )
    {
      s += '(';
      for ( std::size_t i = 0; i < c.size(); ++i )
      {
        if ( i )
        {
          s += ' ';
        }
        s += std::to_string( c[i] );
      }
      s += ')';
    }
    return s;
  }

  /// Left-to-right product: p^(a*b) = (p^a)^b.
  friend permutation operator*( permutation const& a, permutation const& b )
  {
    if ( a.degree() != b.degree() )
    {
      throw shape_error( "permutation product", "degree " + std::to_string( a.degree() ),
                         "degree " + std::to_string( b.degree() ) );
    }
    permutation c;
    c.images_.resize( a.images_.size() );
    for ( std::size_t i = 0; i < a.images_.size(); ++i )
    {
      c.images_[i] = b.images_[a.images_[i] - 1u];
    }
    return c;
  }

  friend bool operator==( permutation const&, permutation const& ) = default;
  friend auto operator<=>( permutation const&, permutation const& ) = default;

private:
  std::vector<unsigned> images_;
};

struct letter_tag;
struct wire_tag;

/// alpha in S_A, acting on letters {1..k}.
using alphabet_permutation = permutation<letter_tag>;

/// beta in S_n, acting on wire positions {1..n}.
using wire_permutation = permutation<wire_tag>;

/// Parses cycle notation such as "(1 2)(3 4)", "(1,2,3)" or "()". Cycles are
/// multiplied left to right, so overlapping cycles are allowed.
cycle_list parse_cycles( std::string_view text );

template<class Tag>
permutation<Tag> parse_permutation( std::string_view text, unsigned degree )
{
  return permutation<Tag>::from_cycle_product( degree, parse_cycles( text ) );
}

} // namespace revclone
