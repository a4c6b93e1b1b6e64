#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace revclone
{

/// A letter of the alphabet {1, ..., k}.
using letter = std::uint8_t;

/// A tuple of letters; used both for inputs and for outputs of a map.
using tuple = std::vector<letter>;

/// Largest supported alphabet size (letters are stored in a byte).
inline constexpr unsigned max_alphabet_size = 255u;

/// Largest number of rows a single truth table may have.
inline constexpr std::uint64_t max_table_rows = std::uint64_t{ 1 } << 26;

/// Finite alphabet {1, ..., k}.
class alphabet
{
public:
  explicit alphabet( unsigned size );

  unsigned size() const noexcept { return size_; }
  bool contains( unsigned value ) const noexcept { return value >= 1u && value <= size_; }

  /// Number of tuples of length n, i.e. k^n. Throws if it exceeds `max_table_rows`.
  std::uint64_t tuple_count( unsigned n ) const;

  friend bool operator==( alphabet, alphabet ) = default;

private:
  unsigned size_;
};

/// Position of a tuple in the big-endian mixed-radix enumeration of A^n.
struct tuple_index
{
  std::uint64_t value{ 0 };
  friend auto operator<=>( tuple_index, tuple_index ) = default;
};

/// Index of `t` in A^n: sum of (t_i - 1) * k^(n - i), x_1 most significant.
tuple_index encode( std::span<letter const> t, alphabet a, unsigned n );

/// Unchecked variant of `encode` for hot loops; letters must already be valid.
inline std::uint64_t encode_unchecked( std::span<letter const> t, unsigned k ) noexcept
{
  std::uint64_t index = 0;
  for ( auto const x : t )
  {
    index = index * k + ( x - 1u );
  }
  return index;
}

/// Inverse of `encode`.
tuple decode( tuple_index index, alphabet a, unsigned n );

/// Writes the tuple with the given index into `out` (length n).
inline void decode_into( std::uint64_t index, unsigned k, std::span<letter> out ) noexcept
{
  for ( auto i = out.size(); i-- > 0; )
  {
    out[i] = static_cast<letter>( index % k + 1u );
    index /= k;
  }
}

/// Concatenation (x_1, ..., x_n) (+) (y_1, ..., y_m).
tuple concat( std::span<letter const> x, std::span<letter const> y );

/// Space-separated letters, e.g. "1 3 2".
std::string to_string( std::span<letter const> t );

} // namespace revclone
