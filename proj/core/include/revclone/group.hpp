#pragma once

#include <revclone/map.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace revclone
{

using big_int = boost::multiprecision::cpp_int;

/// A permutation of the tuple indices {0, ..., d - 1}. Products read left to right.
class tuple_permutation
{
public:
  tuple_permutation() = default;
  explicit tuple_permutation( std::size_t degree );

  static tuple_permutation from_images( std::vector<std::uint32_t> images );

  /// Index p goes to encode(f(decode(p))). Requires a balanced bijection.
  static tuple_permutation from_map( map const& f );

  /// Inverse of `from_map` for a given alphabet and arity.
  map to_map( alphabet a, unsigned n ) const;

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[]( std::size_t p ) const noexcept { return images_[p]; }
  std::vector<std::uint32_t> const& images() const noexcept { return images_; }

  tuple_permutation inverse() const;
  bool is_identity() const noexcept;

  /// Smallest moved point, or `degree()` for the identity.
  std::size_t first_moved() const noexcept;

  friend tuple_permutation operator*( tuple_permutation const& a, tuple_permutation const& b );
  friend bool operator==( tuple_permutation const&, tuple_permutation const& ) = default;
  friend auto operator<=>( tuple_permutation const&, tuple_permutation const& ) = default;

private:
  std::vector<std::uint32_t> images_;
};

/// +1 or -1.
int sign( tuple_permutation const& p );

struct tuple_permutation_hash
{
  std::size_t operator()( tuple_permutation const& p ) const noexcept;
};

/// One letter of a witness word: generator `index` (0-based), possibly inverted.
struct word_letter
{
  std::size_t index;
  bool inverse;
  friend bool operator==( word_letter, word_letter ) = default;
};

/// Product, applied left to right.
using word = std::vector<word_letter>;

/// Permutation group given by generators, with a stabilizer chain built by
/// deterministic Schreier-Sims (base points are first moved points).
class tuple_group
{
public:
  struct generator
  {
    std::string name;
    tuple_permutation perm;
  };

  /// Throws `shape_error` if a generator has another degree.
  static tuple_group build( std::size_t degree, std::vector<generator> generators );

  std::size_t degree() const noexcept { return degree_; }
  std::vector<generator> const& generators() const noexcept { return generators_; }

  big_int order() const;
  std::vector<std::size_t> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  std::size_t strong_generator_count() const noexcept { return strong_.size(); }

  bool contains( tuple_permutation const& p ) const;

  /// A word over the generators whose product is p, or nothing if p is not in
  /// the group. Throws if the expanded word would exceed `max_length`.
  std::optional<word> witness( tuple_permutation const& p, std::size_t max_length = 1u << 20 ) const;

  /// Uniformly random element.
  tuple_permutation random_element( std::mt19937_64& rng ) const;

  /// Calls fn on every element; refuses (throws) when the order exceeds `cap`.
  void for_each_element( std::function<void( tuple_permutation const& )> const& fn, std::uint64_t cap ) const;

private:
  struct factor
  {
    std::size_t strong;
    bool inverse;
  };

  struct strong_generator
  {
    tuple_permutation perm;
    tuple_permutation inv;
    std::optional<std::size_t> original; // index into generators_ when it is one
    std::vector<factor> factors;          // otherwise a product of earlier strong generators
  };

  struct level
  {
    std::size_t base_point;
    std::vector<std::size_t> gens;          // indices into strong_
    std::vector<std::uint32_t> orbit;       // in discovery order
    std::vector<std::int64_t> parent_gen;   // per point: strong generator reaching it, -1 root, -2 absent
    std::vector<std::uint32_t> parent;      // predecessor point
    std::vector<std::vector<bool>> checked; // checked[orbit position][gen position]
  };

  tuple_group() = default;

  void add_strong( std::size_t level_index, std::size_t strong_index );
  void extend_orbit( level& l, std::size_t from );
  /// Returns (residue, level where sifting stopped); appends the factors applied.
  std::pair<tuple_permutation, std::size_t> sift( tuple_permutation h, std::size_t from_level,
                                                  std::vector<factor>* trace ) const;
  /// Multiplies h by u_x^{-1} for level l, recording factors.
  void strip( tuple_permutation& h, level const& l, std::uint32_t x, std::vector<factor>* trace ) const;
  std::vector<factor> transversal_factors( level const& l, std::uint32_t x ) const;
  tuple_permutation transversal( level const& l, std::uint32_t x ) const;
  void schreier_sims();
  void expand( factor f, word& out, std::size_t max_length ) const;

  std::size_t degree_ = 0;
  std::vector<generator> generators_;
  std::vector<strong_generator> strong_;
  std::vector<level> levels_;
};

/// Every element of the group generated by `gens`, by breadth-first search.
/// Throws once more than `cap` elements are found. Independent of the chain code.
std::vector<tuple_permutation> enumerate_elements( std::vector<tuple_permutation> const& gens, std::size_t degree,
                                                   std::size_t cap );

} // namespace revclone
