#pragma once

#include <revclone/map.hpp>
#include <revclone/permutation.hpp>

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revclone
{

enum class term_kind
{
  name,
  id,
  tg,
  pi,
  oplus,
  bullet,
  comp,
  tau,
  zeta,
  btau,
  bzeta,
  delta,
  nabla,
  sel,
  ins,
};

struct term_node;

/// Immutable expression tree; subtrees may be shared.
using term = std::shared_ptr<term_node const>;

struct term_node
{
  term_kind kind = term_kind::id;
  std::string name{};                 // name
  unsigned n = 0;                     // id width, tg arity, pi degree, comp k
  cycle_list cycles{};                // tg / pi literal as written, multiplied left to right
  letter o = 0;                       // tg control letter
  std::vector<unsigned> indices{};    // sel theta, ins positions
  std::vector<letter> constants{};    // ins constants
  std::vector<term> children{};
};

namespace terms
{
term name( std::string n );
term id( unsigned n );
term tg( unsigned n, cycle_list cycles, letter o );
term tg( unsigned n, alphabet_permutation const& alpha, letter o );
term pi( unsigned degree, cycle_list cycles );
term pi( wire_permutation const& alpha );
term oplus( std::vector<term> children );
term bullet( std::vector<term> children );
term comp( unsigned k, term f, term g );
term unary( term_kind kind, term child );
term sel( std::vector<unsigned> theta, term child );
term ins( std::vector<unsigned> positions, std::vector<letter> constants, term child );
} // namespace terms

/// Structural equality.
bool equal( term const& a, term const& b );

/// Canonical S-expression; `parse_term(to_string(t))` is structurally equal to t.
std::string to_string( term const& t );

/// Number of leaves (names, id, tg, pi) in the tree, counting shared subtrees each time.
std::size_t leaf_count( term const& t );

/// A parsed `.circ` file: optional alphabet, let-bindings in order, main term.
struct program
{
  std::optional<unsigned> alphabet_size;
  std::vector<std::pair<std::string, term>> lets;
  term main;
};

/// Parses a whole `.circ` file. Errors carry line and column.
program parse_program( std::string_view text );

/// Parses a single term (no let or alphabet forms).
term parse_term( std::string_view text );

std::string to_string( program const& p );

using bindings = std::map<std::string, map>;

struct term_shape
{
  unsigned arity;
  unsigned coarity;
  friend bool operator==( term_shape, term_shape ) = default;
};

/// Shape of t without building any table. Errors name the offending node path.
term_shape shape_of( term const& t, bindings const& env );

/// Evaluates t over the alphabet; names resolve through env.
map evaluate_term( term const& t, bindings const& env, alphabet a );

/// Evaluates the lets in order (each visible to later ones), then the main term.
map evaluate_program( program const& p, bindings const& env, alphabet a );

/// Names referenced by the program that are not bound by its own lets.
std::set<std::string> free_names( program const& p );
std::set<std::string> free_names( term const& t );

} // namespace revclone
