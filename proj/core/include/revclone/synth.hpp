#pragma once

#include <revclone/map.hpp>
#include <revclone/netlist.hpp>
#include <revclone/permutation.hpp>
#include <revclone/term.hpp>

#include <vector>

namespace revclone
{

/// g : A^m -> A^n embedded in a bijection f of A^r: feeding x on wires 1..m and o on
/// wires m+1..r, outputs 1..n of f are g(x).
struct embedding
{
  unsigned r = 0;
  map f = map::identity( alphabet( 1 ), 0 );
  letter o = 1;
  std::vector<unsigned> theta1;             // data input positions (1..m)
  std::vector<unsigned> constant_positions; // m+1..r
  std::vector<unsigned> theta2;             // selected outputs (1..n)
};

/// r = max(m, n + ceil(log_k max_a |g^{-1}(a)|)). Rows (x, o, ..., o) go to
/// (g(x), t) with t the j-th tag in lexicographic order for the j-th preimage of g(x);
/// the remaining rows are completed lexicographically.
embedding embed( map const& g );

/// The map an embedding realises: reduct(f, constant_positions, theta2, o).
map embedded( embedding const& e );

/// Elementary maps whose composition, applied in list order, is f.
std::vector<map> decompose_elementary( map const& f );

/// For an elementary map swapping x and y: atomic maps along the path from x to y
/// that changes one coordinate at a time, as the palindrome f_1, ..., f_L, ..., f_1.
std::vector<map> elementary_to_atomic( map const& e );

/// Conjugates TG(n, (x_n y_n), o) by unary gates and a wire swap into the given atomic map.
netlist atomic_to_gates( map const& a, letter o );

/// Factors alpha over s = (1 2) and c = (1 ... k); `true` stands for c. Applied in list order.
std::vector<bool> factor_over_swap_and_cycle( alphabet_permutation const& alpha );

/// Term over TG(2, ., 1), TG(1, ., 1) and wire permutations that evaluates to
/// TG(n, alpha, 1). Requires an odd alphabet of size at least 3.
term lift_odd( alphabet a, unsigned n, alphabet_permutation const& alpha );

/// Sigma_2 . Sigma_1 for TG(n + 1, (1 2), 1) and Sigma for TG(n + 1, (1 ... k), 1), built
/// from TG(n, ., 1) literals without further recursion.
term lift_odd_step_swap( alphabet a, unsigned n );
term lift_odd_step_cycle( alphabet a, unsigned n );

struct storage_lift
{
  netlist circuit;  // data wires 1..n, ancilla wires n+1..n+L
  term f_term;      // the circuit as a term
  map f = map::identity( alphabet( 1 ), 0 ); // its table
  tuple constants;  // L copies of p
  map g = map::identity( alphabet( 1 ), 0 ); // reduct with the ancillas fixed to p, data outputs kept
  unsigned ancillas = 0;
};

/// TG(n, alpha, o) from gates of arity at most 3 with one ancilla per recursion level,
/// each initialised to p != o and returned to p.
storage_lift lift_temp_storage( alphabet a, unsigned n, alphabet_permutation const& alpha, letter o, letter p );

/// Smallest letter different from o.
letter default_ancilla_letter( alphabet a, letter o );

/// One induction step on n + 1 wires with the ancilla on wire n - 1:
/// f = (TG(n-1, (o p), o) (+) i_2) . (i_{n-2} (+) TG(3, alpha, o)) . (TG(n-1, (o p), o) (+) i_2).
term temp_storage_step( unsigned n, alphabet_permutation const& alpha, letter o, letter p );

enum class gate_policy
{
  tg_n,      // TG(n, ., o) gates of full width plus unary gates
  odd_small, // odd alphabets: only (1 2), (1 ... k), TG(2, (1 2), 1), TG(2, (1 ... k), 1) and wire permutations
};

/// Netlist equal to f, built from the elementary, atomic and gate decompositions.
netlist synthesize( map const& f, gate_policy policy );

} // namespace revclone
