#pragma once

#include <revclone/map.hpp>
#include <revclone/permutation.hpp>
#include <revclone/term.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace revclone
{

enum class stage_kind
{
  tg,    // TG(n, alpha, o) on n wires, the last listed wire is the target
  pi,    // wire permutation on the listed wires: the value on listed position i moves to position alpha(i)
  unary, // letter permutation on one wire
};

struct stage
{
  stage_kind kind;
  cycle_list perm;             // letter permutation (tg, unary) or position permutation (pi)
  letter o = 1;                // control letter of a tg stage
  std::vector<unsigned> wires; // 1-based
};

/// Gates applied in list order on `wires` wires.
struct netlist
{
  unsigned wires = 0;
  std::vector<stage> stages;
};

/// Throws if a stage lists repeated or out-of-range wires or a malformed permutation.
void validate( netlist const& nl, alphabet a );

/// Runs the stages on every input tuple.
map simulate( netlist const& nl, alphabet a );

/// Stage i becomes pi_{sigma^-1} . (G (+) i) . pi_sigma with sigma routing its wires to
/// the front; the chain is bullet(T_L, ..., T_1). An empty netlist is (id w).
term netlist_to_term( netlist const& nl );

/// Flattens a term built from id, tg, pi, oplus and same-width bullet/comp into stages.
/// Wire permutations are absorbed into wire labels; one trailing pi stage restores the
/// order if needed. Throws for any other construct.
netlist term_to_netlist( term const& t );

/// Text format:
///
///     wires 3
///     tg 3 (1 2) 1 @ 1 2 3
///     pi (1 2) @ 1 3
///     u (1 2 3) @ 2
netlist parse_netlist( std::string_view text );
std::string format_netlist( netlist const& nl );

/// Gate count by arity of the widest gate in each stage (pi stages are not counted).
std::vector<std::size_t> gate_histogram( netlist const& nl );

} // namespace revclone
