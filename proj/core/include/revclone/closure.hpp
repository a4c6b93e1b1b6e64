#pragma once

#include <revclone/gates.hpp>
#include <revclone/group.hpp>
#include <revclone/map.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revclone
{

/// Bounds for searches over C(F).
struct search_caps
{
  unsigned max_arity = 3;
  unsigned max_coarity = 3;
  std::size_t max_elements = 200000; // distinct maps kept, or group elements enumerated
  unsigned max_rounds = 64;
};

/// Throws `domain_error` unless every field is positive.
void validate( search_caps const& caps );

/// Group generated by F-bar: each generator padded with identity wires to arity n,
/// plus generators of all wire permutations of {1..n}.
/// Every generator must be a balanced bijection of arity <= n.
tuple_group slice_group( std::vector<named_map> const& F, alphabet a, unsigned n );

struct saturation
{
  std::vector<map> maps;     // discovery order
  bool complete = false;     // the last round produced nothing new
  bool shape_pruned = false; // some results were dropped by the arity/coarity caps
  bool overflow = false;     // stopped at max_elements
  unsigned rounds = 0;
};

/// Breadth-first closure of {i_1} and F under oplus, tau, zeta and o_k for k >= 1
/// (and delta, nabla when requested). Each round combines the maps found in the
/// previous round with everything known so far, in both orders.
saturation saturate( std::vector<map> const& F, alphabet a, search_caps const& caps, bool with_delta_nabla );

/// All constant insertions into members of the set (the set itself included).
std::vector<map> op_K( std::vector<map> const& F );
/// All selections of outputs, in every order and of every size including zero.
std::vector<map> op_S( std::vector<map> const& F );
/// The bijective members.
std::vector<map> op_R( std::vector<map> const& F );

enum class realisation_kind
{
  isomorphic,   // g in C(F)
  no_garbage,   // g in KC(F)
  no_constants, // g in SC(F)
  general,      // g in SKC(F)
  not_found,
};

std::string to_string( realisation_kind kind );

/// g_i(x) = f_i(x, a) for i <= coarity(g).
struct realisation
{
  realisation_kind kind = realisation_kind::not_found;
  std::optional<map> f;
  tuple constants;
  std::optional<word> words; // for isomorphic verdicts found through a slice group
  bool truncated = false;    // part of the search space was skipped because of the caps
};

/// Strongest verdict, trying isomorphic, no-garbage, no-constants, general in that
/// order and constants in lexicographic order. Bijective F is searched through slice
/// groups, any other F through `saturate`.
realisation check_realisation( map const& g, std::vector<named_map> const& F, alphabet a, search_caps const& caps );

/// Whether f with trailing constants a realises g with the trailing outputs reproducing a.
bool realises( map const& f, std::span<letter const> constants, map const& g );

enum class storage_level
{
  none,
  weak,
  strong,
};

std::string to_string( storage_level level );

struct storage_report
{
  storage_level level = storage_level::none;
  std::optional<tuple> failing_input; // data input where the weak or strong condition fails
  std::string reason;
};

/// Temporary-storage check for f : A^l -> A^k, constants a (length l - m), g : A^m -> A^n.
/// Requires n + l - m = k.
storage_report check_temp_storage( map const& f, std::span<letter const> constants, map const& g );

/// Searches C(F) (through slice groups) for a temporary-storage realisation of g,
/// returning the strongest level found.
storage_level find_temp_storage( map const& g, std::vector<named_map> const& F, alphabet a, search_caps const& caps,
                                 bool* truncated = nullptr );

/// First components s((1), f) of the capped closure, deduplicated.
std::vector<map> function_set( std::vector<map> const& F, alphabet a, search_caps const& caps );

/// {s((1), f) : f in G} for G acting on A^n, as the orbit of the first projection
/// under f -> f o s. Throws past `cap` functions.
std::vector<map> function_set_of_group( tuple_group const& G, alphabet a, unsigned n, std::size_t cap );

/// For every n-ary input the preimage sizes |f^{-1}(b)| are all k^(n-1).
bool is_balanced_function( map const& f );

/// Membership of g in the closures of the inclusion diagram, as far as the caps allow.
struct realisation_profile
{
  bool in_C = false;
  bool in_KC = false;
  bool in_SC = false;
  bool in_SKC = false;
  bool in_T = false;
  bool in_TS = false;
  bool truncated = false;
};

realisation_profile profile( map const& g, std::vector<named_map> const& F, alphabet a, search_caps const& caps );

} // namespace revclone
