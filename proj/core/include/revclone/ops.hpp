#pragma once

#include <revclone/map.hpp>
#include <revclone/permutation.hpp>

#include <span>
#include <vector>

namespace revclone
{

/// f (+) g: runs f on the first arity(f) inputs and g on the rest, outputs concatenated.
map oplus( map const& f, map const& g );

/// Folds `oplus` over a non-empty list.
map oplus( std::span<map const> maps );

/// f o_k g. The first arity(g) inputs feed g; g's first k outputs and the
/// remaining inputs feed f; the result is f's outputs followed by g_{k+1..t}.
/// Requires k <= arity(f) and k <= coarity(g).
map compose_k( map const& f, map const& g, unsigned k );

/// f . g = f o_k g with k = min(arity(f), coarity(g)); g is applied first.
map bullet( map const& f, map const& g );

/// Swaps the first two inputs. Identity on maps of arity < 2.
map tau( map const& f );

/// zeta f (x_1, ..., x_n) = f(x_2, ..., x_n, x_1).
map zeta( map const& f );

/// Swaps the first two outputs. Identity on maps of coarity < 2.
map bar_tau( map const& f );

/// Rotates outputs: (f_2, ..., f_m, f_1).
map bar_zeta( map const& f );

/// Identifies the first two inputs: Delta f (x_1, ..., x_{n-1}) = f(x_1, x_1, x_2, ..., x_{n-1}).
/// Identity on maps of arity < 2.
map delta( map const& f );

/// Adds a dummy first input: nabla f (x_0, x_1, ..., x_n) = f(x_1, ..., x_n).
map nabla( map const& f );

/// pi_alpha (x_1, ..., x_n) = (x_{alpha^-1(1)}, ..., x_{alpha^-1(n)}): input wire i ends up on wire alpha(i).
map pi( alphabet a, wire_permutation const& alpha );

/// s(theta, f): keeps outputs theta_1, ..., theta_t (1-based, distinct).
map select( std::span<unsigned const> theta, map const& f );

/// Like `select` but indices may repeat, e.g. s((1, 1), i_1) is the fan-out.
map select_multi( std::span<unsigned const> theta, map const& f );

/// k(theta, (a_1, ..., a_r), f): fixes input positions theta_j (strictly increasing)
/// to a_j; the remaining inputs keep their order.
map insert( std::span<unsigned const> positions, std::span<letter const> constants, map const& f );

/// f^o_{theta', theta} = s(theta, k(theta', (o, ..., o), f)).
map reduct( map const& f, std::span<unsigned const> theta_prime, std::span<unsigned const> theta, letter o );

/// f o pi_alpha: permutes the inputs of f, so that (f o pi_alpha)(x) = f(pi_alpha(x)).
map permute_inputs( map const& f, wire_permutation const& alpha );

/// pi_alpha o f: permutes the outputs of f.
map permute_outputs( map const& f, wire_permutation const& alpha );

} // namespace revclone
