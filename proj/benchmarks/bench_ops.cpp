#include <revclone/identities.hpp>
#include <revclone/ops.hpp>

#include <benchmark/benchmark.h>

using namespace revclone;

// compose_k on bijections of A^n with k = n (plain composition).
static void bm_compose( benchmark::State& state )
{
  alphabet const a( static_cast<unsigned>( state.range( 0 ) ) );
  auto const n = static_cast<unsigned>( state.range( 1 ) );
  std::mt19937_64 rng( 3 );
  auto const f = random_bijection( rng, a, n );
  auto const g = random_bijection( rng, a, n );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( compose_k( f, g, n ) );
  }
  state.SetItemsProcessed( state.iterations() * static_cast<std::int64_t>( f.table().size() / n ) );
}
BENCHMARK( bm_compose )->Args( { 2, 4 } )->Args( { 3, 3 } )->Args( { 2, 10 } )->Args( { 3, 6 } );

static void bm_partial_compose( benchmark::State& state )
{
  alphabet const a( 3 );
  std::mt19937_64 rng( 4 );
  auto const f = random_map( rng, a, 3, 2 );
  auto const g = random_map( rng, a, 3, 3 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( compose_k( f, g, 2 ) );
  }
}
BENCHMARK( bm_partial_compose );

static void bm_oplus( benchmark::State& state )
{
  alphabet const a( 3 );
  std::mt19937_64 rng( 5 );
  auto const f = random_bijection( rng, a, 3 );
  auto const g = random_bijection( rng, a, 3 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( oplus( f, g ) );
  }
}
BENCHMARK( bm_oplus );

static void bm_unary_ops( benchmark::State& state )
{
  alphabet const a( 3 );
  std::mt19937_64 rng( 6 );
  auto const f = random_bijection( rng, a, 5 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( zeta( tau( f ) ) );
  }
}
BENCHMARK( bm_unary_ops );
