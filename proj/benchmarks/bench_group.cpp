#include <revclone/closure.hpp>
#include <revclone/gates.hpp>
#include <revclone/group.hpp>
#include <revclone/ops.hpp>

#include <benchmark/benchmark.h>

using namespace revclone;

namespace
{

std::vector<named_map> lower_toffoli( unsigned n )
{
  alphabet const a( 2 );
  auto const s = alphabet_permutation::transposition( 2, 1, 2 );
  std::vector<named_map> gens;
  for ( unsigned i = 1; i < n; ++i )
  {
    gens.push_back( { "TG" + std::to_string( i ), tg( a, i, s, 1 ) } );
    gens.push_back( { "TG" + std::to_string( i ) + "o2", tg( a, i, s, 2 ) } );
  }
  return gens;
}

} // namespace

// Schreier-Sims over the standard generators, degree k^n.
static void bm_slice_group_standard( benchmark::State& state )
{
  alphabet const a( static_cast<unsigned>( state.range( 0 ) ) );
  auto const n = static_cast<unsigned>( state.range( 1 ) );
  auto const gens = standard_generators( a, n );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( slice_group( gens, a, n ).order() );
  }
  state.counters["degree"] = static_cast<double>( slice_group( gens, a, n ).degree() );
}
BENCHMARK( bm_slice_group_standard )->Args( { 3, 2 } )->Args( { 2, 4 } )->Args( { 5, 2 } )->Args( { 3, 3 } )->Unit( benchmark::kMillisecond );

static void bm_slice_group_lower_toffoli( benchmark::State& state )
{
  alphabet const a( 2 );
  auto const n = static_cast<unsigned>( state.range( 0 ) );
  auto const gens = lower_toffoli( n );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( slice_group( gens, a, n ).order() );
  }
}
BENCHMARK( bm_slice_group_lower_toffoli )->DenseRange( 3, 5 )->Unit( benchmark::kMillisecond );

static void bm_membership( benchmark::State& state )
{
  alphabet const a( 3 );
  auto const G = slice_group( standard_generators( a, 3 ), a, 3 );
  std::mt19937_64 rng( 1 );
  std::vector<tuple_permutation> samples;
  for ( int i = 0; i < 64; ++i )
  {
    samples.push_back( G.random_element( rng ) );
  }
  std::size_t i = 0;
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( G.contains( samples[i++ % samples.size()] ) );
  }
}
BENCHMARK( bm_membership );

static void bm_witness( benchmark::State& state )
{
  alphabet const a( 3 );
  auto const G = slice_group( standard_generators( a, 2 ), a, 2 );
  std::mt19937_64 rng( 2 );
  auto const target = G.random_element( rng );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( G.witness( target ) );
  }
}
BENCHMARK( bm_witness )->Unit( benchmark::kMicrosecond );
