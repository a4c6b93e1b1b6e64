#include <revclone/identities.hpp>
#include <revclone/netlist.hpp>
#include <revclone/synth.hpp>
#include <revclone/term.hpp>

#include <benchmark/benchmark.h>

using namespace revclone;

static void bm_lift_odd( benchmark::State& state )
{
  alphabet const a( 3 );
  auto const n = static_cast<unsigned>( state.range( 0 ) );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( term_to_netlist( lift_odd( a, n, alphabet_permutation::full_cycle( 3 ) ) ) );
  }
}
BENCHMARK( bm_lift_odd )->DenseRange( 3, 6 )->Unit( benchmark::kMicrosecond );

static void bm_synthesize( benchmark::State& state )
{
  alphabet const a( 3 );
  std::mt19937_64 rng( 7 );
  auto const f = random_bijection( rng, a, static_cast<unsigned>( state.range( 0 ) ) );
  std::size_t stages = 0;
  for ( auto _ : state )
  {
    auto const nl = synthesize( f, gate_policy::tg_n );
    stages = nl.stages.size();
    benchmark::DoNotOptimize( stages );
  }
  state.counters["stages"] = static_cast<double>( stages );
}
BENCHMARK( bm_synthesize )->DenseRange( 1, 3 )->Unit( benchmark::kMillisecond );

static void bm_simulate( benchmark::State& state )
{
  alphabet const a( 2 );
  auto const lift = lift_temp_storage( a, static_cast<unsigned>( state.range( 0 ) ), alphabet_permutation::transposition( 2, 1, 2 ), 1, 2 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( simulate( lift.circuit, a ) );
  }
}
BENCHMARK( bm_simulate )->DenseRange( 4, 8, 2 )->Unit( benchmark::kMicrosecond );
