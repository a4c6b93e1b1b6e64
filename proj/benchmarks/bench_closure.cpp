#include <revclone/closure.hpp>
#include <revclone/gates.hpp>

#include <benchmark/benchmark.h>

using namespace revclone;

// Breadth-first saturation of {NOT, CNOT} (k = 2) or {(1 2), (1 2 3)} (k = 3) up to arity 3.
static void bm_saturate( benchmark::State& state )
{
  auto const k = static_cast<unsigned>( state.range( 0 ) );
  alphabet const a( k );
  std::vector<map> F;
  if ( k == 2 )
  {
    auto const s = alphabet_permutation::transposition( 2, 1, 2 );
    F = { tg( a, 1, s, 1 ), tg( a, 2, s, 1 ) };
  }
  else
  {
    F = { tg( a, 1, alphabet_permutation::transposition( k, 1, 2 ), 1 ), tg( a, 1, alphabet_permutation::full_cycle( k ), 1 ) };
  }
  search_caps caps;
  caps.max_arity = 3;
  caps.max_coarity = 3;
  std::size_t found = 0;
  for ( auto _ : state )
  {
    auto const s = saturate( F, a, caps, false );
    found = s.maps.size();
    benchmark::DoNotOptimize( found );
  }
  state.counters["maps"] = static_cast<double>( found );
}
BENCHMARK( bm_saturate )->Arg( 2 )->Arg( 3 )->Unit( benchmark::kMillisecond );

static void bm_function_set_of_group( benchmark::State& state )
{
  alphabet const a( 3 );
  auto const G = slice_group( standard_generators( a, 2 ), a, 2 );
  for ( auto _ : state )
  {
    benchmark::DoNotOptimize( function_set_of_group( G, a, 2, 1u << 20 ) );
  }
}
BENCHMARK( bm_function_set_of_group )->Unit( benchmark::kMillisecond );
