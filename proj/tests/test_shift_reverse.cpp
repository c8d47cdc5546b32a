#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <gf2seq/oracles.hpp>
#include <gf2seq/shift_reverse.hpp>

using namespace gf2seq;

TEST_CASE( "symbolic shift on known supports" )
{
  REQUIRE( shift_brep( binomial_combo( 8, { 5 } ), 4 ).support == std::vector<std::uint32_t>{ 1, 5 } );
  REQUIRE( shift_brep( binomial_combo( 8, { 5 } ), 6 ).support == std::vector<std::uint32_t>{ 1, 3, 5 } );
  REQUIRE( shift_brep( binomial_combo( 16, { 8 } ), 1 ).support == std::vector<std::uint32_t>{ 7, 8 } );

  const binomial_combo b( 8, { 0, 2, 5 } );
  REQUIRE( shift_brep( b, 0 ) == b );
  REQUIRE( shift_brep( b, 8 ) == b );

  // the constant index is invariant under any shift
  for ( std::size_t r = 0; r < 8; ++r )
  {
    REQUIRE( shift_brep( binomial_combo( 8, { 0 } ), r ).support == std::vector<std::uint32_t>{ 0 } );
  }
}

TEST_CASE( "symbolic shift equals rotate-and-retransform" )
{
  SECTION( "exhaustive at small frames" )
  {
    for ( std::size_t frame : { 1u, 2u, 4u, 8u } )
    {
      for ( std::uint32_t mask = 0; mask < ( 1u << frame ); ++mask )
      {
        bit_sequence v( frame );
        v.set_word( 0, mask );
        const binomial_combo b( frame, v.ones() );
        for ( std::size_t r = 0; r < frame; ++r )
        {
          REQUIRE( shift_brep( b, r ) == oracles::shift_brep_oracle( b, r ) );
        }
      }
    }
  }
  SECTION( "random larger frames" )
  {
    std::mt19937_64 rng( 41 );
    for ( int trial = 0; trial < 60; ++trial )
    {
      const std::size_t frame = std::size_t{ 1 } << ( 4 + rng() % 7 ); // up to 1024
      bit_sequence v( frame );
      for ( std::size_t w = 0; w < v.word_count(); ++w )
      {
        v.set_word( w, rng() );
      }
      const binomial_combo b( frame, v.ones() );
      const std::size_t r = rng() % frame;
      REQUIRE( shift_brep( b, r ) == oracles::shift_brep_oracle( b, r ) );
    }
  }
}

TEST_CASE( "shifts compose additively" )
{
  std::mt19937_64 rng( 43 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const std::size_t frame = std::size_t{ 1 } << ( 1 + rng() % 6 );
    bit_sequence v( frame );
    v.set_word( 0, rng() );
    const binomial_combo b( frame, v.ones() );
    const std::size_t r = rng() % ( 2 * frame ), q = rng() % ( 2 * frame );
    REQUIRE( shift_brep( b, ( r + q ) % frame ) == shift_brep( shift_brep( b, r ), q ) );
  }
}

TEST_CASE( "symbolic reversal on known supports" )
{
  REQUIRE( reverse_brep( binomial_combo( 8, { 5 } ) ).support == std::vector<std::uint32_t>{ 0, 1, 4, 5 } );
  REQUIRE( reverse_brep( binomial_combo( 8, { 2, 5, 7 } ) ).support == std::vector<std::uint32_t>{ 0, 3, 6, 7 } );
  REQUIRE( reverse_brep( binomial_combo( 8, { 0 } ) ).support == std::vector<std::uint32_t>{ 0 } );

  // the worked pair of mutually reversed sequences
  const auto s = sequence_from_brep( binomial_combo( 8, { 2, 5, 7 } ) );
  REQUIRE( s.to_string() == "00110111" );
  REQUIRE( sequence_from_brep( reverse_brep( binomial_combo( 8, { 2, 5, 7 } ) ) ).to_string() == "11101100" );
}

TEST_CASE( "symbolic reversal equals reverse-and-retransform" )
{
  for ( std::size_t frame : { 1u, 2u, 4u, 8u } )
  {
    for ( std::uint32_t mask = 0; mask < ( 1u << frame ); ++mask )
    {
      bit_sequence v( frame );
      v.set_word( 0, mask );
      const binomial_combo b( frame, v.ones() );
      REQUIRE( reverse_brep( b ) == oracles::reverse_brep_oracle( b ) );
    }
  }

  std::mt19937_64 rng( 47 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    const std::size_t frame = std::size_t{ 1 } << ( 4 + rng() % 7 );
    bit_sequence v( frame );
    for ( std::size_t w = 0; w < v.word_count(); ++w )
    {
      v.set_word( w, rng() );
    }
    const binomial_combo b( frame, v.ones() );
    REQUIRE( reverse_brep( b ) == oracles::reverse_brep_oracle( b ) );
  }
}

TEST_CASE( "reversing one binomial sequence shifts it by its index" )
{
  for ( std::size_t frame = 1; frame <= 64; frame *= 2 )
  {
    for ( std::uint32_t k = 0; k < frame; ++k )
    {
      const binomial_combo b( frame, { k } );
      REQUIRE( sequence_from_brep( reverse_brep( b ) ) == binomial_sequence( k, frame ).bits.rotated_left( k ) );
    }
  }
}

TEST_CASE( "reversal is an involution" )
{
  std::mt19937_64 rng( 53 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const std::size_t frame = std::size_t{ 1 } << ( rng() % 8 );
    bit_sequence v( frame );
    v.set_word( 0, rng() );
    const binomial_combo b( frame, v.ones() );
    REQUIRE( reverse_brep( reverse_brep( b ) ) == b );
  }
}
