/*!
  \file verify.hpp
  \brief Randomized and exhaustive property suites over all modules.

  Each suite returns a report with one entry per property.  All randomness
  comes from a fixed-seed mt19937_64 drawn with plain masking, so a given
  seed reproduces the same report bytes on any platform.

  Exhaustive claims are literal up to frame 16 (every support, every shift
  amount).  At frame 32 the suites check every singleton support instead:
  the symbolic operators and their materialize-and-retransform oracles are
  both GF(2)-linear in the support, so agreement on the 32 generators
  decides agreement on all 2^32 supports.  Linearity itself is checked on
  random pairs.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "binomial.hpp"
#include "bit_sequence.hpp"
#include "boolean_function.hpp"
#include "gssg.hpp"
#include "lfsr.hpp"
#include "oracles.hpp"
#include "report.hpp"
#include "representation.hpp"
#include "shift_reverse.hpp"
#include "subset_transform.hpp"

namespace gf2seq::verify
{

struct verify_options
{
  std::uint64_t seed = 42;
  std::size_t max_frame = 1024; // cap for randomized shift/reverse checks
  unsigned degree_lo = 3;
  unsigned degree_hi = 8;
};

namespace detail
{

class test_rng
{
public:
  explicit test_rng( std::uint64_t seed ) : engine_( seed ) {}

  std::uint64_t next() { return engine_(); }

  std::uint64_t below( std::uint64_t n ) { return engine_() % n; }

  bit_sequence bits( std::size_t length )
  {
    bit_sequence out( length );
    for ( std::size_t w = 0; w < out.word_count(); ++w )
    {
      out.set_word( w, engine_() );
    }
    return out;
  }

  binomial_combo combo( std::size_t frame )
  {
    return binomial_combo( frame, bits( frame ).ones() );
  }

  bit_sequence nonzero_state( unsigned degree )
  {
    while ( true )
    {
      auto s = bits( degree );
      if ( !s.all_zero() )
      {
        return s;
      }
    }
  }

private:
  std::mt19937_64 engine_;
};

inline bit_sequence from_mask( std::uint32_t mask, std::size_t length )
{
  bit_sequence out( length );
  out.set_word( 0, mask );
  return out;
}

inline std::vector<std::uint32_t> symmetric_difference( const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b )
{
  std::vector<std::uint32_t> out;
  std::set_symmetric_difference( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
  return out;
}

} // namespace detail

inline verification_report run_core_suite( const verify_options& opts )
{
  verification_report report;
  detail::test_rng rng( opts.seed ^ 0x636f7265u ); // suite-specific stream

  // subset transform is an involution
  {
    bool ok = true;
    std::string detail;
    std::size_t cases = 0;
    for ( unsigned t = 0; t <= 4 && ok; ++t )
    {
      const std::size_t len = std::size_t{ 1 } << t;
      for ( std::uint32_t mask = 0; mask < ( 1u << len ) && ok; ++mask )
      {
        const auto v = detail::from_mask( mask, len );
        if ( moebius( moebius( v ) ) != v )
        {
          ok = false;
          detail = "counterexample=" + v.to_string();
        }
        ++cases;
      }
    }
    for ( int trial = 0; trial < 2000 && ok; ++trial )
    {
      const auto v = rng.bits( 32 );
      if ( moebius( moebius( v ) ) != v )
      {
        ok = false;
        detail = "counterexample=" + v.to_string();
      }
      ++cases;
    }
    report.check( ok, "core.moebius_involution", "lengths=1..16exhaustive,32sampled", detail );
  }

  // butterfly equals the explicit matrix product
  {
    bool ok = true;
    std::string detail;
    for ( int t = 0; t <= 6 && ok; ++t )
    {
      const auto matrix = binomial_matrix( t );
      for ( int trial = 0; trial < 1000 && ok; ++trial )
      {
        const auto v = rng.bits( matrix.dim );
        if ( moebius( v ) != oracles::vec_times_matrix( v, matrix ) )
        {
          ok = false;
          detail = "t=" + std::to_string( t ) + " counterexample=" + v.to_string();
        }
      }
    }
    report.check( ok, "core.moebius_matrix_agreement", "t=0..6,trials=1000", detail );
  }

  // the binomial matrix squares to the identity
  {
    bool ok = true;
    std::string detail;
    for ( int t = 0; t <= 6 && ok; ++t )
    {
      const auto matrix = binomial_matrix( t );
      for ( std::size_t i = 0; i < matrix.dim && ok; ++i )
      {
        const auto row = oracles::vec_times_matrix( matrix.rows[i], matrix );
        bit_sequence unit( matrix.dim );
        unit.set_bit( i, true );
        if ( row != unit )
        {
          ok = false;
          detail = "t=" + std::to_string( t ) + " row=" + std::to_string( i );
        }
      }
    }
    report.check( ok, "core.matrix_self_inverse", "t=0..6", detail );
  }

  // transform linearity
  {
    bool ok = true;
    std::string detail;
    for ( int trial = 0; trial < 500 && ok; ++trial )
    {
      const std::size_t len = std::size_t{ 1 } << ( 1 + rng.below( 7 ) );
      const auto a = rng.bits( len );
      const auto b = rng.bits( len );
      if ( moebius( a ^ b ) != ( moebius( a ) ^ moebius( b ) ) )
      {
        ok = false;
        detail = "a=" + a.to_string() + " b=" + b.to_string();
      }
    }
    report.check( ok, "core.moebius_linearity", "trials=500", detail );
  }

  // matrix rows are the binomial sequences
  {
    bool ok = true;
    std::string detail;
    for ( int t = 0; t <= 6 && ok; ++t )
    {
      const auto matrix = binomial_matrix( t );
      for ( std::uint32_t i = 0; i < matrix.dim && ok; ++i )
      {
        if ( matrix.rows[i] != binomial_sequence( i, matrix.dim ).bits )
        {
          ok = false;
          detail = "t=" + std::to_string( t ) + " row=" + std::to_string( i );
        }
      }
    }
    report.check( ok, "core.matrix_rows_are_binomials", "t=0..6", detail );
  }

  // rotations compose additively
  {
    bool ok = true;
    std::string detail;
    for ( int trial = 0; trial < 500 && ok; ++trial )
    {
      const std::size_t len = 1 + rng.below( 200 );
      const auto s = rng.bits( len );
      const std::size_t a = rng.below( 3 * len );
      const std::size_t b = rng.below( 3 * len );
      if ( s.rotated_left( a + b ) != s.rotated_left( a ).rotated_left( b ) )
      {
        ok = false;
        detail = "len=" + std::to_string( len ) + " a=" + std::to_string( a ) + " b=" + std::to_string( b );
      }
    }
    report.check( ok, "core.rotate_composition", "trials=500", detail );
  }

  // Lucas-rule triangle rows match the Pascal recurrence
  {
    bool ok = true;
    std::string detail;
    for ( std::uint32_t r = 0; r <= 64 && ok; ++r )
    {
      if ( sierpinski_row( r ) != oracles::sierpinski_row_pascal( r ) )
      {
        ok = false;
        detail = "row=" + std::to_string( r );
      }
    }
    report.check( ok, "core.sierpinski_lucas_vs_pascal", "rows=0..64", detail );
  }

  // every full-period binomial window ends in 1, and the metadata matches
  {
    bool ok = true;
    std::string detail;
    for ( std::uint32_t i = 0; i < 256 && ok; ++i )
    {
      const auto meta = binomial_meta( i );
      const auto window = binomial_sequence( i, meta.period );
      if ( window.truncated || !window.bits.bit( meta.period - 1 ) || meta.linear_complexity != i + 1 )
      {
        ok = false;
        detail = "index=" + std::to_string( i );
      }
    }
    report.check( ok, "core.binomial_window_last_bit", "indices=0..255", detail );
  }

  // text round trip
  {
    bool ok = true;
    std::string detail;
    for ( int trial = 0; trial < 300 && ok; ++trial )
    {
      const auto s = rng.bits( 1 + rng.below( 100 ) );
      if ( bit_sequence::parse( s.to_string() ) != s || bit_sequence::parse( s.to_string( ' ' ) ) != s )
      {
        ok = false;
        detail = "counterexample=" + s.to_string();
      }
    }
    report.check( ok, "core.bit_text_round_trip", "trials=300", detail );
  }

  return report;
}

inline verification_report run_repr_suite( const verify_options& opts )
{
  verification_report report;
  detail::test_rng rng( opts.seed ^ 0x72657072u );

  // ANF <-> truth table round trips, exhaustive up to 4 variables
  {
    bool ok = true;
    std::string detail;
    for ( unsigned n = 0; n <= 4 && ok; ++n )
    {
      const std::size_t len = std::size_t{ 1 } << n;
      for ( std::uint32_t mask = 0; mask < ( 1u << len ) && ok; ++mask )
      {
        const anf_form a( detail::from_mask( mask, len ), n );
        if ( tt_to_anf( anf_to_tt( a ) ) != a )
        {
          ok = false;
          detail = "n=" + std::to_string( n ) + " coeffs=" + a.coeffs.to_string();
        }
        const truth_table t( detail::from_mask( mask, len ), n );
        if ( anf_to_tt( tt_to_anf( t ) ) != t )
        {
          ok = false;
          detail = "n=" + std::to_string( n ) + " tt=" + t.values.to_string();
        }
      }
    }
    report.check( ok, "repr.anf_tt_round_trip", "vars=0..4exhaustive", detail );
  }

  // weight equals minterm count; ANF text round trip
  {
    bool ok = true;
    std::string detail;
    for ( int trial = 0; trial < 200 && ok; ++trial )
    {
      const unsigned n = 1 + static_cast<unsigned>( rng.below( 8 ) );
      const truth_table t( rng.bits( std::size_t{ 1 } << n ), n );
      if ( minterm_support( t ).size() != t.values.weight() )
      {
        ok = false;
        detail = "tt=" + t.values.to_string();
      }
      const auto a = tt_to_anf( t );
      if ( parse_anf( format_anf( a ), n ) != a )
      {
        ok = false;
        detail = "anf=" + format_anf( a );
      }
    }
    report.check( ok, "repr.minterms_and_anf_text", "trials=200", detail );
  }

  // last ANF coefficient is the parity of the truth-table weight;
  // balanced functions therefore never reach maximum degree
  {
    bool ok = true;
    std::string detail;
    for ( std::uint32_t mask = 0; mask < ( 1u << 16 ) && ok; ++mask )
    {
      const truth_table t( detail::from_mask( mask, 16 ), 4 );
      const auto a = tt_to_anf( t );
      const bool last = a.coeffs.bit( 15 );
      if ( last != ( t.values.weight() % 2 == 1 ) )
      {
        ok = false;
        detail = "tt=" + t.values.to_string();
      }
      if ( t.values.weight() == 8 && ( last || anf_degree( a ) == 4 ) )
      {
        ok = false;
        detail = "balanced tt=" + t.values.to_string();
      }
    }
    report.check( ok, "repr.max_degree_parity", "vars=4exhaustive", detail );
  }

  // sequence <-> representation round trips and the truth-table identity
  {
    bool ok = true;
    std::string detail;
    for ( unsigned t = 0; t <= 4 && ok; ++t )
    {
      const std::size_t frame = std::size_t{ 1 } << t;
      for ( std::uint32_t mask = 0; mask < ( 1u << frame ) && ok; ++mask )
      {
        const auto s = detail::from_mask( mask, frame );
        const auto b = brep_from_sequence( s );
        if ( sequence_from_brep( b ) != s )
        {
          ok = false;
          detail = "seq=" + s.to_string();
          break;
        }
        if ( brep_from_ranf( ranf_from_brep( b ), frame ) != b )
        {
          ok = false;
          detail = "brep=" + format_brep( b );
          break;
        }
        if ( sequence_from_ranf( ranf_from_brep( b ), frame ) != s )
        {
          ok = false;
          detail = "seq=" + s.to_string();
          break;
        }
      }
    }
    for ( std::uint32_t k = 0; k < 32 && ok; ++k )
    {
      const binomial_combo b( 32, { k } );
      if ( brep_from_sequence( sequence_from_brep( b ) ) != b || sequence_from_ranf( ranf_from_brep( b ), 32 ) != sequence_from_brep( b ) )
      {
        ok = false;
        detail = "singleton=" + std::to_string( k );
      }
    }
    for ( int trial = 0; trial < 2000 && ok; ++trial )
    {
      const auto b = rng.combo( 32 );
      if ( brep_from_sequence( sequence_from_brep( b ) ) != b )
      {
        ok = false;
        detail = "brep=" + format_brep( b );
      }
    }
    report.check( ok, "repr.bijection_round_trips", "frames=1..16exhaustive,32basis+random", detail );
  }

  // representation text round trips
  {
    bool ok = true;
    std::string detail;
    for ( int trial = 0; trial < 300 && ok; ++trial )
    {
      const auto b = rng.combo( 64 );
      if ( parse_index_list( format_brep( b ) ) != b.support )
      {
        ok = false;
        detail = "brep=" + format_brep( b );
      }
      const auto p = ranf_from_brep( b );
      if ( parse_ranf( format_ranf( p ) ) != p )
      {
        ok = false;
        detail = "ranf=" + format_ranf( p );
      }
    }
    report.check( ok, "repr.representation_text_round_trip", "trials=300", detail );
  }

  // the bijection is linear: supports combine by symmetric difference
  {
    bool ok = true;
    std::string detail;
    for ( int trial = 0; trial < 200 && ok; ++trial )
    {
      const auto s1 = rng.bits( 64 );
      const auto s2 = rng.bits( 64 );
      const auto lhs = ranf_from_brep( brep_from_sequence( s1 ^ s2 ) ).monomials;
      const auto rhs = detail::symmetric_difference( brep_from_sequence( s1 ).support, brep_from_sequence( s2 ).support );
      if ( lhs != rhs )
      {
        ok = false;
        detail = "s1=" + s1.to_string() + " s2=" + s2.to_string();
      }
    }
    report.check( ok, "repr.bijection_linearity", "frame=64,trials=200", detail );
  }

  // doubling the window keeps the support
  {
    bool ok = true;
    std::string detail;
    for ( unsigned t = 0; t <= 4 && ok; ++t )
    {
      const std::size_t frame = std::size_t{ 1 } << t;
      for ( std::uint32_t mask = 0; mask < ( 1u << frame ) && ok; ++mask )
      {
        const auto s = detail::from_mask( mask, frame );
        if ( brep_from_sequence( s ).support != brep_from_sequence( s.repeated_to( 2 * frame ) ).support )
        {
          ok = false;
          detail = "seq=" + s.to_string();
        }
      }
    }
    report.check( ok, "repr.frame_extension_stability", "frames=1..16exhaustive", detail );
  }

  // Berlekamp-Massey confirms lc = max support index + 1
  {
    bool ok = true;
    std::string detail;
    for ( int trial = 0; trial < 500 && ok; ++trial )
    {
      const std::size_t frame = std::size_t{ 1 } << ( 1 + rng.below( 8 ) );
      auto b = rng.combo( frame );
      if ( b.support.empty() )
      {
        b = binomial_combo( frame, { static_cast<std::uint32_t>( rng.below( frame ) ) } );
      }
      const auto two_periods = sequence_from_brep( b ).repeated_to( 2 * frame );
      const auto measured = oracles::berlekamp_massey( two_periods );
      if ( measured != profile( b ).lc )
      {
        ok = false;
        detail = "brep=" + format_brep( b ) + " frame=" + std::to_string( frame ) + " bm=" + std::to_string( measured );
      }
    }
    report.check( ok, "repr.lc_berlekamp_massey", "frames<=256,trials=500", detail );
  }

  // last sequence bit is the support-size parity; balanced sequences of
  // length 16 never contain index 15
  {
    bool ok = true;
    std::string detail;
    for ( std::uint32_t mask = 0; mask < ( 1u << 16 ) && ok; ++mask )
    {
      const auto s = detail::from_mask( mask, 16 );
      const auto b = brep_from_sequence( s );
      if ( s.bit( 15 ) != ( b.support.size() % 2 == 1 ) )
      {
        ok = false;
        detail = "seq=" + s.to_string();
      }
      if ( s.weight() == 8 && !b.support.empty() && b.support.back() == 15 )
      {
        ok = false;
        detail = "balanced seq=" + s.to_string();
      }
    }
    report.check( ok, "repr.last_bit_parity_and_balanced", "frame=16exhaustive", detail );
  }

  // single variables and full prefixes of variables name binomial indices
  {
    bool ok = true;
    std::string detail;
    for ( unsigned j = 1; j <= 8 && ok; ++j )
    {
      std::string monomial = "x" + std::to_string( j );
      const auto single = brep_from_ranf( parse_ranf( monomial ), 256 );
      if ( single.support != std::vector<std::uint32_t>{ 1u << ( j - 1 ) } )
      {
        ok = false;
        detail = "monomial=" + monomial;
        break;
      }
      std::string prefix;
      for ( unsigned k = j; k >= 1; --k )
      {
        prefix += ( prefix.empty() ? "" : "*" ) + ( "x" + std::to_string( k ) );
      }
      const auto chain = brep_from_ranf( parse_ranf( prefix ), 256 );
      if ( chain.support != std::vector<std::uint32_t>{ ( 1u << j ) - 1 } )
      {
        ok = false;
        detail = "monomial=" + prefix;
        break;
      }
      if ( sequence_from_ranf( parse_ranf( prefix ), 256 ) != binomial_sequence( ( 1u << j ) - 1, 256 ).bits )
      {
        ok = false;
        detail = "monomial=" + prefix;
      }
    }
    report.check( ok, "repr.variable_chain_rule", "j=1..8", detail );
  }

  return report;
}

inline verification_report run_shift_suite( const verify_options& opts )
{
  verification_report report;
  detail::test_rng rng( opts.seed ^ 0x73686674u );

  // symbolic shift equals rotate-and-retransform
  {
    bool ok = true;
    std::string detail;
    for ( unsigned t = 0; t <= 4 && ok; ++t )
    {
      const std::size_t frame = std::size_t{ 1 } << t;
      for ( std::uint32_t mask = 0; mask < ( 1u << frame ) && ok; ++mask )
      {
        const binomial_combo b( frame, detail::from_mask( mask, frame ).ones() );
        for ( std::size_t r = 0; r < frame && ok; ++r )
        {
          if ( shift_brep( b, r ) != oracles::shift_brep_oracle( b, r ) )
          {
            ok = false;
            detail = "brep=" + format_brep( b ) + " frame=" + std::to_string( frame ) + " r=" + std::to_string( r );
          }
        }
      }
    }
    for ( std::uint32_t k = 0; k < 32 && ok; ++k )
    {
      const binomial_combo b( 32, { k } );
      for ( std::size_t r = 0; r < 32 && ok; ++r )
      {
        if ( shift_brep( b, r ) != oracles::shift_brep_oracle( b, r ) )
        {
          ok = false;
          detail = "brep=" + format_brep( b ) + " r=" + std::to_string( r );
        }
      }
    }
    for ( int trial = 0; trial < 150 && ok; ++trial )
    {
      std::size_t frame = 32;
      while ( frame * 2 <= opts.max_frame && rng.below( 2 ) )
      {
        frame *= 2;
      }
      const auto b = rng.combo( frame );
      const std::size_t r = rng.below( frame );
      if ( shift_brep( b, r ) != oracles::shift_brep_oracle( b, r ) )
      {
        ok = false;
        detail = "brep=" + format_brep( b ) + " frame=" + std::to_string( frame ) + " r=" + std::to_string( r );
      }
    }
    report.check( ok, "shift.soundness", "frames=1..16exhaustive,32basis,random<=" + std::to_string( opts.max_frame ), detail );
  }

  // shifts compose additively modulo the frame
  {
    bool ok = true;
    std::string detail;
    for ( int trial = 0; trial < 300 && ok; ++trial )
    {
      const std::size_t frame = std::size_t{ 1 } << ( 1 + rng.below( 7 ) );
      const auto b = rng.combo( frame );
      const std::size_t r = rng.below( 2 * frame );
      const std::size_t q = rng.below( 2 * frame );
      if ( shift_brep( b, ( r + q ) % frame ) != shift_brep( shift_brep( b, r ), q ) )
      {
        ok = false;
        detail = "brep=" + format_brep( b ) + " r=" + std::to_string( r ) + " q=" + std::to_string( q );
      }
    }
    report.check( ok, "shift.composition", "trials=300", detail );
  }

  // symbolic reversal equals reverse-and-retransform
  {
    bool ok = true;
    std::string detail;
    for ( unsigned t = 0; t <= 4 && ok; ++t )
    {
      const std::size_t frame = std::size_t{ 1 } << t;
      for ( std::uint32_t mask = 0; mask < ( 1u << frame ) && ok; ++mask )
      {
        const binomial_combo b( frame, detail::from_mask( mask, frame ).ones() );
        if ( reverse_brep( b ) != oracles::reverse_brep_oracle( b ) )
        {
          ok = false;
          detail = "brep=" + format_brep( b ) + " frame=" + std::to_string( frame );
        }
      }
    }
    for ( std::uint32_t k = 0; k < 32 && ok; ++k )
    {
      const binomial_combo b( 32, { k } );
      if ( reverse_brep( b ) != oracles::reverse_brep_oracle( b ) )
      {
        ok = false;
        detail = "singleton=" + std::to_string( k );
      }
    }
    for ( int trial = 0; trial < 150 && ok; ++trial )
    {
      std::size_t frame = 32;
      while ( frame * 2 <= opts.max_frame && rng.below( 2 ) )
      {
        frame *= 2;
      }
      const auto b = rng.combo( frame );
      if ( reverse_brep( b ) != oracles::reverse_brep_oracle( b ) )
      {
        ok = false;
        detail = "brep=" + format_brep( b ) + " frame=" + std::to_string( frame );
      }
    }
    report.check( ok, "shift.reverse_soundness", "frames=1..16exhaustive,32basis,random<=" + std::to_string( opts.max_frame ), detail );
  }

  // reversing one binomial sequence shifts it by its own index
  {
    bool ok = true;
    std::string detail;
    for ( std::size_t frame = 1; frame <= 64 && ok; frame *= 2 )
    {
      for ( std::uint32_t k = 0; k < frame && ok; ++k )
      {
        const binomial_combo b( frame, { k } );
        if ( sequence_from_brep( reverse_brep( b ) ) != binomial_sequence( k, frame ).bits.rotated_left( k ) )
        {
          ok = false;
          detail = "k=" + std::to_string( k ) + " frame=" + std::to_string( frame );
        }
      }
    }
    report.check( ok, "shift.reverse_binomial_is_shift", "frames<=64,allk", detail );
  }

  // reversal is an involution
  {
    bool ok = true;
    std::string detail;
    for ( std::uint32_t mask = 0; mask < 256 && ok; ++mask )
    {
      const binomial_combo b( 8, detail::from_mask( mask, 8 ).ones() );
      if ( reverse_brep( reverse_brep( b ) ) != b )
      {
        ok = false;
        detail = "brep=" + format_brep( b );
      }
    }
    for ( int trial = 0; trial < 200 && ok; ++trial )
    {
      const auto b = rng.combo( 128 );
      if ( reverse_brep( reverse_brep( b ) ) != b )
      {
        ok = false;
        detail = "brep=" + format_brep( b );
      }
    }
    report.check( ok, "shift.reverse_involution", "frame=8exhaustive,128random", detail );
  }

  return report;
}

inline verification_report run_gss_suite( const verify_options& opts )
{
  verification_report report;
  detail::test_rng rng( opts.seed ^ 0x67737367u );

  for ( unsigned degree = opts.degree_lo; degree <= opts.degree_hi; ++degree )
  {
    const auto polys = primitive_polynomials( degree );
    bool ok = true;
    std::size_t families = 0;
    verification_report failures;
    std::size_t full_period_members = 0, member_count = 0;
    std::size_t lc_min = std::size_t{ 1 } << degree, lc_max = 0;
    for ( const auto& poly : polys )
    {
      std::vector<bit_sequence> states = { all_ones_state( degree ), rng.nonzero_state( degree ), rng.nonzero_state( degree ) };
      for ( const auto& state : states )
      {
        const auto fam = generate_gss_family( poly, state );
        const auto fam_report = verify_gss_properties( fam );
        ++families;
        if ( !fam_report.all_passed() )
        {
          ok = false;
          for ( const auto& e : fam_report.entries )
          {
            if ( e.status == verification_entry::kind::fail )
            {
              failures.entries.push_back( e );
            }
          }
        }
        for ( const auto& m : fam.members )
        {
          ++member_count;
          const auto p = m.sequence.min_period();
          if ( p == ( std::size_t{ 1 } << ( degree - 1 ) ) )
          {
            ++full_period_members;
          }
          if ( p > 2 )
          {
            lc_min = std::min( lc_min, m.profile.lc );
            lc_max = std::max( lc_max, m.profile.lc );
          }
        }
      }
    }
    report.check( ok, "gss.properties", "degree=" + std::to_string( degree ) + ",polys=" + std::to_string( polys.size() ) + ",states=3",
                  ok ? "" : "see appended entries" );
    report.append( failures );
    std::string observed = "members=" + std::to_string( member_count ) + " full_period=" + std::to_string( full_period_members );
    if ( lc_max > 0 )
    {
      observed += " nontrivial_lc=" + std::to_string( lc_min ) + ".." + std::to_string( lc_max ) + " half_period_ref=" + std::to_string( std::size_t{ 1 } << ( degree - 2 ) );
    }
    report.add( verification_entry::kind::note, "gss.empirical_period_lc", "degree=" + std::to_string( degree ), observed );
  }

  // before decimation, the selector combinations are exactly the cyclic
  // shifts of the PN sequence
  {
    bool ok = true;
    std::string detail;
    for ( unsigned degree = 3; degree <= 6 && ok; ++degree )
    {
      for ( const auto& poly : primitive_polynomials( degree ) )
      {
        const std::size_t period = ( std::size_t{ 1 } << degree ) - 1;
        const auto u = pn_sequence( poly, all_ones_state( degree ), period );
        std::set<bit_sequence> shifts;
        for ( std::size_t r = 0; r < period; ++r )
        {
          shifts.insert( u.rotated_left( r ) );
        }
        std::set<bit_sequence> streams;
        for ( std::uint32_t g = 1; g <= period; ++g )
        {
          bit_sequence v( period );
          for ( std::size_t t = 0; t < period; ++t )
          {
            bool value = false;
            for ( unsigned d = 0; d < degree; ++d )
            {
              if ( g & ( std::uint32_t{ 1 } << d ) )
              {
                value ^= u.bit( ( t + period - d ) % period );
              }
            }
            v.set_bit( t, value );
          }
          streams.insert( v );
        }
        if ( streams != shifts )
        {
          ok = false;
          detail = "poly=" + poly.to_string();
          std::erase( detail, ' ' );
        }
      }
    }
    report.check( ok, "gss.selector_streams_are_shifts", "degrees=3..6", detail );
  }

  return report;
}

inline verification_report run_all( const verify_options& opts )
{
  verification_report report;
  report.append( run_core_suite( opts ) );
  report.append( run_repr_suite( opts ) );
  report.append( run_shift_suite( opts ) );
  report.append( run_gss_suite( opts ) );
  return report;
}

} // namespace gf2seq::verify
