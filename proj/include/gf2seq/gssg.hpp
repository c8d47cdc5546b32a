/*!
  \file gssg.hpp
  \brief The generalized self-shrinking generator and its sequence families.

  A selector vector G = [g_0, ..., g_{L-1}] combines delayed copies of a PN
  sequence u into v_t = sum g_j u_{t-j} (indices wrap modulo the PN period);
  v_t is kept exactly when u_t = 1.  Running G over all nonzero vectors
  yields the family of 2^L - 1 generalized sequences, each of length
  2^{L-1} per PN period.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bit_sequence.hpp"
#include "lfsr.hpp"
#include "report.hpp"
#include "representation.hpp"
#include "shift_reverse.hpp"

namespace gf2seq
{

/*! \brief Selector text as printed in tables: leftmost character is g_0. */
inline std::string selector_to_string( std::uint32_t selector, unsigned degree )
{
  std::string out( degree, '0' );
  for ( unsigned j = 0; j < degree; ++j )
  {
    if ( selector & ( std::uint32_t{ 1 } << j ) )
    {
      out[j] = '1';
    }
  }
  return out;
}

/*! \brief Parses a selector bit string; leftmost character is g_0. */
inline std::uint32_t parse_selector( std::string_view text, unsigned degree )
{
  if ( text.size() != degree )
  {
    throw parse_error( "selector must have exactly " + std::to_string( degree ) + " bits, got " + std::to_string( text.size() ) );
  }
  std::uint32_t out = 0;
  for ( unsigned j = 0; j < degree; ++j )
  {
    if ( text[j] == '1' )
    {
      out |= std::uint32_t{ 1 } << j;
    }
    else if ( text[j] != '0' )
    {
      throw parse_error( "selector bits must be 0 or 1", j );
    }
  }
  return out;
}

/*! \brief Decimates the selector combination of a PN sequence.

  `pn` must hold exactly one PN period of 2^degree - 1 bits.  The selector
  may be zero, which produces the zero sequence; that sequence is excluded
  from families.
*/
inline bit_sequence gss_sequence( const bit_sequence& pn, std::uint32_t selector, unsigned degree )
{
  const std::size_t period = ( std::size_t{ 1 } << degree ) - 1;
  if ( pn.size() != period )
  {
    throw std::invalid_argument( "PN input must hold one period of " + std::to_string( period ) + " bits, got " + std::to_string( pn.size() ) );
  }
  if ( selector >> degree )
  {
    throw std::invalid_argument( "selector has bits beyond the polynomial degree" );
  }
  bit_sequence out( pn.weight() );
  std::size_t j = 0;
  for ( std::size_t t = 0; t < period; ++t )
  {
    if ( !pn.bit( t ) )
    {
      continue;
    }
    bool v = false;
    for ( unsigned d = 0; d < degree; ++d )
    {
      if ( selector & ( std::uint32_t{ 1 } << d ) )
      {
        v ^= pn.bit( ( t + period - d ) % period );
      }
    }
    out.set_bit( j++, v );
  }
  return out;
}

//! only nonzero selectors name generalized sequences
inline bool is_generalized_member( std::uint32_t selector )
{
  return selector != 0;
}

struct gss_member
{
  std::uint32_t selector;
  bit_sequence sequence;
  binomial_combo brep;
  ranf_polynomial ranf;
  sequence_profile profile;
};

struct gss_family
{
  char_polynomial poly;
  bit_sequence initial_state;
  bit_sequence pn; // one period of the underlying PN sequence
  std::vector<gss_member> members; // selectors 1 .. 2^L - 1, ascending

  const gss_member& member( std::uint32_t selector ) const
  {
    if ( selector == 0 || selector >= ( std::uint32_t{ 1 } << poly.degree ) )
    {
      throw std::out_of_range( "selector out of range" );
    }
    return members[selector - 1];
  }
};

/*! \brief Enumerates all 2^L - 1 generalized sequences of a primitive
           polynomial, with per-member representation data.

  The default initial state, used throughout the tables, is all ones.
*/
inline gss_family generate_gss_family( const char_polynomial& poly, const bit_sequence& state )
{
  if ( !is_primitive( poly ) )
  {
    throw std::invalid_argument( "family generation needs a primitive polynomial, got " + poly.to_string() );
  }
  gss_family fam;
  fam.poly = poly;
  fam.initial_state = state;
  fam.pn = pn_sequence( poly, state, ( std::size_t{ 1 } << poly.degree ) - 1 );
  const std::uint32_t count = ( std::uint32_t{ 1 } << poly.degree ) - 1;
  fam.members.reserve( count );
  for ( std::uint32_t g = 1; g <= count; ++g )
  {
    gss_member m;
    m.selector = g;
    m.sequence = gss_sequence( fam.pn, g, poly.degree );
    m.brep = brep_from_sequence( m.sequence );
    m.ranf = ranf_from_brep( m.brep );
    m.profile = profile( m.brep );
    fam.members.push_back( std::move( m ) );
  }
  return fam;
}

inline bit_sequence all_ones_state( unsigned degree )
{
  bit_sequence s( degree );
  for ( unsigned j = 0; j < degree; ++j )
  {
    s.set_bit( j, true );
  }
  return s;
}

/*! \brief Runs every family-level and per-member property check.

  Failures become report entries rather than exceptions.  The final entry
  records period and linear-complexity observations without asserting them:
  whether the period always reaches 2^{L-1} and the complexity stays at or
  above 2^{L-2} is only logged.
*/
inline verification_report verify_gss_properties( const gss_family& fam )
{
  verification_report report;
  const unsigned degree = fam.poly.degree;
  const std::size_t half = std::size_t{ 1 } << ( degree - 1 );
  std::string scope = "poly=" + fam.poly.to_string() + ",state=" + fam.initial_state.to_string();
  std::erase( scope, ' ' );

  const auto tag = [&]( const gss_member& m ) { return "G=" + selector_to_string( m.selector, degree ); };

  report.check( fam.members.size() == ( std::size_t{ 1 } << degree ) - 1, "gss.family_size", scope,
                "expected " + std::to_string( ( std::size_t{ 1 } << degree ) - 1 ) + " members, got " + std::to_string( fam.members.size() ) );

  // (1) the family together with the zero sequence is closed under XOR
  {
    std::set<bit_sequence> pool;
    pool.insert( bit_sequence( half ) );
    for ( const auto& m : fam.members )
    {
      pool.insert( m.sequence );
    }
    bool ok = true;
    std::string detail;
    for ( std::size_t a = 0; a < fam.members.size() && ok; ++a )
    {
      for ( std::size_t b = a; b < fam.members.size() && ok; ++b )
      {
        if ( !pool.contains( fam.members[a].sequence ^ fam.members[b].sequence ) )
        {
          ok = false;
          detail = tag( fam.members[a] ) + " xor " + tag( fam.members[b] ) + " left the family";
        }
      }
    }
    report.check( ok, "gss.group_closure", scope, detail );
  }

  // (2) every member except the all-ones sequence is balanced
  {
    bool ok = true;
    std::string detail;
    for ( const auto& m : fam.members )
    {
      if ( m.sequence.weight() == m.sequence.size() )
      {
        continue;
      }
      if ( !seq_stats( m.sequence ).balanced )
      {
        ok = false;
        detail = tag( m ) + " weight=" + std::to_string( m.sequence.weight() );
        break;
      }
    }
    report.check( ok, "gss.balancedness", scope, detail );
  }

  // (3) the period of every member divides 2^{L-1}
  {
    bool ok = true;
    std::string detail;
    for ( const auto& m : fam.members )
    {
      const auto p = m.sequence.min_period();
      if ( half % p != 0 || m.profile.period > half )
      {
        ok = false;
        detail = tag( m ) + " period=" + std::to_string( p );
        break;
      }
    }
    report.check( ok, "gss.period_divides_half", scope, detail );
  }

  // (4) members of period 1 or 2 carry one of the three trivial reverse-ANFs
  {
    bool ok = true;
    std::string detail;
    const std::set<std::vector<std::uint32_t>> trivial = { { 0 }, { 1 }, { 0, 1 } };
    for ( const auto& m : fam.members )
    {
      if ( m.sequence.min_period() <= 2 && !trivial.contains( m.ranf.monomials ) )
      {
        ok = false;
        detail = tag( m ) + " ranf=" + format_ranf( m.ranf );
        break;
      }
    }
    report.check( ok, "gss.trivial_ranf", scope, detail );
  }

  // (5) reverse-ANF monomial count equals the representation support size
  {
    bool ok = true;
    std::string detail;
    for ( const auto& m : fam.members )
    {
      if ( m.ranf.monomials.size() != m.brep.support.size() )
      {
        ok = false;
        detail = tag( m );
        break;
      }
    }
    report.check( ok, "gss.monomial_count_equals_support", scope, detail );
  }

  // (6) no variable subscript exceeds L-1, i.e. every index is below 2^{L-1}
  {
    bool ok = true;
    std::string detail;
    for ( const auto& m : fam.members )
    {
      if ( !m.brep.support.empty() && m.brep.support.back() >= half )
      {
        ok = false;
        detail = tag( m ) + " max_index=" + std::to_string( m.brep.support.back() );
        break;
      }
    }
    report.check( ok, "gss.max_subscript_bound", scope, detail );
  }

  // (7) the maximum term x_{L-1}...x_1 never appears
  {
    bool ok = true;
    std::string detail;
    const std::uint32_t max_term = static_cast<std::uint32_t>( half ) - 1;
    for ( const auto& m : fam.members )
    {
      if ( std::find( m.brep.support.begin(), m.brep.support.end(), max_term ) != m.brep.support.end() )
      {
        ok = false;
        detail = tag( m );
        break;
      }
    }
    report.check( ok, "gss.no_maximum_term", scope, detail );
  }

  // (8) toggling the constant term stays inside the XOR group of the
  //     family; for the all-ones member the partner is the null sequence
  {
    std::set<std::vector<std::uint32_t>> supports;
    supports.insert( std::vector<std::uint32_t>{} );
    for ( const auto& m : fam.members )
    {
      supports.insert( m.brep.support );
    }
    bool ok = true;
    std::string detail;
    for ( const auto& m : fam.members )
    {
      auto toggled = m.brep.support;
      if ( !toggled.empty() && toggled.front() == 0 )
      {
        toggled.erase( toggled.begin() );
      }
      else
      {
        toggled.insert( toggled.begin(), 0 );
      }
      if ( !supports.contains( toggled ) )
      {
        ok = false;
        detail = tag( m ) + " has no partner with the constant term toggled";
        break;
      }
    }
    report.check( ok, "gss.constant_toggle_member", scope, detail );
  }

  // (9) monomial count and linear complexity bounded by 2^{L-1} - (L-2)
  {
    const std::size_t bound = half - ( degree - 2 );
    bool ok = true;
    std::string detail;
    for ( const auto& m : fam.members )
    {
      if ( m.brep.support.size() > bound || m.profile.lc > bound )
      {
        ok = false;
        detail = tag( m ) + " monomials=" + std::to_string( m.brep.support.size() ) + " lc=" + std::to_string( m.profile.lc ) + " bound=" + std::to_string( bound );
        break;
      }
    }
    report.check( ok, "gss.monomial_lc_bound", scope, detail );
  }

  // (10) a full-period member has the constant term in exactly half of the
  //      representations of its cyclic shifts
  {
    bool ok = true;
    std::string detail;
    for ( const auto& m : fam.members )
    {
      if ( m.sequence.min_period() != half )
      {
        continue;
      }
      std::size_t with_constant = 0;
      for ( std::size_t r = 0; r < half; ++r )
      {
        const auto shifted = brep_from_sequence( m.sequence.rotated_left( r ) );
        if ( !shifted.support.empty() && shifted.support.front() == 0 )
        {
          ++with_constant;
        }
      }
      if ( with_constant != half / 2 )
      {
        ok = false;
        detail = tag( m ) + " shifts_with_constant=" + std::to_string( with_constant );
        break;
      }
    }
    report.check( ok, "gss.shifts_with_constant_term", scope, detail );
  }

  // (11) recorded only: observed periods and linear complexities
  {
    std::size_t full_period = 0, nontrivial = 0;
    std::size_t lc_min = half, lc_max = 0;
    for ( const auto& m : fam.members )
    {
      const auto p = m.sequence.min_period();
      if ( p == half )
      {
        ++full_period;
      }
      if ( p > 2 )
      {
        ++nontrivial;
        lc_min = std::min( lc_min, m.profile.lc );
        lc_max = std::max( lc_max, m.profile.lc );
      }
    }
    std::string detail = "full_period=" + std::to_string( full_period ) + "/" + std::to_string( fam.members.size() );
    if ( nontrivial > 0 )
    {
      detail += " nontrivial_lc=" + std::to_string( lc_min ) + ".." + std::to_string( lc_max ) + " half_period_ref=" + std::to_string( half / 2 );
    }
    report.add( verification_entry::kind::note, "gss.empirical_period_lc", scope, detail );
  }

  return report;
}

} // namespace gf2seq
