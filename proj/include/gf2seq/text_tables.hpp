/*!
  \file text_tables.hpp
  \brief Reference tables and their text/CSV rendering.
*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "binomial.hpp"
#include "gssg.hpp"
#include "representation.hpp"

namespace gf2seq
{

struct text_table
{
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/*! \brief Index, bit window, period and linear complexity of the first
           `count` binomial sequences. */
inline text_table binomial_table( std::uint32_t count, std::size_t window )
{
  text_table t;
  t.header = { "index", "window", "period", "lc" };
  for ( std::uint32_t i = 0; i < count; ++i )
  {
    const auto meta = binomial_meta( i );
    t.rows.push_back( { std::to_string( i ),
                        binomial_sequence( i, window ).bits.to_string(),
                        std::to_string( meta.period ),
                        std::to_string( meta.linear_complexity ) } );
  }
  return t;
}

/*! \brief Reverse-ANF of the first `count` binomial sequences. */
inline text_table ranf_table( std::uint32_t count )
{
  text_table t;
  t.header = { "index", "ranf" };
  for ( std::uint32_t i = 0; i < count; ++i )
  {
    t.rows.push_back( { std::to_string( i ), format_ranf( ranf_polynomial( { i } ) ) } );
  }
  return t;
}

//! selector whose printed string is the row number in binary, g_0 leftmost
inline std::uint32_t selector_from_row_number( std::uint32_t row, unsigned degree )
{
  std::uint32_t g = 0;
  for ( unsigned j = 0; j < degree; ++j )
  {
    if ( row & ( std::uint32_t{ 1 } << ( degree - 1 - j ) ) )
    {
      g |= std::uint32_t{ 1 } << j;
    }
  }
  return g;
}

/*! \brief Every member of a generalized family: selector, sequence,
           B-representation and reverse-ANF, ordered by the printed
           selector string. */
inline text_table gss_table( const gss_family& fam )
{
  text_table t;
  t.header = { "g", "sequence", "brep", "ranf" };
  const std::uint32_t count = ( std::uint32_t{ 1 } << fam.poly.degree ) - 1;
  for ( std::uint32_t row = 1; row <= count; ++row )
  {
    const auto& m = fam.member( selector_from_row_number( row, fam.poly.degree ) );
    t.rows.push_back( { selector_to_string( m.selector, fam.poly.degree ),
                        m.sequence.to_string(),
                        format_brep( m.brep ),
                        format_ranf( m.ranf ) } );
  }
  return t;
}

/*! \brief All cyclic shifts of one family member with their representations. */
inline text_table gss_shift_table( const gss_family& fam, std::uint32_t selector )
{
  text_table t;
  t.header = { "shift", "sequence", "brep", "ranf" };
  const auto& base = fam.member( selector ).sequence;
  for ( std::size_t r = 0; r < base.size(); ++r )
  {
    const auto shifted = base.rotated_left( r );
    const auto b = brep_from_sequence( shifted );
    t.rows.push_back( { std::to_string( r ), shifted.to_string(), format_brep( b ), format_ranf( ranf_from_brep( b ) ) } );
  }
  return t;
}

/*! \brief Column-aligned text with a header row. */
inline std::string render_aligned( const text_table& t )
{
  std::vector<std::size_t> widths( t.header.size(), 0 );
  for ( std::size_t c = 0; c < t.header.size(); ++c )
  {
    widths[c] = t.header[c].size();
  }
  for ( const auto& row : t.rows )
  {
    for ( std::size_t c = 0; c < row.size(); ++c )
    {
      widths[c] = std::max( widths[c], row[c].size() );
    }
  }
  std::string out;
  const auto emit = [&]( const std::vector<std::string>& row ) {
    for ( std::size_t c = 0; c < row.size(); ++c )
    {
      out += row[c];
      if ( c + 1 < row.size() )
      {
        out.append( widths[c] - row[c].size() + 2, ' ' );
      }
    }
    out += '\n';
  };
  emit( t.header );
  for ( const auto& row : t.rows )
  {
    emit( row );
  }
  return out;
}

/*! \brief CSV with a header row; fields with commas or quotes are quoted. */
inline std::string render_csv( const text_table& t )
{
  const auto field = []( const std::string& s ) {
    if ( s.find_first_of( ",\"\n" ) == std::string::npos )
    {
      return s;
    }
    std::string quoted = "\"";
    for ( char c : s )
    {
      if ( c == '"' )
      {
        quoted += '"';
      }
      quoted += c;
    }
    quoted += '"';
    return quoted;
  };
  std::string out;
  const auto emit = [&]( const std::vector<std::string>& row ) {
    for ( std::size_t c = 0; c < row.size(); ++c )
    {
      if ( c > 0 )
      {
        out += ',';
      }
      out += field( row[c] );
    }
    out += '\n';
  };
  emit( t.header );
  for ( const auto& row : t.rows )
  {
    emit( row );
  }
  return out;
}

/*! \brief Rows 0 .. count-1 of the triangle as a centered block of
           '1' and middle-dot glyphs. */
inline std::string sierpinski_triangle( std::uint32_t count )
{
  std::string out;
  for ( std::uint32_t r = 0; r < count; ++r )
  {
    const auto row = sierpinski_row( r );
    out.append( count - 1 - r, ' ' );
    for ( std::uint32_t k = 0; k <= r; ++k )
    {
      if ( k > 0 )
      {
        out += ' ';
      }
      out += row.bit( k ) ? "1" : "·";
    }
    out += '\n';
  }
  return out;
}

} // namespace gf2seq
