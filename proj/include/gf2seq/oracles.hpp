/*!
  \file oracles.hpp
  \brief Independent reference computations used only for verification.

  Nothing here is called by the conversion paths it checks: the explicit
  matrix product checks the butterfly transform, the Pascal recurrence
  checks Lucas-rule rows, Berlekamp-Massey checks the index-derived linear
  complexity, and the rotate/reverse-and-retransform routes check the
  symbolic shift and reversal operators.
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bit_sequence.hpp"
#include "representation.hpp"
#include "subset_transform.hpp"

namespace gf2seq::oracles
{

/*! \brief Row-space product v * M over GF(2): XOR of the rows selected by v. */
inline bit_sequence vec_times_matrix( const bit_sequence& v, const bit_matrix& m )
{
  if ( v.size() != m.dim )
  {
    throw std::invalid_argument( "vector length does not match matrix size" );
  }
  bit_sequence out( m.dim );
  for ( std::size_t i = 0; i < m.dim; ++i )
  {
    if ( v.bit( i ) )
    {
      out ^= m.rows[i];
    }
  }
  return out;
}

/*! \brief Triangle row built by the XOR recurrence from row 0, never by
           Lucas' rule. */
inline bit_sequence sierpinski_row_pascal( std::uint32_t row )
{
  std::vector<std::uint8_t> current{ 1 };
  for ( std::uint32_t r = 0; r < row; ++r )
  {
    std::vector<std::uint8_t> next( r + 2 );
    next.front() = 1;
    next.back() = 1;
    for ( std::uint32_t k = 0; k + 1 <= r; ++k )
    {
      next[k + 1] = current[k] ^ current[k + 1];
    }
    current = std::move( next );
  }
  bit_sequence out( current.size() );
  for ( std::size_t k = 0; k < current.size(); ++k )
  {
    out.set_bit( k, current[k] != 0 );
  }
  return out;
}

/*! \brief Length of the shortest LFSR generating the given bits. */
inline std::size_t berlekamp_massey( const bit_sequence& s )
{
  const std::size_t n = s.size();
  std::vector<std::uint8_t> c( n + 1, 0 ), b( n + 1, 0 );
  c[0] = b[0] = 1;
  std::size_t lfsr_len = 0, gap = 1;
  for ( std::size_t i = 0; i < n; ++i )
  {
    std::uint8_t discrepancy = s.bit( i ) ? 1 : 0;
    for ( std::size_t j = 1; j <= lfsr_len; ++j )
    {
      discrepancy ^= c[j] & ( s.bit( i - j ) ? 1 : 0 );
    }
    if ( discrepancy == 0 )
    {
      ++gap;
      continue;
    }
    const std::vector<std::uint8_t> saved = c;
    for ( std::size_t j = 0; j + gap <= n; ++j )
    {
      c[j + gap] ^= b[j];
    }
    if ( 2 * lfsr_len <= i )
    {
      lfsr_len = i + 1 - lfsr_len;
      b = saved;
      gap = 1;
    }
    else
    {
      ++gap;
    }
  }
  return lfsr_len;
}

/*! \brief Shift computed the slow way: materialize, rotate, retransform. */
inline binomial_combo shift_brep_oracle( const binomial_combo& b, std::size_t r )
{
  return brep_from_sequence( sequence_from_brep( b ).rotated_left( r ) );
}

/*! \brief Reversal computed the slow way: materialize, reverse, retransform. */
inline binomial_combo reverse_brep_oracle( const binomial_combo& b )
{
  return brep_from_sequence( sequence_from_brep( b ).reversed() );
}

} // namespace gf2seq::oracles
