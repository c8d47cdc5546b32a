/*!
  \file binomial.hpp
  \brief Binomial sequences modulo 2, their period/complexity data, and
         Sierpinski triangle rows.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "bit_sequence.hpp"

namespace gf2seq
{

struct binomial_window
{
  bit_sequence bits;
  //! set when the requested window is shorter than one full period
  bool truncated;
};

struct binomial_info
{
  std::size_t period;
  std::size_t linear_complexity;
};

/*! \brief Period and linear complexity of the index-th binomial sequence.

  The linear complexity is index + 1 and the period is the smallest power of
  two strictly greater than index.
*/
inline binomial_info binomial_meta( std::uint32_t index )
{
  const std::size_t period = std::bit_ceil( static_cast<std::size_t>( index ) + 1 );
  return { period, static_cast<std::size_t>( index ) + 1 };
}

/*! \brief First `window` terms of the sequence of binomial coefficients
           C(0, index), C(1, index), ... reduced modulo 2.

  Term j is 1 exactly when (index AND j) == index (Lucas' rule).  `window`
  must be a positive power of two; when it is shorter than the sequence's
  period the result is flagged as truncated.
*/
inline binomial_window binomial_sequence( std::uint32_t index, std::size_t window )
{
  if ( window == 0 || !std::has_single_bit( window ) )
  {
    throw std::domain_error( "binomial sequence window must be a power of two, got " + std::to_string( window ) );
  }
  bit_sequence bits( window );
  for ( std::size_t j = 0; j < window; ++j )
  {
    bits.set_bit( j, ( static_cast<std::size_t>( index ) & j ) == index );
  }
  return { std::move( bits ), window < binomial_meta( index ).period };
}

/*! \brief Row r of Pascal's triangle modulo 2, as r + 1 bits.

  Entry k is C(r, k) mod 2, i.e. 1 exactly when (k AND r) == k.  The first
  and last entries are always 1, and consecutive rows obey the XOR
  recurrence of the triangle.
*/
inline bit_sequence sierpinski_row( std::uint32_t row )
{
  static constexpr std::uint32_t row_cap = 1u << 20;
  if ( row > row_cap )
  {
    throw std::invalid_argument( "sierpinski row index above cap " + std::to_string( row_cap ) );
  }
  bit_sequence bits( static_cast<std::size_t>( row ) + 1 );
  for ( std::uint32_t k = 0; k <= row; ++k )
  {
    bits.set_bit( k, ( k & row ) == k );
  }
  return bits;
}

} // namespace gf2seq
