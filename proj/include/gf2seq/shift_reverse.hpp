/*!
  \file shift_reverse.hpp
  \brief Cyclic shift and reversal acting directly on B-representations.

  Both operators are computed symbolically on the index set, without
  materializing the sequence.  Rotating the i-th binomial sequence r steps
  left rewrites it as a combination of lower binomial sequences whose
  coefficients are read off row r of the Sierpinski triangle; reversal of
  the i-th binomial sequence selects every subset of i.  General supports
  follow by linearity.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "bit_sequence.hpp"
#include "representation.hpp"

namespace gf2seq
{

/*! \brief B-representation of the sequence rotated r positions to the left.

  For each index k of the input, indices k - i with 0 <= i <= min(r, k)
  whose Sierpinski entry C(r, r - i) mod 2 is 1 are toggled into the
  result.  Index 0 always maps to itself.  r is reduced modulo the frame;
  a right shift by r is a left shift by frame - r.  Runs in
  O(|support| * r) toggles.
*/
inline binomial_combo shift_brep( const binomial_combo& b, std::size_t r )
{
  r %= b.frame;
  std::vector<std::uint8_t> toggles( b.frame, 0 );
  for ( auto k : b.support )
  {
    const std::size_t limit = std::min<std::size_t>( r, k );
    for ( std::size_t i = 0; i <= limit; ++i )
    {
      const std::size_t row_pos = r - i; // C(r, r - i) mod 2 by Lucas' rule
      if ( ( row_pos & r ) == row_pos )
      {
        toggles[k - i] ^= 1;
      }
    }
  }
  std::vector<std::uint32_t> support;
  for ( std::uint32_t i = 0; i < b.frame; ++i )
  {
    if ( toggles[i] )
    {
      support.push_back( i );
    }
  }
  return binomial_combo( b.frame, std::move( support ) );
}

/*! \brief Position t of the result holds bit length - 1 - t. */
inline bit_sequence reverse_sequence( const bit_sequence& s )
{
  return s.reversed();
}

/*! \brief B-representation of the reversed sequence.

  For each index k of the input, every index i with (i AND k) == i — the
  full Sierpinski row k — is toggled into the result.
*/
inline binomial_combo reverse_brep( const binomial_combo& b )
{
  std::vector<std::uint8_t> toggles( b.frame, 0 );
  for ( auto k : b.support )
  {
    std::uint32_t sub = k;
    while ( true )
    {
      toggles[sub] ^= 1;
      if ( sub == 0 )
      {
        break;
      }
      sub = ( sub - 1 ) & k;
    }
  }
  std::vector<std::uint32_t> support;
  for ( std::uint32_t i = 0; i < b.frame; ++i )
  {
    if ( toggles[i] )
    {
      support.push_back( i );
    }
  }
  return binomial_combo( b.frame, std::move( support ) );
}

} // namespace gf2seq
