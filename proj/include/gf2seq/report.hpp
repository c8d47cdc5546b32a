/*!
  \file report.hpp
  \brief Pass/fail entries produced by the verification suites.
*/

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gf2seq
{

struct verification_entry
{
  enum class kind
  {
    pass,
    fail,
    note // informational, never affects the overall outcome
  };

  kind status;
  std::string name;   // dotted property id, e.g. "core.moebius_involution"
  std::string scope;  // inputs covered, e.g. "frames=1..16"
  std::string detail; // counterexample or recorded observation
};

struct verification_report
{
  std::vector<verification_entry> entries;

  bool all_passed() const
  {
    for ( const auto& e : entries )
    {
      if ( e.status == verification_entry::kind::fail )
      {
        return false;
      }
    }
    return true;
  }

  void add( verification_entry::kind status, std::string name, std::string scope, std::string detail = "" )
  {
    entries.push_back( { status, std::move( name ), std::move( scope ), std::move( detail ) } );
  }

  void check( bool ok, std::string name, std::string scope, std::string detail_on_fail = "" )
  {
    add( ok ? verification_entry::kind::pass : verification_entry::kind::fail,
         std::move( name ), std::move( scope ), ok ? std::string{} : std::move( detail_on_fail ) );
  }

  void append( const verification_report& other )
  {
    entries.insert( entries.end(), other.entries.begin(), other.entries.end() );
  }
};

/*! \brief One line per entry: status, name, scope, then any detail. */
inline void print_report( std::ostream& os, const verification_report& report )
{
  for ( const auto& e : report.entries )
  {
    const char* status = e.status == verification_entry::kind::pass ? "pass" : e.status == verification_entry::kind::fail ? "FAIL" : "note";
    os << status << ' ' << e.name << ' ' << ( e.scope.empty() ? "-" : e.scope );
    if ( !e.detail.empty() )
    {
      os << ' ' << e.detail;
    }
    os << '\n';
  }
}

} // namespace gf2seq
