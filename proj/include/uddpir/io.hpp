#ifndef UDDPIR_IO_HPP
#define UDDPIR_IO_HPP

#include <iosfwd>
#include <string>

#include "uddpir/linalg.hpp"

namespace uddpir {

/// Matrix file format: header line "q k n [modulus-digits]" (the m+1
/// modulus coefficients, constant term first, present iff q is a proper
/// prime power), then k lines of n entries in [0, q). Bit-exact round trip.
GfMatrix read_matrix(std::istream& in);
GfMatrix read_matrix_file(const std::string& path);

std::string write_matrix(const GfMatrix& g);
void write_matrix_file(const GfMatrix& g, const std::string& path);

}  // namespace uddpir

#endif
