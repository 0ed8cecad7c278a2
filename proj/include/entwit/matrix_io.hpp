// entwit: bipartite entanglement-detection toolkit
// matrix_io.hpp — the text matrix-file format used by the CLI and fixtures.
//
// Format:
//   # comment lines start with '#' and may appear anywhere
//   dims m n
//   row col re im          (0-based indices, one line per entry)
// Unlisted entries are zero. Floats are written with 17 significant digits so
// a write→read round trip is bitwise exact.
#pragma once

#include <iosfwd>
#include <string>

#include "entwit/states.hpp"

namespace entwit {

struct MatrixFile {
    Matrix mat;
    BipartiteDims dims;
    std::string comment;  ///< first comment block of the file, '#' stripped
};

/// Parses a matrix file; throws ParseError with line context on malformed
/// input (bad header, out-of-range indices, non-numeric fields).
MatrixFile read_matrix_file(const std::string& path);
MatrixFile read_matrix_stream(std::istream& in, const std::string& name);

/// Writes dims header and all (mn)² entries; `comment` (if nonempty) is
/// emitted first, one '#' line per '\n'-separated piece.
void write_matrix_file(const std::string& path, const Matrix& mat,
                       BipartiteDims dims, const std::string& comment = "");
void write_matrix_stream(std::ostream& out, const Matrix& mat,
                         BipartiteDims dims, const std::string& comment = "");

/// Validation for --kind: "density" runs validate_density; "witness" requires
/// Hermiticity within 1e−10; anything else is a ParameterError.
void validate_kind(const MatrixFile& mf, const std::string& kind);

} // namespace entwit
