#pragma once

#include "fock/geometry.hpp"
#include "fock/interpolate.hpp"

#include <iosfwd>
#include <string>

// CSV formats. Point sets: header `re,im,mult`, one row per point, mult
// optional (default 1). Interpolation data: header `re,im,j,c_re,c_im`.
// Writers emit 17 significant digits so a round trip reproduces the set
// bit for bit.

namespace fock {

/// Parse a point-set CSV; errors carry the 1-based line number.
MultiSet read_pointset_csv(std::istream& in, const std::string& name = "<stream>");
MultiSet read_pointset_file(const std::string& path);

void write_pointset_csv(std::ostream& out, const MultiSet& set);
void write_pointset_file(const std::string& path, const MultiSet& set);

/// Parse interpolation data; rows for one point must carry j = 0..m-1.
InterpolationData read_interp_csv(std::istream& in, const std::string& name = "<stream>");
InterpolationData read_interp_file(const std::string& path);

void write_interp_csv(std::ostream& out, const InterpolationData& data);

} // namespace fock
