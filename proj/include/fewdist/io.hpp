#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "fewdist/geometry.hpp"
#include "fewdist/numset.hpp"

namespace fewdist {

/// One scalar per line ("7", "-3/4"); blank lines and lines starting with '#'
/// are skipped; duplicates collapse.  Throws ParseError with the line number.
NumSet parse_set(std::istream& in);
NumSet read_set_file(const std::filesystem::path& path);

/// One point per line as "x,y", each coordinate in the scalar syntax.
PointSet parse_points(std::istream& in);
PointSet read_points_file(const std::filesystem::path& path);

/// The set file form of a set: one scalar per line.
std::string format_set(const NumSet& s);

}  // namespace fewdist
