#include "fewdist/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string_view>

#include "fewdist/errors.hpp"

namespace fewdist {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Calls f(content, line_number) for each non-blank, non-comment line.
template <class F>
void for_each_record(std::istream& in, F&& f) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    f(content, number);
  }
}

Scalar parse_scalar_at(std::string_view text, std::size_t line) {
  auto s = Scalar::try_parse(trim(text));
  if (!s) throw ParseError("malformed scalar '" + std::string(text) + "'", line);
  return *std::move(s);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  return in;
}

}  // namespace

NumSet parse_set(std::istream& in) {
  std::vector<Scalar> values;
  for_each_record(in, [&](std::string_view content, std::size_t line) { values.push_back(parse_scalar_at(content, line)); });
  return NumSet::from_scalars(std::move(values));
}

NumSet read_set_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_set(in);
}

PointSet parse_points(std::istream& in) {
  std::vector<Point> points;
  for_each_record(in, [&](std::string_view content, std::size_t line) {
    const auto comma = content.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected 'x,y'", line);
    points.push_back({parse_scalar_at(content.substr(0, comma), line), parse_scalar_at(content.substr(comma + 1), line)});
  });
  return PointSet(std::move(points));
}

PointSet read_points_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_points(in);
}

std::string format_set(const NumSet& s) {
  std::ostringstream out;
  for (const auto& v : s.to_scalars()) out << v.to_string() << '\n';
  return out.str();
}

}  // namespace fewdist
