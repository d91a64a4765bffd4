#ifndef MPG_PLANAR_CODE_HPP
#define MPG_PLANAR_CODE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mpg/triangulation.hpp"

namespace mpg {

/// planar_code byte format: optional ASCII header ">>planar_code<<", then
/// per graph one byte n, then for each vertex its neighbors as 1-based
/// bytes in rotation order, each list 0-terminated.
std::vector<Triangulation> read_planar_code(const std::string& bytes);
std::string write_planar_code(const std::vector<Triangulation>& graphs, bool header = true);

std::vector<Triangulation> read_planar_code_file(const std::string& path);
void write_planar_code_file(const std::string& path, const std::vector<Triangulation>& graphs);

/// Adjacency-list text format: per record a line "n m" followed by m lines
/// "u v" (0-based); records repeat until end of stream.
std::vector<Graph> read_adjlist(std::istream& in);
void write_adjlist(std::ostream& out, const std::vector<Graph>& graphs);
std::vector<Graph> read_adjlist_file(const std::string& path);

}  // namespace mpg

#endif
