#pragma once

#include "twodist/coloring.hpp"
#include "twodist/planar_graph.hpp"

#include <string>
#include <string_view>

namespace twodist {

/// Text format:
///   # comment
///   p <n> <m>
///   r <v> <deg> <u1> ... <udeg>     (one line per vertex, 1-based, counterclockwise)
/// Throws ParseError, or Error{EmbeddingInvalid | NotConnected} from validation.
PlanarGraph parse_graph(std::string_view text);
std::string write_graph(const PlanarGraph& g, std::string_view comment = {});

/// Lines "<v> <c>", 1-based; vertices not listed stay uncoloured.
Coloring parse_coloring(std::string_view text, int order, int budget);
std::string write_coloring(const Coloring& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace twodist
