#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "psrecon/psrecon.hpp"

namespace psrecon::cli {

enum class Format { Json, Text };

Format parse_format(std::string_view name);

/// Reads `path`, or standard input when path is "-".
std::string read_input(const std::string& path, std::istream& stdin_stream);

/// One binary string per line. Blank lines and lines starting with '#'
/// are skipped.
StringMultiset parse_strings(std::string_view text);

/// JSON if the first non-blank character is '{', else text pairs
/// ("zeros ones" per line, '#' comments).
std::vector<CompositionPair> parse_pairs(std::string_view text);

CompositionMultiset read_compositions(std::string_view text,
                                      const Expectations& expect);

/// Canonical: pairs ordered by (length, ones), compact JSON.
std::string write_compositions(const CompositionMultiset& m, Format format);

std::string write_strings(const StringMultiset& u, Format format);

std::string write_classes(const std::vector<ReversalClass>& classes,
                          bool count_only, Format format);

}  // namespace psrecon::cli
