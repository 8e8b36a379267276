#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "minrec/fn.hpp"
#include "minrec/perm.hpp"

namespace minrec {

/// Function text format, one record:
///   k=<int> n=<int>
///   labels: <space-separated labels>
///   table: <k^n space-separated labels>   (row-major, a_1 most significant)
std::string format_function(const FiniteFunction& f);

/// Reads one record; throws std::invalid_argument on malformed input,
/// wrong table length or unknown labels.  Returns nullopt at end of stream.
std::optional<FiniteFunction> read_function(std::istream& in);

FiniteFunction parse_function(const std::string& text);
FiniteFunction load_function_file(const std::string& path);

/// Accepts one-line form "(a1,a2,...)" or cycle form "(c1 c2 ...)(...)";
/// the degree disambiguates and bounds cycle entries.
Permutation parse_permutation(const std::string& text, int degree);

}  // namespace minrec
