#pragma once

#include "ssd/involution.hpp"
#include "ssd/linear_code.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ssd {

// Malformed input file; the message carries the 1-based line number.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedCode {
    LinearCode code;
    int declared_rows = 0;
    std::string warning;   // set when the listed rows were linearly dependent
};

// Code file: optional '#' comment lines, a header "n k", then k generator
// rows as strings over {0,1} of length n. The leftmost character is
// coordinate 1. Rows are reduced on load.
LoadedCode read_code(std::istream& in);
LoadedCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const LinearCode& c);
void write_code_file(const std::string& path, const LinearCode& c);

// Permutation file: optional '#' comments, then one line of n space-separated
// 1-based images. Must describe a permutation of order dividing 2.
Involution read_involution(std::istream& in);
Involution read_involution_file(const std::string& path);

}  // namespace ssd
