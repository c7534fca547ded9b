#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "eitcool/params.hpp"

namespace eitcool {

// Parses `key = value` lines. Blank lines and `#` comments (full-line or
// trailing) are ignored. Unknown or repeated keys and unparsable values are
// rejected with the key name and line number in the message.
RawParams parse_config(std::istream& in);

RawParams load_config(const std::filesystem::path& path);

// Parses a single `key=value` override as given on the command line.
std::pair<std::string, double> parse_assignment(const std::string& text);

// `# key = value` lines describing every field of `p`, in a fixed order.
std::vector<std::string> describe(const SystemParams& p);

}  // namespace eitcool
