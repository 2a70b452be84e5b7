#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyck::cli {

/// Runs one command line (without the program name).  Exit codes:
/// 0 success, 1 verification or identity failure, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Re-renders the plain output from a JSON document produced with
/// --format json; the plain format is defined as exactly this rendering.
std::string plain_from_json(const std::string& json_text);

} // namespace dyck::cli
