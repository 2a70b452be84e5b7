#pragma once

#include "dyckstat/series.hpp"

#include <string>
#include <vector>

namespace dyck {

/// One line per power: "z^k: <polynomial>" with canonical monomial order.
std::vector<std::string> series_lines(const Series& s);

/// Space-separated coefficients on one line; requires constant coefficients.
std::string series_values_line(const Series& s);

/// OEIS b-file style "n a(n)" lines from n = 0; requires constant
/// coefficients.
std::vector<std::string> bfile_lines(const Series& s);

} // namespace dyck
