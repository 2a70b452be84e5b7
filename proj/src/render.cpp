#include "dyckstat/render.hpp"

#include "dyckstat/errors.hpp"

#include <sstream>

namespace dyck {

std::vector<std::string> series_lines(const Series& s) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int k = 0; k <= s.order(); ++k)
        out.push_back("z^" + std::to_string(k) + ": " + s.coeff(k).to_string());
    return out;
}

namespace {

std::string constant_string(const Polynomial& p) {
    if (!p.is_constant())
        throw InvalidArgument("series has non-constant coefficients; bind its variables first");
    std::ostringstream os;
    os << p.constant_value();
    return os.str();
}

} // namespace

std::string series_values_line(const Series& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (k) out += " ";
        out += constant_string(s.coeff(k));
    }
    return out;
}

std::vector<std::string> bfile_lines(const Series& s) {
    std::vector<std::string> out;
    for (int k = 0; k <= s.order(); ++k)
        out.push_back(std::to_string(k) + " " + constant_string(s.coeff(k)));
    return out;
}

} // namespace dyck
