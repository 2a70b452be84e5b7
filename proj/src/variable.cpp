#include "dyckstat/variable.hpp"

#include "dyckstat/errors.hpp"

#include <cctype>

namespace dyck {

VariableId VariableId::parse(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty variable name");
    char letter = text[0];
    if (rank_of(letter) == 255)
        throw InvalidArgument("unknown variable letter '" + std::string(1, letter) + "'");
    std::uint32_t index = 0;
    if (text.size() > 1) {
        if (letter == 'z') throw InvalidArgument("the series variable z takes no index");
        for (std::size_t i = 1; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw InvalidArgument("bad variable name '" + std::string(text) + "'");
            index = index * 10 + static_cast<std::uint32_t>(text[i] - '0');
        }
        if (index == 0) throw InvalidArgument("variable index must be >= 1");
    }
    return {letter, index};
}

std::string VariableId::name() const {
    std::string s(1, letter());
    if (indexed()) s += std::to_string(index_);
    return s;
}

} // namespace dyck
