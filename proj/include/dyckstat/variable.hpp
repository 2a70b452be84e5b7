#pragma once

#include "dyckstat/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dyck {

/// A formal variable: one of the letters t, r, s, w, y, q, p, h, z with an
/// optional positive index (t, t1, t2, ..., r1, ...).  The letter z is the
/// series variable and is never indexed.
///
/// Variables order as t < r < s < w < y < q < p < h < z, indexed forms by
/// ascending index within a letter.  This order fixes the canonical printing
/// of monomials.
class VariableId {
public:
    constexpr VariableId(char letter, std::uint32_t index = 0)
        : rank_(rank_of(letter)), index_(index) {
        if (rank_ == 255) throw InvalidArgument("unknown variable letter");
    }

    static VariableId parse(std::string_view text);

    char letter() const { return letters()[rank_]; }
    std::uint32_t index() const { return index_; }
    bool indexed() const { return index_ != 0; }
    bool is_z() const { return letter() == 'z'; }

    std::string name() const;

    friend auto operator<=>(const VariableId& a, const VariableId& b) = default;

private:
    static constexpr const char* letters() { return "trswyqphz"; }
    static constexpr std::uint8_t rank_of(char c) {
        for (std::uint8_t i = 0; letters()[i] != '\0'; ++i)
            if (letters()[i] == c) return i;
        return 255; // rejected in parse(); constexpr contexts require a valid letter
    }

    std::uint8_t rank_;
    std::uint32_t index_;
};

namespace var {
inline VariableId t(std::uint32_t i = 0) { return {'t', i}; }
inline VariableId r(std::uint32_t i = 0) { return {'r', i}; }
inline VariableId s(std::uint32_t i = 0) { return {'s', i}; }
inline VariableId w(std::uint32_t i = 0) { return {'w', i}; }
inline VariableId y(std::uint32_t i = 0) { return {'y', i}; }
inline VariableId q(std::uint32_t i = 0) { return {'q', i}; }
inline VariableId p(std::uint32_t i = 0) { return {'p', i}; }
inline VariableId h(std::uint32_t i = 0) { return {'h', i}; }
inline VariableId z() { return {'z', 0}; }
} // namespace var

} // namespace dyck
