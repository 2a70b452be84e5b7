#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace dyck {

/// Ordered sequence of positive integers.
struct Composition {
    std::vector<int> parts;

    Composition() = default;
    explicit Composition(std::vector<int> p);

    int total() const;
    bool empty() const { return parts.empty(); }

    /// Comma-separated parts; empty composition renders as "".
    std::string to_string() const;
    static Composition parse(std::string_view text);

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// All compositions of n in lexicographic order (n = 0 gives the empty one).
std::vector<Composition> enumerate_compositions(int n);

} // namespace dyck
