#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyck {

enum class Step : std::uint8_t { Up, Down };

/// A Dyck path: equal numbers of Up and Down steps, every prefix having at
/// least as many Ups as Downs.  Immutable after construction.
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::vector<Step> steps);

    /// Accepts U/u/( for Up and D/d/) for Down.
    static DyckPath parse(std::string_view text);

    int semilength() const { return static_cast<int>(steps_.size() / 2); }
    std::size_t size() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }
    std::span<const Step> steps() const { return steps_; }
    Step step(std::size_t i) const { return steps_[i]; }

    /// Canonical rendering: uppercase U/D, no separators.
    std::string to_string() const;

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

    /// Trusted constructor for generators that maintain validity themselves.
    static DyckPath unchecked(std::vector<Step> steps);

private:
    struct Unchecked {};
    DyckPath(std::vector<Step> steps, Unchecked) : steps_(std::move(steps)) {}

    std::vector<Step> steps_;
};

/// Calls fn for every path of semilength n, in lexicographic order of the
/// step strings with U < D.
void for_each_path(int n, const std::function<void(const DyckPath&)>& fn);

/// All paths of semilength n in the same order.
std::vector<DyckPath> enumerate_paths(int n);

/// Maximal y-coordinate reached.
int path_height(const DyckPath& path);

/// True for u^k d^k with k >= 1.  The empty path is not a pyramid (it still
/// belongs to the pyramid-or-empty class, see ClassFlags).
bool is_pyramid(const DyckPath& path);

/// If the sequence has the shape d^j u^j (j >= 0), returns j; otherwise -1.
int pit_size(std::span<const Step> steps);

/// True when steps form a pit d^j u^j with j <= i.
bool is_pit_of_size_at_most(std::span<const Step> steps, int i);

} // namespace dyck
