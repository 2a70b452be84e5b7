#include "dyckstat/path.hpp"

#include "dyckstat/errors.hpp"

namespace dyck {

namespace {

void validate(const std::vector<Step>& steps) {
    long long balance = 0;
    for (Step s : steps) {
        balance += (s == Step::Up) ? 1 : -1;
        if (balance < 0) throw BelowAxis("path dips below the x-axis");
    }
    if (balance != 0) throw NonBalanced("unequal numbers of Up and Down steps");
}

} // namespace

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) { validate(steps_); }

DyckPath DyckPath::unchecked(std::vector<Step> steps) {
    return DyckPath(std::move(steps), Unchecked{});
}

DyckPath DyckPath::parse(std::string_view text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case 'U':
        case 'u':
        case '(':
            steps.push_back(Step::Up);
            break;
        case 'D':
        case 'd':
        case ')':
            steps.push_back(Step::Down);
            break;
        default:
            throw BadSymbol("unexpected symbol '" + std::string(1, c) + "' in path text");
        }
    }
    return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out += (s == Step::Up) ? 'U' : 'D';
    return out;
}

namespace {

// Lexicographic generation with U < D: always try Up before Down.
void gen(std::vector<Step>& buf, int ups_left, int downs_over_ups,
         const std::function<void(const DyckPath&)>& fn) {
    if (ups_left == 0 && downs_over_ups == 0) {
        fn(DyckPath::unchecked(buf));
        return;
    }
    if (ups_left > 0) {
        buf.push_back(Step::Up);
        gen(buf, ups_left - 1, downs_over_ups + 1, fn);
        buf.pop_back();
    }
    if (downs_over_ups > 0) {
        buf.push_back(Step::Down);
        gen(buf, ups_left, downs_over_ups - 1, fn);
        buf.pop_back();
    }
}

} // namespace

void for_each_path(int n, const std::function<void(const DyckPath&)>& fn) {
    if (n < 0) throw InvalidArgument("semilength must be >= 0");
    std::vector<Step> buf;
    buf.reserve(static_cast<std::size_t>(2 * n));
    gen(buf, n, 0, fn);
}

std::vector<DyckPath> enumerate_paths(int n) {
    std::vector<DyckPath> out;
    for_each_path(n, [&](const DyckPath& p) { out.push_back(p); });
    return out;
}

int path_height(const DyckPath& path) {
    int y = 0, best = 0;
    for (Step s : path.steps()) {
        y += (s == Step::Up) ? 1 : -1;
        if (y > best) best = y;
    }
    return best;
}

bool is_pyramid(const DyckPath& path) {
    if (path.empty()) return false;
    std::size_t n = path.size() / 2;
    for (std::size_t i = 0; i < n; ++i)
        if (path.step(i) != Step::Up) return false;
    for (std::size_t i = n; i < path.size(); ++i)
        if (path.step(i) != Step::Down) return false;
    return true;
}

int pit_size(std::span<const Step> steps) {
    if (steps.size() % 2 != 0) return -1;
    std::size_t j = steps.size() / 2;
    for (std::size_t i = 0; i < j; ++i)
        if (steps[i] != Step::Down) return -1;
    for (std::size_t i = j; i < steps.size(); ++i)
        if (steps[i] != Step::Up) return -1;
    return static_cast<int>(j);
}

bool is_pit_of_size_at_most(std::span<const Step> steps, int i) {
    int j = pit_size(steps);
    return j >= 0 && j <= i;
}

} // namespace dyck
