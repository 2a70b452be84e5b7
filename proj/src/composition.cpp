#include "dyckstat/composition.hpp"

#include "dyckstat/errors.hpp"

#include <numeric>

namespace dyck {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw InvalidArgument("composition parts must be >= 1");
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Composition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    return out;
}

Composition Composition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t j = i;
        int value = 0;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') {
            value = value * 10 + (text[j] - '0');
            ++j;
        }
        if (j == i) throw InvalidArgument("bad composition text '" + std::string(text) + "'");
        parts.push_back(value);
        if (j < text.size()) {
            if (text[j] != ',')
                throw InvalidArgument("bad composition text '" + std::string(text) + "'");
            ++j;
        }
        i = j;
    }
    return Composition(std::move(parts));
}

namespace {

void gen(int remaining, std::vector<int>& cur, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(Composition(cur));
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        cur.push_back(part);
        gen(remaining - part, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Composition> enumerate_compositions(int n) {
    if (n < 0) throw InvalidArgument("n must be >= 0");
    std::vector<Composition> out;
    std::vector<int> cur;
    gen(n, cur, out);
    return out;
}

} // namespace dyck
