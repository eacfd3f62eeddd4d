#include "sturmkit/word.hpp"

#include <algorithm>
#include <vector>

namespace sturmkit {

int factor_complexity(const Word& w, int n) {
    if (n < 1 || static_cast<std::size_t>(n) > w.size())
        throw DomainError("factor length out of range");
    std::string_view text = w.str();
    std::vector<std::string_view> factors;
    factors.reserve(text.size());
    for (std::size_t i = 0; i + n <= text.size(); ++i) factors.push_back(text.substr(i, n));
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    return static_cast<int>(factors.size());
}

} // namespace sturmkit
