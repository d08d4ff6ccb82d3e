#ifndef ALTAU_REPORT_HPP
#define ALTAU_REPORT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace altau
{

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckLine> lines;

    void add(std::string name, bool ok, std::string detail = {})
    {
        lines.push_back({std::move(name), ok, std::move(detail)});
    }
    void append(const CheckReport &other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
    bool passed() const
    {
        return std::all_of(lines.begin(), lines.end(), [](const CheckLine &l) { return l.passed; });
    }
};

} // namespace altau

#endif
