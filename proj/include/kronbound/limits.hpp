#pragma once

#include "kronbound/errors.hpp"

#include <cstdlib>
#include <string>
#include <string_view>

namespace kronbound {

/// Enumeration caps. Exceeding one raises LimitError instead of running unbounded.
struct Limits {
    int exact_n = 16;                    // character-formula Kronecker coefficients
    int table_n = 14;                    // exact 3D and binary table counts
    int pyramid_n = 40;                  // plane-partition enumeration
    long long max_states = 50'000'000;   // nodes visited by any single enumeration

    /// "key=value,key=value" with keys exact_n, table_n, pyramid_n, max_states.
    static Limits parse(std::string_view text);
    static Limits parse(std::string_view text, Limits base);

    /// Defaults overridden by KRONBOUND_LIMITS when set.
    static Limits from_env();
};

inline Limits Limits::parse(std::string_view text) { return parse(text, Limits{}); }

inline Limits Limits::parse(std::string_view text, Limits base) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view item = text.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw InputError("bad limits entry '" + std::string(item) + "'");
        const std::string key(item.substr(0, eq));
        const std::string value(item.substr(eq + 1));
        char* end = nullptr;
        const long long v = std::strtoll(value.c_str(), &end, 10);
        if (value.empty() || *end != '\0' || v < 0)
            throw InputError("bad limits value '" + std::string(item) + "'");
        if (key == "exact_n") base.exact_n = static_cast<int>(v);
        else if (key == "table_n") base.table_n = static_cast<int>(v);
        else if (key == "pyramid_n") base.pyramid_n = static_cast<int>(v);
        else if (key == "max_states") base.max_states = v;
        else throw InputError("unknown limits key '" + key + "'");
        pos = comma + 1;
    }
    return base;
}

inline Limits Limits::from_env() {
    const char* env = std::getenv("KRONBOUND_LIMITS");
    return env ? parse(env) : Limits{};
}

/// Counts visited nodes and throws once the budget is spent.
class StateBudget {
public:
    explicit StateBudget(long long budget, std::string what) : left_(budget), what_(std::move(what)) {}
    void tick(long long n = 1) {
        left_ -= n;
        if (left_ < 0) throw LimitError(what_ + ": enumeration state limit exceeded");
    }

private:
    long long left_;
    std::string what_;
};

}  // namespace kronbound
