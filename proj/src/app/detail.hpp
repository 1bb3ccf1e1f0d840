#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <string_view>

namespace cylqd::app::detail {

template <typename... Args>
std::string strf(const char* fmt, Args... args)
{
    const int n = std::snprintf(nullptr, 0, fmt, args...);
    std::string out(static_cast<std::size_t>(n), '\0');
    std::snprintf(out.data(), out.size() + 1, fmt, args...);
    return out;
}

inline double round4(double x)
{
    return std::round(x * 1e4) / 1e4;
}

void write_text(const std::filesystem::path& path, std::string_view text);

/// run_metadata.json: the only output that carries a timestamp.
std::filesystem::path write_run_metadata(const std::filesystem::path& dir, std::string_view command,
                                         std::string_view config_json,
                                         const std::vector<std::filesystem::path>& written);

} // namespace cylqd::app::detail
