#pragma once

// Export plumbing shared by the CLI: deterministic number formatting, CSV
// with a '# key = value' metadata block, JSON loading/saving, and output
// directory resolution (flag > CONEVAC_OUT_DIR > current directory).
//
// Determinism contract: identical inputs produce bit-identical files.  All
// doubles go through "%.17g" (shortest exact round-trip is not used because
// its output can differ across standard libraries); JSON objects serialize
// with sorted keys (nlohmann's default object is ordered by key); nothing
// derived from the clock is ever written.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace conevac {

using Json = nlohmann::json;

inline std::string fmt_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// Stream cells of one CSV row; doubles are "%.17g", integers decimal,
// strings verbatim.
class CsvWriter {
  public:
    explicit CsvWriter(const std::filesystem::path& path) {
        out_.open(path);
        if (!out_) throw std::runtime_error("cannot open for writing: " + path.string());
    }

    void metadata(std::string_view key, std::string_view value) {
        out_ << "# " << key << " = " << value << "\n";
    }
    void metadata(std::string_view key, double value) { metadata(key, fmt_g17(value)); }
    void metadata(std::string_view key, int value) { metadata(key, std::to_string(value)); }

    // The resolved-config echo: every key of a flat JSON object, sorted.
    void metadata_block(const Json& config) {
        for (const auto& [key, value] : config.items())
            metadata(key, value.is_string() ? value.get<std::string>() : value.dump());
    }

    template <class... Ts>
    void row(const Ts&... cells) {
        bool first = true;
        (write_cell(cells, first), ...);
        out_ << "\n";
    }

  private:
    template <class T>
    void write_cell(const T& cell, bool& first) {
        if (!first) out_ << ",";
        first = false;
        if constexpr (std::is_same_v<T, double> || std::is_same_v<T, float>)
            out_ << fmt_g17(cell);
        else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>)
            out_ << std::to_string(cell);
        else if constexpr (std::is_same_v<T, bool>)
            out_ << (cell ? "true" : "false");
        else
            out_ << cell;
    }

    std::ofstream out_;
};

inline Json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
    }
}

inline void save_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << j.dump(2) << "\n";
}

// Precedence: explicit flag value, then CONEVAC_OUT_DIR, then ".".  The
// directory is created if missing.
inline std::filesystem::path resolve_out_dir(const std::string& flag_value) {
    std::filesystem::path dir;
    if (!flag_value.empty()) {
        dir = flag_value;
    } else if (const char* env = std::getenv("CONEVAC_OUT_DIR"); env && *env) {
        dir = env;
    } else {
        dir = ".";
    }
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace conevac
