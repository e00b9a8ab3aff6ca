#pragma once

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace stancewalk {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Lowercase hex SHA-256 of a file's bytes; IoError when unreadable.
std::string sha256_file(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/**
 * Everything needed to repeat a run: the command, every resolved option value, the tool
 * version, and a digest of each input file. No wall-clock values, so equal runs produce equal
 * manifests.
 */
class RunManifest {
public:
    explicit RunManifest(std::string command);

    void set(const std::string& key, nlohmann::json value) { config_[key] = std::move(value); }
    void add_input(const std::string& role, const std::filesystem::path& path);

    nlohmann::json to_json() const;
    void write(const std::filesystem::path& path) const;

private:
    std::string command_;
    nlohmann::json config_ = nlohmann::json::object();
    nlohmann::json inputs_ = nlohmann::json::array();
};

} // namespace stancewalk
