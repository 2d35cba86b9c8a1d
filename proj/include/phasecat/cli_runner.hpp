#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace phasecat::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kGridSchema = "phasecat-grid-v1";
inline constexpr const char* kReportSchema = "phasecat-report-v1";
inline constexpr std::uint64_t kDefaultSeed = 20240001ULL;

nlohmann::json load_config(const std::string& path);

/// Expand a "preset" key into explicit fields (explicit fields win).
nlohmann::json apply_preset(nlohmann::json config);

int run_cat(const nlohmann::json& config, const std::string& out_dir);
int run_decohere(const nlohmann::json& config, const std::string& out_dir);
int run_kerr(const nlohmann::json& config, const std::string& out_dir);
int run_kho(const nlohmann::json& config, const std::string& out_dir);
int run_verify(const nlohmann::json& config, const std::string& out_dir, std::uint64_t seed);

/// Full argv dispatch; returns the process exit code.
int dispatch(int argc, char** argv);

}  // namespace phasecat::cli
