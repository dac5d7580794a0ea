#pragma once

#include "ahn/compound.hpp"
#include "ahn/forecast.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace ahn {

inline constexpr std::string_view kFormatVersion = "1.0";

enum class ModelKind { Compound, Forecast };

using AnyModel = std::variant<CompoundModel, ForecastModel>;

/// Model document: {"format_version", "kind", "payload"}. Doubles are written
/// as shortest round-trip decimals, so loading reproduces every bit.
nlohmann::json to_document(const CompoundModel& model);
nlohmann::json to_document(const ForecastModel& model);

/// Throws VersionMismatchError or SchemaError. Never returns a partial model.
AnyModel from_document(const nlohmann::json& document);

std::string serialize_model(const CompoundModel& model);
std::string serialize_model(const ForecastModel& model);
AnyModel parse_model(std::string_view text);

/// Writes atomically (temporary file + rename). Throws IoError.
void save_model(const CompoundModel& model, const std::filesystem::path& path);
void save_model(const ForecastModel& model, const std::filesystem::path& path);

/// Throws IoError, SchemaError or VersionMismatchError.
AnyModel load_model(const std::filesystem::path& path);

/// The compound of either model kind.
const CompoundModel& compound_of(const AnyModel& model);

/// Replaces `path` with `content` via a sibling temporary file. Throws IoError.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace ahn
