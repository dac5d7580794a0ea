#include "ahn/model_io.hpp"

#include "ahn/errors.hpp"

#include <fstream>
#include <sstream>
#include <system_error>

namespace ahn {

using nlohmann::json;

namespace {

json vector_json(const Eigen::VectorXd& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

json compound_payload(const CompoundModel& model) {
  json molecules = json::array();
  for (const auto& mol : model.molecules) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < mol.hydrogen_coeffs.rows(); ++i) {
      rows.push_back(vector_json(mol.hydrogen_coeffs.row(i).transpose()));
    }
    molecules.push_back({{"hydrogen_count", mol.hydrogen_count},
                         {"carbon_value", mol.carbon_value},
                         {"hydrogen_coeffs", std::move(rows)},
                         {"center", vector_json(mol.center)}});
  }
  return {{"n_features", model.n_features()},
          {"feature_names", model.feature_names},
          {"target_name", model.target_name},
          {"learning_rate", model.learning_rate},
          {"overall_error", model.overall_error},
          {"molecules", std::move(molecules)}};
}

json scaler_json(const Scaler& scaler) {
  return {{"column_names", scaler.column_names}, {"means", scaler.means}, {"stds", scaler.stds}};
}

// Field access that reports the path of whatever is missing or mistyped.
const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) {
    throw SchemaError(where + " is not an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError("missing field '" + where + "." + key + "'");
  }
  return *it;
}

double number(const json& value, const std::string& where) {
  if (!value.is_number()) {
    throw SchemaError("'" + where + "' must be a number");
  }
  return value.get<double>();
}

std::vector<double> numbers(const json& value, const std::string& where) {
  if (!value.is_array()) {
    throw SchemaError("'" + where + "' must be an array of numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(number(value[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> strings(const json& value, const std::string& where) {
  if (!value.is_array()) {
    throw SchemaError("'" + where + "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw SchemaError("'" + where + "' must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::size_t count(const json& value, const std::string& where) {
  if (!value.is_number_unsigned()) {
    throw SchemaError("'" + where + "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

CompoundModel parse_compound(const json& payload, const std::string& where) {
  CompoundModel model;
  model.feature_names = strings(field(payload, "feature_names", where), where + ".feature_names");
  const auto n = count(field(payload, "n_features", where), where + ".n_features");
  if (n != model.feature_names.size()) {
    throw SchemaError("'" + where + ".n_features' disagrees with feature_names");
  }
  const json& target = field(payload, "target_name", where);
  if (!target.is_string()) {
    throw SchemaError("'" + where + ".target_name' must be a string");
  }
  model.target_name = target.get<std::string>();
  model.learning_rate = number(field(payload, "learning_rate", where), where + ".learning_rate");
  model.overall_error = number(field(payload, "overall_error", where), where + ".overall_error");

  const json& molecules = field(payload, "molecules", where);
  if (!molecules.is_array()) {
    throw SchemaError("'" + where + ".molecules' must be an array");
  }
  for (std::size_t j = 0; j < molecules.size(); ++j) {
    const std::string at = where + ".molecules[" + std::to_string(j) + "]";
    const json& m = molecules[j];
    const json& k_field = field(m, "hydrogen_count", at);
    if (!k_field.is_number_integer()) {
      throw SchemaError("'" + at + ".hydrogen_count' must be an integer");
    }
    Molecule mol;
    mol.hydrogen_count = k_field.get<int>();
    mol.carbon_value = number(field(m, "carbon_value", at), at + ".carbon_value");
    const auto center = numbers(field(m, "center", at), at + ".center");
    mol.center = Eigen::Map<const Eigen::VectorXd>(center.data(), static_cast<Eigen::Index>(center.size()));
    const json& rows = field(m, "hydrogen_coeffs", at);
    if (!rows.is_array()) {
      throw SchemaError("'" + at + ".hydrogen_coeffs' must be an array of rows");
    }
    mol.hydrogen_coeffs.resize(static_cast<Eigen::Index>(rows.size()), mol.center.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto row = numbers(rows[i], at + ".hydrogen_coeffs[" + std::to_string(i) + "]");
      if (static_cast<Eigen::Index>(row.size()) != mol.center.size()) {
        throw SchemaError("'" + at + ".hydrogen_coeffs' rows must match the center length");
      }
      for (std::size_t r = 0; r < row.size(); ++r) {
        mol.hydrogen_coeffs(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(r)) = row[r];
      }
    }
    model.molecules.push_back(std::move(mol));
  }
  try {
    model.validate();
  } catch (const InputError& e) {
    throw SchemaError(where + ": " + e.what());
  }
  return model;
}

Scaler parse_scaler(const json& obj, const std::string& where) {
  Scaler scaler;
  scaler.column_names = strings(field(obj, "column_names", where), where + ".column_names");
  scaler.means = numbers(field(obj, "means", where), where + ".means");
  scaler.stds = numbers(field(obj, "stds", where), where + ".stds");
  try {
    scaler.validate();
  } catch (const InputError& e) {
    throw SchemaError(where + ": " + e.what());
  }
  return scaler;
}

json envelope(std::string_view kind, json payload) {
  return {{"format_version", std::string(kFormatVersion)},
          {"kind", std::string(kind)},
          {"payload", std::move(payload)}};
}

}  // namespace

json to_document(const CompoundModel& model) {
  model.validate();
  return envelope("compound", compound_payload(model));
}

json to_document(const ForecastModel& model) {
  model.validate();
  return envelope("forecast", {{"compound", compound_payload(model.compound)},
                               {"x_scaler", scaler_json(model.x_scaler)},
                               {"y_scaler", scaler_json(model.y_scaler)},
                               {"window", model.window_spec.window},
                               {"target_mode", "delta"}});
}

AnyModel from_document(const json& document) {
  if (!document.is_object()) {
    throw SchemaError("model document must be a JSON object");
  }
  const json& version = field(document, "format_version", "document");
  if (!version.is_string()) {
    throw SchemaError("'document.format_version' must be a string");
  }
  if (version.get<std::string>() != kFormatVersion) {
    throw VersionMismatchError(std::string(kFormatVersion), version.get<std::string>());
  }
  const json& kind = field(document, "kind", "document");
  const json& payload = field(document, "payload", "document");
  if (kind == "compound") {
    return parse_compound(payload, "payload");
  }
  if (kind == "forecast") {
    ForecastModel model;
    model.compound = parse_compound(field(payload, "compound", "payload"), "payload.compound");
    model.x_scaler = parse_scaler(field(payload, "x_scaler", "payload"), "payload.x_scaler");
    model.y_scaler = parse_scaler(field(payload, "y_scaler", "payload"), "payload.y_scaler");
    model.window_spec.window = count(field(payload, "window", "payload"), "payload.window");
    if (field(payload, "target_mode", "payload") != "delta") {
      throw SchemaError("'payload.target_mode' must be \"delta\"");
    }
    try {
      model.validate();
    } catch (const InputError& e) {
      throw SchemaError(std::string("payload: ") + e.what());
    }
    return model;
  }
  throw SchemaError("unknown model kind " + kind.dump());
}

std::string serialize_model(const CompoundModel& model) {
  return to_document(model).dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

std::string serialize_model(const ForecastModel& model) {
  return to_document(model).dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

AnyModel parse_model(std::string_view text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("model document is not valid JSON: ") + e.what());
  }
  try {
    return from_document(document);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("model document is malformed: ") + e.what());
  }
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
  auto temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot write '" + temp.string() + "'");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(temp, ignored);
      throw IoError("failed writing '" + temp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(temp, ignored);
    throw IoError("cannot replace '" + path.string() + "': " + ec.message());
  }
}

void save_model(const CompoundModel& model, const std::filesystem::path& path) {
  write_file_atomically(path, serialize_model(model));
}

void save_model(const ForecastModel& model, const std::filesystem::path& path) {
  write_file_atomically(path, serialize_model(model));
}

AnyModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open model file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("failed reading model file '" + path.string() + "'");
  }
  return parse_model(buffer.str());
}

const CompoundModel& compound_of(const AnyModel& model) {
  if (const auto* forecast = std::get_if<ForecastModel>(&model)) {
    return forecast->compound;
  }
  return std::get<CompoundModel>(model);
}

}  // namespace ahn
