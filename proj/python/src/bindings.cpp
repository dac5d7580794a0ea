#include "ahn/ahn.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace ahn;

namespace {

SplitMode split_mode(const std::string& text) { return parse_split_mode(text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Artificial Hydrocarbon Networks (compiled core)";

  auto error = py::register_exception<Error>(m, "AhnError");
  py::register_exception<InputError>(m, "InputError", error);
  py::register_exception<NumericError>(m, "NumericError", error);
  py::register_exception<EmptySubsetError>(m, "EmptySubsetError", error);
  py::register_exception<TrainingError>(m, "TrainingError", error);
  py::register_exception<IoError>(m, "IoError", error);
  auto schema = py::register_exception<SchemaError>(m, "SchemaError", error);
  py::register_exception<VersionMismatchError>(m, "VersionMismatchError", schema);

  py::class_<Dataset>(m, "Dataset")
      .def(py::init<RowMatrix, Eigen::VectorXd, std::vector<std::string>, std::string>(),
           py::arg("x"), py::arg("y"), py::arg("feature_names") = std::vector<std::string>{},
           py::arg("target_name") = std::string{})
      .def_property_readonly("x", &Dataset::x)
      .def_property_readonly("y", &Dataset::y)
      .def_property_readonly("rows", &Dataset::rows)
      .def_property_readonly("features", &Dataset::features)
      .def_property_readonly("feature_names", &Dataset::feature_names)
      .def_property_readonly("target_name", &Dataset::target_name)
      .def("__len__", &Dataset::rows);

  py::class_<TrainConfig>(m, "TrainConfig")
      .def(py::init<>())
      .def_readwrite("n_molecules", &TrainConfig::n_molecules)
      .def_readwrite("learning_rate", &TrainConfig::learning_rate)
      .def_readwrite("max_iterations", &TrainConfig::max_iterations)
      .def_readwrite("seed", &TrainConfig::seed)
      .def_readwrite("error_tolerance", &TrainConfig::error_tolerance)
      .def_readwrite("relocation_fraction", &TrainConfig::relocation_fraction)
      .def_readwrite("threads", &TrainConfig::threads)
      .def("validate", &TrainConfig::validate);

  py::class_<Molecule>(m, "Molecule")
      .def_readonly("hydrogen_count", &Molecule::hydrogen_count)
      .def_readonly("carbon_value", &Molecule::carbon_value)
      .def_readonly("hydrogen_coeffs", &Molecule::hydrogen_coeffs)
      .def_readonly("center", &Molecule::center)
      .def("__call__", [](const Molecule& mol, const std::vector<double>& x) {
        return molecule_eval(mol, x);
      });

  py::class_<CompoundModel>(m, "CompoundModel")
      .def_readonly("molecules", &CompoundModel::molecules)
      .def_readonly("feature_names", &CompoundModel::feature_names)
      .def_readonly("target_name", &CompoundModel::target_name)
      .def_readonly("learning_rate", &CompoundModel::learning_rate)
      .def_readonly("overall_error", &CompoundModel::overall_error)
      .def("__len__", &CompoundModel::size)
      .def("predict", [](const CompoundModel& model, const RowMatrix& x) {
        return compound_predict(model, x);
      })
      .def("__call__", [](const CompoundModel& model, const std::vector<double>& x) {
        return compound_eval(model, x);
      });

  py::class_<TrainReport>(m, "TrainReport")
      .def_readonly("iterations_run", &TrainReport::iterations_run)
      .def_readonly("per_molecule_errors", &TrainReport::per_molecule_errors)
      .def_readonly("empty_molecules", &TrainReport::empty_molecules)
      .def_readonly("overall_error", &TrainReport::overall_error)
      .def_readonly("best_iteration", &TrainReport::best_iteration)
      .def_readonly("error_history", &TrainReport::error_history)
      .def_readonly("best_error_history", &TrainReport::best_error_history)
      .def_property_readonly("stop_reason",
                             [](const TrainReport& r) { return std::string(to_string(r.stop_reason)); })
      .def_readonly("warnings", &TrainReport::warnings);

  py::class_<TrainResult>(m, "TrainResult")
      .def_readonly("model", &TrainResult::model)
      .def_readonly("report", &TrainResult::report);

  m.def("train", &train_compound, py::arg("data"), py::arg("config") = TrainConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("overall_error", py::overload_cast<const CompoundModel&, const Dataset&>(&overall_error));
  m.def("partition", &partition, py::arg("data"), py::arg("centers"));
  m.def("update_centers", &update_centers, py::arg("centers"), py::arg("errors"),
        py::arg("learning_rate"));
  m.def("saturated_chain", &saturated_chain);

  py::class_<GridCell>(m, "GridCell")
      .def_readonly("n_molecules", &GridCell::n_molecules)
      .def_readonly("learning_rate", &GridCell::learning_rate)
      .def_readonly("mean_mse", &GridCell::mean_mse)
      .def_readonly("fold_mse", &GridCell::fold_mse);
  py::class_<GridSearchResult>(m, "GridSearchResult")
      .def_readonly("best", &GridSearchResult::best)
      .def_readonly("table", &GridSearchResult::table);
  m.def(
      "grid_search",
      [](const Dataset& data, const std::vector<std::size_t>& ms, const std::vector<double>& etas,
         std::size_t folds, const TrainConfig& base) {
        return grid_search(data, ms, etas, folds, base);
      },
      py::arg("data"), py::arg("molecules"), py::arg("learning_rates"), py::arg("folds") = 5,
      py::arg("base") = TrainConfig{}, py::call_guard<py::gil_scoped_release>());

  m.def("sine_demo", &sine_demo);
  m.def("sinusoid_series", &sinusoid_series, py::arg("length"), py::arg("period") = 25.0,
        py::arg("amplitude") = 1.0, py::arg("offset") = 3.0);

  m.def("load_csv", &load_csv, py::arg("path"), py::arg("features"), py::arg("target"));
  m.def("load_series", &load_series, py::arg("path"), py::arg("column"));

  py::class_<Scaler>(m, "Scaler")
      .def_readonly("means", &Scaler::means)
      .def_readonly("stds", &Scaler::stds)
      .def_readonly("column_names", &Scaler::column_names);
  m.def(
      "fit_scaler",
      [](const Dataset& data, bool unit_scale_constants) {
        return fit_scaler(data, unit_scale_constants ? ConstantColumns::UnitScale
                                                     : ConstantColumns::Reject);
      },
      py::arg("data"), py::arg("unit_scale_constants") = false);
  m.def("apply_scaler", py::overload_cast<const Scaler&, const Dataset&>(&apply_scaler));
  m.def(
      "invert_scaler",
      [](const Scaler& scaler, const std::vector<double>& values, const std::string& column) {
        return invert_scaler(scaler, values, column);
      },
      py::arg("scaler"), py::arg("values"), py::arg("column"));
  m.def(
      "split",
      [](const Dataset& data, double fraction, std::uint64_t seed, const std::string& mode) {
        return split(data, fraction, seed, split_mode(mode));
      },
      py::arg("data"), py::arg("train_fraction"), py::arg("seed") = 123,
      py::arg("mode") = "random");

  py::class_<ForecastModel>(m, "ForecastModel")
      .def_readonly("compound", &ForecastModel::compound)
      .def_readonly("x_scaler", &ForecastModel::x_scaler)
      .def_readonly("y_scaler", &ForecastModel::y_scaler)
      .def_property_readonly("window", [](const ForecastModel& f) { return f.window_spec.window; })
      .def("predict_one_step", [](const ForecastModel& f, const std::vector<double>& last) {
        return predict_one_step(f, last);
      });
  py::class_<ForecastTraining>(m, "ForecastTraining")
      .def_readonly("model", &ForecastTraining::model)
      .def_readonly("report", &ForecastTraining::report)
      .def_readonly("train_windows", &ForecastTraining::train_windows)
      .def_readonly("train_predictions", &ForecastTraining::train_predictions)
      .def_readonly("train_mse", &ForecastTraining::train_mse);
  py::class_<RollingEvaluation>(m, "RollingEvaluation")
      .def_readonly("predictions", &RollingEvaluation::predictions)
      .def_readonly("actual", &RollingEvaluation::actual)
      .def_readonly("mse", &RollingEvaluation::mse)
      .def_readonly("persistence_mse", &RollingEvaluation::persistence_mse);
  py::class_<ForecastRun>(m, "ForecastRun")
      .def_readonly("training", &ForecastRun::training)
      .def_readonly("test", &ForecastRun::test)
      .def_readonly("first_test_index", &ForecastRun::first_test_index);
  m.def(
      "run_forecast",
      [](const std::vector<double>& series, double split_fraction, std::size_t window,
         const TrainConfig& config) {
        return run_forecast(series, split_fraction, WindowSpec{window}, config);
      },
      py::arg("series"), py::arg("split_fraction") = 0.7, py::arg("window") = 3,
      py::arg("config") = TrainConfig{}, py::call_guard<py::gil_scoped_release>());

  m.def("summary_text", &summary_text);
  m.def("export_dot", &export_dot);
  m.def("export_structure_json",
        [](const CompoundModel& model) { return export_structure(model).dump(); });

  m.def("serialize_model", py::overload_cast<const CompoundModel&>(&serialize_model));
  m.def("serialize_model", py::overload_cast<const ForecastModel&>(&serialize_model));
  m.def("parse_model", [](const std::string& text) { return parse_model(text); });
  m.def("save_model",
        py::overload_cast<const CompoundModel&, const std::filesystem::path&>(&save_model));
  m.def("save_model",
        py::overload_cast<const ForecastModel&, const std::filesystem::path&>(&save_model));
  m.def("load_model", &load_model);
}
