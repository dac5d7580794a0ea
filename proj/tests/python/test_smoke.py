import math

import numpy as np
import pytest

import ahn


def quick_config(**fields):
    config = ahn.TrainConfig()
    config.max_iterations = 60
    for name, value in fields.items():
        setattr(config, name, value)
    return config


def test_sine_demo_trains_and_predicts():
    data = ahn.sine_demo()
    assert data.rows == 1501
    result = ahn.train(data, quick_config())
    model = result.model
    assert len(model) == 5
    assert [m.hydrogen_count for m in model.molecules] == [3, 2, 2, 2, 3]
    assert model.overall_error <= 0.1
    assert result.report.iterations_run <= 60
    predicted = model.predict(data.x)
    assert predicted.shape == (1501,)
    assert predicted[10] == model(list(data.x[10]))
    mse = float(np.mean((predicted - data.y) ** 2))
    assert math.isclose(mse, ahn.overall_error(model, data), rel_tol=1e-12)


def test_fit_helper_recovers_a_quadratic():
    x = np.linspace(-2, 2, 80).reshape(-1, 1)
    y = 1 + 2 * x[:, 0] + 3 * x[:, 0] ** 2
    result = ahn.fit(x, y, n_molecules=2, learning_rate=0.1, max_iterations=30)
    assert np.max(np.abs(result.model.predict(x) - y)) <= 1e-8
    with pytest.raises(TypeError):
        ahn.fit(x, y, colour="blue")


def test_round_trip_and_exports(tmp_path):
    model = ahn.train(ahn.sine_demo(), quick_config(n_molecules=3)).model
    path = tmp_path / "model.json"
    ahn.save_model(model, path)
    loaded = ahn.load_model(path)
    assert ahn.serialize_model(loaded) == ahn.serialize_model(model)
    assert ahn.summary_text(loaded) == ahn.summary_text(model)
    assert ahn.export_dot(model).startswith("graph ahn {")
    structure = ahn.export_structure(model)
    assert sum(node["type"] == "hydrogen" for node in structure["nodes"]) == 8


def test_errors_map_to_python_exceptions(tmp_path):
    with pytest.raises(ahn.InputError):
        ahn.train(ahn.sine_demo(), quick_config(n_molecules=1))
    bad = tmp_path / "bad.json"
    bad.write_text('{"format_version": "7.0", "kind": "compound", "payload": {}}')
    with pytest.raises(ahn.VersionMismatchError):
        ahn.load_model(bad)
    with pytest.raises(ahn.AhnError):
        ahn.load_model(tmp_path / "missing.json")


def test_forecast_beats_persistence():
    config = quick_config(n_molecules=10, learning_rate=0.1, max_iterations=200)
    run = ahn.run_forecast(ahn.sinusoid_series(221), 0.7, 3, config)
    assert run.first_test_index == 155
    assert len(run.test.predictions) == 66
    assert run.test.mse < run.test.persistence_mse


def test_scaler_and_split():
    rng = np.random.default_rng(0)
    data = ahn.Dataset(rng.normal(size=(50, 2)), rng.normal(size=50), ["a", "b"], "t")
    train, test = ahn.split(data, 0.7, seed=5)
    assert (train.rows, test.rows) == (35, 15)
    scaler = ahn.fit_scaler(train)
    scaled = ahn.apply_scaler(scaler, train)
    back = ahn.invert_scaler(scaler, list(scaled.y), "t")
    assert np.max(np.abs(np.array(back) - train.y)) <= 1e-12


def test_grid_search_table():
    result = ahn.grid_search(ahn.sine_demo(), [2, 3], [0.01, 0.1], folds=3,
                             base=quick_config(max_iterations=20))
    assert len(result.table) == 4
    assert result.best.n_molecules in (2, 3)
