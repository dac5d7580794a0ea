"""Artificial Hydrocarbon Networks: piecewise-polynomial regression.

Thin Python layer over the compiled ``ahn._core`` extension.
"""

import json

from ._core import (
    AhnError,
    CompoundModel,
    Dataset,
    EmptySubsetError,
    ForecastModel,
    InputError,
    IoError,
    NumericError,
    SchemaError,
    TrainConfig,
    TrainingError,
    VersionMismatchError,
    apply_scaler,
    export_dot,
    fit_scaler,
    grid_search,
    invert_scaler,
    load_csv,
    load_model,
    load_series,
    overall_error,
    parse_model,
    partition,
    run_forecast,
    saturated_chain,
    save_model,
    serialize_model,
    sine_demo,
    sinusoid_series,
    split,
    summary_text,
    train,
    update_centers,
)
from ._core import export_structure_json as _export_structure_json

__version__ = "0.1.0"


def export_structure(model):
    """Nodes and edges of the compound as plain dicts."""
    return json.loads(_export_structure_json(model))


def fit(x, y, n_molecules=5, learning_rate=0.01, max_iterations=2000, seed=123, **options):
    """Train a compound on arrays; extra keyword arguments set TrainConfig fields."""
    config = TrainConfig()
    config.n_molecules = n_molecules
    config.learning_rate = learning_rate
    config.max_iterations = max_iterations
    config.seed = seed
    for name, value in options.items():
        if not hasattr(config, name):
            raise TypeError(f"unknown training option {name!r}")
        setattr(config, name, value)
    return train(Dataset(x, y), config)
