"""Character n-gram language identification.

A multiclass linear classifier over hashed character n-grams: bag-of-ngram
features are mean-pooled through an embedding table and scored by a linear
output layer with softmax. Training-data hygiene filters (character
histograms, script ranges) live in :mod:`corpusforge.lid.filters`.
"""

from corpusforge.lid.featurizer import FeaturizerConfig, bucket_id, char_ngrams, ngram_features
from corpusforge.lid.filters import (
    CharHistogram,
    accepted_char_fraction,
    char_histogram_filter,
    fit_char_histogram,
    script_filter,
    script_fraction,
)
from corpusforge.lid.model import (
    LidModel,
    Prediction,
    apply_threshold,
    default_thresholds,
    explain,
    load_model,
    predict,
    save_model,
    score_histogram,
)
from corpusforge.lid.train import TrainConfig, temperature_weights, train

__all__ = [
    "FeaturizerConfig",
    "bucket_id",
    "char_ngrams",
    "ngram_features",
    "CharHistogram",
    "accepted_char_fraction",
    "char_histogram_filter",
    "fit_char_histogram",
    "script_filter",
    "script_fraction",
    "LidModel",
    "Prediction",
    "apply_threshold",
    "default_thresholds",
    "explain",
    "load_model",
    "predict",
    "save_model",
    "score_histogram",
    "TrainConfig",
    "temperature_weights",
    "train",
]
