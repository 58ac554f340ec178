"""Dataset ingestion and synthetic data generation.

File format: delimited text with a header row, one sample per row, one
label column named in the header. Internally samples become the columns
of the feature matrix.
"""

import csv
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ConfigurationError, SchemaError, ValidationError


@dataclass
class Dataset:
    matrix: np.ndarray           # d x n, columns are samples
    labels: list
    feature_names: Optional[list] = None
    sample_ids: Optional[list] = None

    @property
    def n_samples(self):
        return self.matrix.shape[1]

    @property
    def n_features(self):
        return self.matrix.shape[0]


def load_dataset(path, label_column, delimiter=","):
    """Read a delimited text file into a Dataset.

    Rejects negative or non-numeric feature cells with their row/column
    coordinates; never returns a partial dataset.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh, delimiter=delimiter)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file, header row required") from None
        header = [h.strip() for h in header]
        if label_column not in header:
            raise SchemaError(f"{path}: label column {label_column!r} not in header {header}")
        label_idx = header.index(label_column)
        feature_names = [h for i, h in enumerate(header) if i != label_idx]

        rows, labels = [], []
        for r, row in enumerate(reader, start=2):  # 1-based file line numbers
            if not row:
                continue
            if len(row) != len(header):
                raise SchemaError(f"{path}: line {r} has {len(row)} cells, expected {len(header)}")
            labels.append(row[label_idx].strip())
            feats = []
            for c, cell in enumerate(row):
                if c == label_idx:
                    continue
                try:
                    value = float(cell)
                except ValueError:
                    raise ValidationError(
                        f"{path}: line {r}, column {header[c]!r}: non-numeric cell {cell!r}") from None
                if value < 0:
                    raise ValidationError(
                        f"{path}: line {r}, column {header[c]!r}: negative feature {value}")
                feats.append(value)
            rows.append(feats)

    if not rows:
        raise SchemaError(f"{path}: no data rows")
    matrix = np.asarray(rows, dtype=np.float64).T
    return Dataset(matrix=matrix, labels=labels, feature_names=feature_names)


def save_dataset(dataset, path, label_column="label", delimiter=","):
    """Write a Dataset in the same row-per-sample format load_dataset reads."""
    names = dataset.feature_names or [f"f{i}" for i in range(dataset.n_features)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, delimiter=delimiter)
        writer.writerow(list(names) + [label_column])
        for j in range(dataset.n_samples):
            writer.writerow([repr(float(v)) for v in dataset.matrix[:, j]] + [dataset.labels[j]])


def generate_synthetic(classes, per_class, dim, separation, seed):
    """Gaussian blobs around nonnegative class centers, clipped at zero.

    Center magnitudes scale with `separation`; separation 0 collapses all
    centers to the origin. Deterministic per seed.
    """
    if classes < 1 or per_class < 1 or dim < 1:
        raise ConfigurationError("classes, per_class and dim must all be >= 1")
    if separation < 0:
        raise ConfigurationError(f"separation must be >= 0, got {separation}")
    rng = np.random.default_rng(seed)
    centers = separation * rng.uniform(0.0, 1.0, size=(classes, dim))
    cols, labels = [], []
    for c in range(classes):
        samples = centers[c][:, None] + rng.normal(0.0, 1.0, size=(dim, per_class))
        cols.append(np.clip(samples, 0.0, None))
        labels.extend([f"c{c}"] * per_class)
    return Dataset(matrix=np.hstack(cols), labels=labels,
                   feature_names=[f"f{i}" for i in range(dim)])


def stratified_split(labels, test_fraction, seed):
    """Deterministic per-class split; returns (train_idx, test_idx).

    Each class contributes round(count * test_fraction) test samples,
    with at least 1 train and 1 test sample required per class.
    """
    if not (0 < test_fraction < 1):
        raise ConfigurationError(f"test_fraction must be in (0, 1), got {test_fraction}")
    rng = np.random.default_rng(seed)
    by_class = {}
    for i, lbl in enumerate(labels):
        by_class.setdefault(lbl, []).append(i)
    train_idx, test_idx = [], []
    for lbl in sorted(by_class, key=str):
        idx = np.array(by_class[lbl])
        rng.shuffle(idx)
        n_test = int(round(len(idx) * test_fraction))
        if n_test < 1 or n_test >= len(idx):
            raise ConfigurationError(
                f"class {lbl!r} with {len(idx)} samples cannot be split at fraction {test_fraction}")
        test_idx.extend(idx[:n_test].tolist())
        train_idx.extend(idx[n_test:].tolist())
    return sorted(train_idx), sorted(test_idx)
