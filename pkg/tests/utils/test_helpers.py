"""
tests/utils/test_helpers.py

This file contains helper functions that are used across multiple tests.
These functions are meant to simplify common testing tasks, such as:

1. Loading the YAML case table of a test (`load_config`).
2. Marking slow rows so they only run with --run-large (`cases`).
3. Printing input and output for easier debugging (`print_result`).
4. Building small exact objects from YAML rows (`to_matrix`, `to_vector`).
"""
import json

import pytest
import yaml

from models.linalg import Field, Matrix
from tests.scripts.test_config_generator import generate_config


def load_config(test_path):
    """
    Load the case table of a test, generating it from its template on first use.

    Args:
        test_path (str): `__file__` of the test module.
    """
    with open(generate_config(test_path), encoding="utf-8") as f:
        return yaml.safe_load(f)


def cases(rows):
    """Wrap rows flagged `large: true` so the --run-large switch controls them."""
    return [
        pytest.param(row, marks=pytest.mark.large) if row.get("large") else row
        for row in rows
    ]


def print_result(input_data, output, print_results):
    """
    Print the input data and the computed output if the --print-results flag is set.

    Args:
        input_data (dict): Input of the computation.
        output: Computed result (anything JSON can render, else its repr).
        print_results (bool): Flag indicating whether to print results.
    """
    if print_results:
        print("\nInput Data:")
        print(json.dumps(input_data, indent=4, sort_keys=True, default=repr, ensure_ascii=False))
        print("Result:")
        print(json.dumps(output, indent=4, sort_keys=True, default=repr, ensure_ascii=False))


def to_matrix(field_label, rows):
    return Matrix.from_rows(Field.parse(field_label), rows)


def to_vector(field_label, values):
    field = Field.parse(field_label)
    return [field.element(v) for v in values]
