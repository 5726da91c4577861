"""
schema_validation.py

YAML schema validation for pfsa documents.
Schemas live in configs/yaml/schema/ (machine.yaml, result.yaml).

Key Functions:
- load_yaml_schema: Load a schema file from the schema directory.
- validate_with_yaml_schema: Required-key and type check of a document against a schema.
- validate_machine_document: Schema check plus arc-row checks for machine documents.
- validate_result_document: Schema check for induction result documents.
"""

import os
from typing import Any, Dict, List, Optional

import yaml

# Path to the root schema directory
SCHEMA_ROOT = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(__file__))), 'configs', 'yaml', 'schema')

_TYPE_CHECKS = {
    'string': lambda v: isinstance(v, str),
    'integer': lambda v: isinstance(v, int) and not isinstance(v, bool),
    'number': lambda v: isinstance(v, (int, float)) and not isinstance(v, bool),
    'boolean': lambda v: isinstance(v, bool),
    'array': lambda v: isinstance(v, list),
    'object': lambda v: isinstance(v, dict),
}

_schema_cache: Dict[str, dict] = {}


def load_yaml_schema(schema_rel_path: str) -> dict:
    """
    Load a YAML schema from the schema directory.
    Args:
        schema_rel_path (str): Relative path to the schema file (e.g. 'machine.yaml')
    Returns:
        dict: Parsed YAML schema
    """
    if schema_rel_path in _schema_cache:
        return _schema_cache[schema_rel_path]
    schema_path = os.path.join(SCHEMA_ROOT, schema_rel_path)
    if not os.path.exists(schema_path):
        raise FileNotFoundError(f"Schema file not found: {schema_path}")
    with open(schema_path, 'r', encoding='utf-8') as f:
        schema = yaml.safe_load(f)
    _schema_cache[schema_rel_path] = schema
    return schema


class ValidationResult:
    """Holds the result of a schema validation."""

    def __init__(self, is_valid: bool = True, errors: Optional[List[str]] = None):
        self.is_valid = is_valid
        self.errors = errors or []

    def add_error(self, error: str):
        """Add an error message to the result."""
        self.is_valid = False
        self.errors.append(error)

    def __bool__(self) -> bool:
        return self.is_valid

    def __repr__(self) -> str:
        if self.is_valid:
            return "ValidationResult(valid=True)"
        return f"ValidationResult(valid=False, errors={self.errors})"


def validate_with_yaml_schema(data: Any, schema: dict, path: str = "document",
                              result: Optional[ValidationResult] = None) -> ValidationResult:
    """
    Validate data against a loaded YAML schema node (required keys and types, recursively).
    Args:
        data: Data to validate
        schema (dict): Schema node with 'type', 'required', 'properties', 'items'
        path (str): Location used in error messages
    Returns:
        ValidationResult with is_valid flag and list of errors.
    """
    result = result if result is not None else ValidationResult()
    expected_type = schema.get('type')
    if expected_type and not _TYPE_CHECKS.get(expected_type, lambda v: True)(data):
        result.add_error(f"{path}: expected {expected_type}, got {type(data).__name__}")
        return result
    if isinstance(data, dict):
        for field in schema.get('required', []):
            if field not in data:
                result.add_error(f"{path}: missing required field '{field}'")
        for key, prop in schema.get('properties', {}).items():
            if key in data and isinstance(prop, dict):
                validate_with_yaml_schema(data[key], prop, f"{path}.{key}", result)
    if isinstance(data, list) and isinstance(schema.get('items'), dict):
        for i, item in enumerate(data):
            validate_with_yaml_schema(item, schema['items'], f"{path}[{i}]", result)
    return result


def validate_machine_document(data: Any) -> ValidationResult:
    """
    Validate a machine document, including the shape of every arc row.
    """
    result = validate_with_yaml_schema(data, load_yaml_schema('machine.yaml')['machine'], "machine")
    if not result:
        return result
    for i, row in enumerate(data['arcs']):
        if len(row) != 4:
            result.add_error(f"machine.arcs[{i}]: expected [state, symbol, dest, count], got {row}")
            continue
        state, symbol, dest, count = row
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (state, dest, count)):
            result.add_error(f"machine.arcs[{i}]: state, dest and count must be integers")
        if not isinstance(symbol, str):
            result.add_error(f"machine.arcs[{i}]: symbol must be a string")
    return result


def validate_result_document(data: Any) -> ValidationResult:
    """
    Validate an induction result document and its embedded machine.
    """
    result = validate_with_yaml_schema(data, load_yaml_schema('result.yaml')['result'], "result")
    if result and 'machine' in data:
        machine_result = validate_machine_document(data['machine'])
        for error in machine_result.errors:
            result.add_error(error)
    return result
