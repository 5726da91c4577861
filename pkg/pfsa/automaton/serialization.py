"""
serialization.py

YAML documents and DOT export for PFSA.

Key Functions:
- machine_to_dict / machine_from_dict: Plain-data form of a machine (arc table rows).
- save_machine_yaml / load_machine_yaml / dump_machine_yaml: YAML persistence.
- to_dot: Graphviz DOT text; arcs labeled "symbol/count", delimiter arcs dashed.
"""

from typing import Any, Dict

import yaml

from pfsa.automaton.dataset import Alphabet
from pfsa.automaton.machine import Arc, Pfsa
from pfsa.utils.errors import ValidationError
from pfsa.utils.schema_validation import validate_machine_document


def machine_to_dict(machine: Pfsa) -> Dict[str, Any]:
    return {
        "num_states": machine.num_states,
        "alphabet": {
            "tokens": list(machine.alphabet.tokens),
            "delimiter": machine.alphabet.delimiter,
        },
        "arcs": [[state, symbol, arc.dest, arc.count] for (state, symbol), arc in machine.arcs.items()],
    }


def machine_from_dict(data: Dict[str, Any]) -> Pfsa:
    result = validate_machine_document(data)
    if not result:
        raise ValidationError(result.errors)
    alphabet = Alphabet(tuple(data["alphabet"]["tokens"]), data["alphabet"]["delimiter"])
    arcs = {}
    for state, symbol, dest, count in data["arcs"]:
        if (state, symbol) in arcs:
            raise ValidationError([f"duplicate arc ({state}, {symbol!r}): machine must be deterministic"])
        arcs[(state, symbol)] = Arc(dest, count)
    return Pfsa(alphabet, data["num_states"], arcs)


def dump_machine_yaml(machine: Pfsa) -> str:
    return yaml.safe_dump(machine_to_dict(machine), default_flow_style=None, sort_keys=False, allow_unicode=True)


def load_machine_yaml_text(text: str) -> Pfsa:
    """Parse a machine document, or the machine inside an induction result document."""
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ValidationError([f"not a YAML document: {' '.join(str(exc).split())}"]) from None
    if isinstance(data, dict) and "arcs" not in data and "machine" in data:
        data = data["machine"]
    return machine_from_dict(data)


def save_machine_yaml(machine: Pfsa, filepath: str):
    with open(filepath, 'w', encoding='utf-8') as f:
        f.write(dump_machine_yaml(machine))


def load_machine_yaml(filepath: str) -> Pfsa:
    with open(filepath, 'rb') as f:
        raw = f.read()
    try:
        text = raw.decode('utf-8')
    except UnicodeDecodeError:
        raise ValidationError([f"{filepath} is not UTF-8 text"]) from None
    return load_machine_yaml_text(text)


def _dot_quote(text: str) -> str:
    return '"' + text.replace('\\', '\\\\').replace('"', '\\"') + '"'


def to_dot(machine: Pfsa, name: str = "pfsa") -> str:
    lines = [f"digraph {_dot_quote(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    lines.append("  0 [shape=doublecircle];")
    for state in range(1, machine.num_states):
        lines.append(f"  {state};")
    delim = machine.alphabet.delimiter
    for (state, symbol), arc in machine.arcs.items():
        style = ", style=dashed" if symbol == delim else ""
        lines.append(f"  {state} -> {arc.dest} [label={_dot_quote(f'{symbol}/{arc.count}')}{style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
