"""
DIMACS CNF reader and writer.
"""

from typing import List

from pydantic import ValidationError

from ..errors import SchemaError
from ..models.problems import CnfFormula


def read_dimacs(text: str) -> CnfFormula:
    """
    Parse a DIMACS CNF document into a 3-CNF formula.

    Raises:
        SchemaError: on a malformed header, a clause not terminated by 0,
            or a formula violating the 3-CNF invariants
    """
    num_vars = None
    num_clauses = None
    tokens: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise SchemaError(f"line {lineno}", f"bad problem line '{line}'")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError as e:
                raise SchemaError(f"line {lineno}", f"bad problem line '{line}'") from e
            continue
        if num_vars is None:
            raise SchemaError(f"line {lineno}", "clause before the problem line")
        try:
            tokens.extend(int(tok) for tok in line.split())
        except ValueError as e:
            raise SchemaError(f"line {lineno}", f"non-integer literal in '{line}'") from e

    if num_vars is None:
        raise SchemaError("line 0", "missing problem line")

    clauses, current = [], []
    for tok in tokens:
        if tok == 0:
            clauses.append(current)
            current = []
        else:
            current.append(tok)
    if current:
        raise SchemaError("eof", "last clause is not terminated by 0")
    if len(clauses) != num_clauses:
        raise SchemaError("header", f"declares {num_clauses} clauses, found {len(clauses)}")

    try:
        return CnfFormula(num_variables=num_vars, clauses=clauses)
    except ValidationError as e:
        raise SchemaError("formula", e.errors()[0]["msg"]) from e


def write_dimacs(phi: CnfFormula) -> str:
    """Serialise a formula as DIMACS CNF."""
    lines = [f"p cnf {phi.num_variables} {phi.num_clauses}"]
    lines += [" ".join(str(l) for l in clause) + " 0" for clause in phi.clauses]
    return "\n".join(lines) + "\n"
