"""
Source problems of the hardness constructions: Label Cover, 3-SAT and Set Cover.
"""

from typing import Dict, FrozenSet, List, Tuple

from pydantic import Field, field_validator, model_validator

from .base import BaseRobustModel


class LabelCoverEdge(BaseRobustModel):
    """Edge (v, w) of the bipartite graph with its admissible label pairs N_{v,w}."""

    v: int = Field(..., ge=0)
    w: int = Field(..., ge=0)
    pairs: Tuple[Tuple[int, int], ...]

    @field_validator("pairs", mode="before")
    @classmethod
    def _sort_pairs(cls, value):
        return tuple(sorted({(int(a), int(b)) for a, b in value}))


class LabelCoverInstance(BaseRobustModel):
    """Bipartite Label Cover instance (V, W, E) with label bound N."""

    num_left: int = Field(..., ge=1, description="|V|")
    num_right: int = Field(..., ge=1, description="|W|")
    num_labels: int = Field(..., ge=1, description="Label bound N")
    edges: Tuple[LabelCoverEdge, ...]

    @model_validator(mode="after")
    def _check_instance(self) -> "LabelCoverInstance":
        seen = set()
        for k, edge in enumerate(self.edges):
            if edge.v >= self.num_left or edge.w >= self.num_right:
                raise ValueError(f"edges[{k}] endpoint out of range")
            if (edge.v, edge.w) in seen:
                raise ValueError(f"edges[{k}] duplicates ({edge.v}, {edge.w})")
            seen.add((edge.v, edge.w))
            if not edge.pairs:
                raise ValueError(f"edges[{k}] has an empty relation")
            for a, b in edge.pairs:
                if not (1 <= a <= self.num_labels and 1 <= b <= self.num_labels):
                    raise ValueError(f"edges[{k}] pair ({a}, {b}) outside 1..{self.num_labels}")
        return self

    def get_left_components(self, v: int) -> List[int]:
        """Indices of Label Cover edges incident to left vertex v."""
        return [k for k, e in enumerate(self.edges) if e.v == v]

    def get_right_components(self, w: int) -> List[int]:
        """Indices of Label Cover edges incident to right vertex w."""
        return [k for k, e in enumerate(self.edges) if e.w == w]


class Labeling(BaseRobustModel):
    """Label sets for every vertex of a Label Cover instance."""

    left: Dict[int, FrozenSet[int]] = Field(default_factory=dict)
    right: Dict[int, FrozenSet[int]] = Field(default_factory=dict)

    @property
    def value(self) -> int:
        """Largest label set over all vertices."""
        sizes = [len(s) for s in self.left.values()] + [len(s) for s in self.right.values()]
        return max(sizes, default=0)


class CnfFormula(BaseRobustModel):
    """3-CNF formula; literals are signed 1-based variable indices."""

    num_variables: int = Field(..., ge=1)
    clauses: Tuple[Tuple[int, int, int], ...]

    @field_validator("clauses", mode="before")
    @classmethod
    def _coerce_clauses(cls, value):
        return tuple(tuple(int(l) for l in clause) for clause in value)

    @model_validator(mode="after")
    def _check_formula(self) -> "CnfFormula":
        if not self.clauses:
            raise ValueError("formula has no clauses")
        for k, clause in enumerate(self.clauses):
            if len(set(clause)) != 3:
                raise ValueError(f"clause {k} does not have 3 distinct literals")
            for literal in clause:
                if literal == 0 or abs(literal) > self.num_variables:
                    raise ValueError(f"clause {k} literal {literal} out of range")
        literals = {l for clause in self.clauses for l in clause}
        for x in range(1, self.num_variables + 1):
            if x not in literals or -x not in literals:
                raise ValueError(f"variable {x} must occur both positively and negatively")
        return self

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def is_satisfied_by(self, assignment: Dict[int, bool]) -> bool:
        """Check whether every clause has a true literal."""
        return all(
            any(assignment.get(abs(l), False) == (l > 0) for l in clause)
            for clause in self.clauses
        )


class SetCoverInstance(BaseRobustModel):
    """Ground set {0..n-1} and subsets U_0..U_{m-1}."""

    num_elements: int = Field(..., ge=1)
    subsets: Tuple[FrozenSet[int], ...]

    @field_validator("subsets", mode="before")
    @classmethod
    def _coerce_subsets(cls, value):
        return tuple(frozenset(int(x) for x in s) for s in value)

    @model_validator(mode="after")
    def _check_cover(self) -> "SetCoverInstance":
        if not self.subsets:
            raise ValueError("at least one subset is required")
        union = set()
        for k, subset in enumerate(self.subsets):
            if any(x < 0 or x >= self.num_elements for x in subset):
                raise ValueError(f"subsets[{k}] has an element outside the ground set")
            union |= subset
        if len(union) != self.num_elements:
            raise ValueError("subsets do not cover the ground set")
        return self

    @property
    def num_subsets(self) -> int:
        return len(self.subsets)

    def covers(self, indices) -> bool:
        """Check whether a subcollection covers the ground set."""
        covered = set()
        for i in indices:
            covered |= self.subsets[i]
        return len(covered) == self.num_elements
