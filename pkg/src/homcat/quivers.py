"""Labeled directed multigraphs (AR quivers) with deterministic DOT/JSON output."""

from __future__ import annotations

from dataclasses import dataclass

from homcat.errors import ValidationError

__all__ = ["Quiver"]


@dataclass(frozen=True)
class Quiver:
    """Vertices carry a label and a dimension; arrows carry multiplicities."""

    vertices: tuple[tuple[str, int], ...]  # (label, dim)
    arrows: tuple[tuple[int, int, int], ...]  # (src index, dst index, multiplicity)

    def __post_init__(self):
        n = len(self.vertices)
        for s, t, m in self.arrows:
            if not (0 <= s < n and 0 <= t < n):
                raise ValidationError(f"arrow ({s},{t}) references a missing vertex")
            if m < 1:
                raise ValidationError(f"arrow ({s},{t}) has multiplicity {m} < 1")

    @property
    def n_arrows(self) -> int:
        return sum(m for _, _, m in self.arrows)

    def to_dot(self, graph_name: str = "quiver") -> str:
        """One node per vertex labeled "name (dim)", one edge per arrow
        repeated by multiplicity, in a fixed order."""
        lines = [f"digraph {graph_name} {{"]
        names = [f"{label} ({dim})" for label, dim in self.vertices]
        for name in names:
            lines.append(f'  "{name}";')
        for s, t, m in sorted(self.arrows):
            for _ in range(m):
                lines.append(f'  "{names[s]}" -> "{names[t]}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "vertices": [{"label": label, "dim": dim} for label, dim in self.vertices],
            "arrows": [
                {"from": self.vertices[s][0], "to": self.vertices[t][0], "multiplicity": m}
                for s, t, m in sorted(self.arrows)
            ],
        }
