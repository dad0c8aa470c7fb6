"""Run counters shared by the basis algorithms and the reporting layers."""
from __future__ import annotations

from dataclasses import dataclass, field, replace


STATS_SCHEMA = 1


@dataclass
class RunStats:
    """Counters of one computation, mirroring the benchmark table columns.

    c1/c2 count eliminations by the two ancestor criteria, syz those by the
    syzygy-signature criterion, hd queue entries dropped by Hilbert-driven
    pruning, redz genuine reductions to zero, and chen accepted linear
    coordinate changes. Timing fields are best-effort and may stay None.
    """

    algorithm: str = ""
    input_id: str = ""
    c1: int = 0
    c2: int = 0
    syz: int = 0
    hd: int = 0
    redz: int = 0
    chen: int = 0
    basis_size: int = 0
    max_deg: int = 0
    time_ms: float | None = None
    mem_bytes: int | None = None

    def absorb(self, other):
        """Accumulate another run's counters (sizes come from the caller)."""
        self.c1 += other.c1
        self.c2 += other.c2
        self.syz += other.syz
        self.hd += other.hd
        self.redz += other.redz
        self.chen += other.chen

    def to_json_dict(self):
        return {
            "schema": STATS_SCHEMA,
            "algorithm": self.algorithm,
            "input": self.input_id,
            "c1": self.c1,
            "c2": self.c2,
            "syz": self.syz,
            "hd": self.hd,
            "redz": self.redz,
            "chen": self.chen,
            "basisSize": self.basis_size,
            "maxDeg": self.max_deg,
            "timeMs": self.time_ms,
            "memBytes": self.mem_bytes,
        }

    @classmethod
    def from_json_dict(cls, data):
        if data.get("schema") != STATS_SCHEMA:
            raise ValueError(f"unsupported stats schema {data.get('schema')!r}")
        return cls(
            algorithm=data["algorithm"],
            input_id=data["input"],
            c1=data["c1"],
            c2=data["c2"],
            syz=data["syz"],
            hd=data["hd"],
            redz=data["redz"],
            chen=data["chen"],
            basis_size=data["basisSize"],
            max_deg=data["maxDeg"],
            time_ms=data["timeMs"],
            mem_bytes=data["memBytes"],
        )

    def copy(self):
        return replace(self)
