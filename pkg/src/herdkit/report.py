"""Check results shared by every validator and by the command line."""

from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, WARN = "pass", "fail", "warn"


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    status: str
    witness: dict | None = None
    detail: str = ""
    section: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        out = {"name": self.name, "anchor": self.anchor, "status": self.status}
        if self.section:
            out["section"] = self.section
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    title: str = ""
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, other) -> Report:
        self.checks.extend(other.checks if isinstance(other, Report) else other)
        if isinstance(other, Report):
            for k, v in other.data.items():
                self.data.setdefault(k, v)
        return self

    def passed_check(self, name, anchor="", detail="", witness=None) -> Check:
        return self.add(Check(name, anchor, PASS, witness, detail))

    def failed_check(self, name, anchor="", detail="", witness=None) -> Check:
        return self.add(Check(name, anchor, FAIL, witness, detail))

    def warn(self, name, anchor="", detail="", witness=None) -> Check:
        return self.add(Check(name, anchor, WARN, witness, detail))

    def expect(self, name, anchor, ok: bool, detail="", witness=None) -> Check:
        return self.add(Check(name, anchor, PASS if ok else FAIL, None if ok else witness, detail))

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __iter__(self):
        return iter(self.checks)

    def __len__(self):
        return len(self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self):
        return [c.name for c in self.checks]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "data": self.data,
        }


def column_witness(lhs, rhs, column: int) -> dict:
    f = lhs.field
    return {
        "basis_index": column,
        "lhs": [f.fmt(x) for x in lhs.col(column)],
        "rhs": [f.fmt(x) for x in rhs.col(column)],
    }


def compare(name: str, anchor: str, lhs, rhs, detail: str = "") -> Check:
    """Exact comparison of two maps, witnessing the first differing basis vector."""
    if lhs.shape != rhs.shape:
        return Check(name, anchor, FAIL, {"lhs_shape": list(lhs.shape), "rhs_shape": list(rhs.shape)},
                     detail or "shape mismatch")
    for j in range(lhs.ncols):
        if lhs.col(j) != rhs.col(j):
            return Check(name, anchor, FAIL, column_witness(lhs, rhs, j), detail)
    return Check(name, anchor, PASS, None, detail)
