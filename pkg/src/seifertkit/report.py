"""Pass/fail records for identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["Check", "VerificationReport"]


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: dict[str, str] = field(default_factory=dict)
    note: str = ""


@dataclass
class VerificationReport:
    """Ordered collection of :class:`Check` results.

    A failing check should always carry a witness (both sides of the identity
    that did not hold); :meth:`add` enforces this.
    """

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, note: str = "", **witness) -> Check:
        if not passed and not witness:
            raise ValueError(f"failing check {name!r} needs a witness")
        chk = Check(name, bool(passed), {k: str(v) for k, v in witness.items()}, note)
        self.checks.append(chk)
        return chk

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __bool__(self) -> bool:
        return self.passed

    def lines(self, machine: bool = False) -> list[str]:
        out = []
        for c in self.checks:
            status = "pass" if c.passed else "fail"
            if machine:
                out.append(f"check.{c.name}={status}")
                for k, v in c.witness.items():
                    out.append(f"check.{c.name}.{k}={v}")
            else:
                line = f"[{status.upper()}] {c.name}"
                if c.note:
                    line += f" ({c.note})"
                out.append(line)
                if not c.passed:
                    out.extend(f"    {k}: {v}" for k, v in c.witness.items())
        return out

    def __str__(self) -> str:
        return "\n".join([self.title] + self.lines())
