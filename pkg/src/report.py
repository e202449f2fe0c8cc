"""Check reports: one verdict per clause, first failing witness, exact values as strings."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from sympy.polys.domains import QQ

from .linalg.matrix import Matrix
from .linalg.rational import format_rational

logger = logging.getLogger(__name__)

_GREEN = "\033[32m"
_RED = "\033[31m"
_DIM = "\033[2m"
_RESET = "\033[0m"


def plain(value: Any) -> Any:
    """Convert rationals, matrices and tuples into JSON-ready values (rationals as strings)."""
    if isinstance(value, QQ.dtype):
        return format_rational(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Matrix):
        return value.to_strings()
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return str(value)


@dataclass
class Clause:
    """Verdict on one identity of a definition."""

    name: str
    passed: bool
    witness: Any = None
    detail: Optional[str] = None
    informative: bool = False
    violations: int = 0

    def to_document(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.informative:
            document["informative"] = True
        if self.witness is not None:
            document["witness"] = self.witness
        if self.detail:
            document["detail"] = self.detail
        if self.violations:
            document["violations"] = self.violations
        return document

    @classmethod
    def from_document(cls, document: Dict[str, Any]) -> "Clause":
        return cls(
            name=document["name"],
            passed=bool(document["passed"]),
            witness=document.get("witness"),
            detail=document.get("detail"),
            informative=bool(document.get("informative", False)),
            violations=int(document.get("violations", 0)),
        )


@dataclass
class CheckReport:
    """
    Ordered list of clause verdicts plus recorded values.

    Informative clauses are reported but never affect ``passed``.
    """

    subject: str
    clauses: List[Clause] = field(default_factory=list)
    values: Dict[str, Any] = field(default_factory=dict)

    def expect(
        self,
        name: str,
        passed: bool,
        witness: Any = None,
        detail: Optional[str] = None,
        violations: int = 0,
    ) -> bool:
        """
        Record a mandatory clause.

        Args:
            name: Identity being checked
            passed: Verdict
            witness: First failing input (ignored when passed)
            detail: Short human explanation
            violations: Number of failing instances, when counted

        Returns:
            The verdict, so checks can be chained
        """
        clause = Clause(
            name=name,
            passed=bool(passed),
            witness=None if passed else plain(witness),
            detail=detail,
            violations=0 if passed else violations,
        )
        self.clauses.append(clause)
        if not passed:
            logger.warning(f"{self.subject}: {name} failed (witness {clause.witness})")
        return bool(passed)

    def inform(self, name: str, passed: bool, witness: Any = None, detail: Optional[str] = None) -> bool:
        self.clauses.append(
            Clause(name=name, passed=bool(passed), witness=None if passed else plain(witness), detail=detail, informative=True)
        )
        return bool(passed)

    def record(self, key: str, value: Any) -> None:
        self.values[key] = plain(value)

    def extend(self, other: "CheckReport", prefix: Optional[str] = None) -> bool:
        """Append the clauses and values of another report, optionally prefixing their names."""
        label = f"{prefix}: " if prefix else ""
        for clause in other.clauses:
            self.clauses.append(
                Clause(
                    name=f"{label}{clause.name}",
                    passed=clause.passed,
                    witness=clause.witness,
                    detail=clause.detail,
                    informative=clause.informative,
                    violations=clause.violations,
                )
            )
        for key, value in other.values.items():
            self.values[f"{label}{key}"] = value
        return other.passed

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses if not c.informative)

    def failures(self) -> List[Clause]:
        return [c for c in self.clauses if not c.passed and not c.informative]

    def clause(self, name: str) -> Clause:
        for c in self.clauses:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_document(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "clauses": [c.to_document() for c in self.clauses],
            "values": dict(self.values),
        }

    @classmethod
    def from_document(cls, document: Dict[str, Any]) -> "CheckReport":
        return cls(
            subject=document["subject"],
            clauses=[Clause.from_document(c) for c in document.get("clauses", [])],
            values=dict(document.get("values", {})),
        )

    def to_table(self, color: bool = False) -> str:
        """Human-readable rendering."""

        def paint(text: str, code: str) -> str:
            return f"{code}{text}{_RESET}" if color else text

        verdict = paint("PASS", _GREEN) if self.passed else paint("FAIL", _RED)
        lines = [f"{self.subject}: {verdict}"]
        width = max((len(c.name) for c in self.clauses), default=0)
        for c in self.clauses:
            mark = "ok" if c.passed else "FAILED"
            if c.informative:
                mark = paint(f"[info] {'yes' if c.passed else 'no'}", _DIM)
            elif c.passed:
                mark = paint(mark, _GREEN)
            else:
                mark = paint(mark, _RED)
            line = f"  {c.name.ljust(width)}  {mark}"
            if not c.passed and c.witness is not None:
                line += f"  witness={c.witness}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        for key, value in self.values.items():
            lines.append(f"  {key} = {value}")
        return "\n".join(lines)


@dataclass
class MorphismReport(CheckReport):
    """Report of a morphism check; ``kind`` names the checked definition."""

    kind: str = "strict"

    def to_document(self) -> Dict[str, Any]:
        document = super().to_document()
        document["kind"] = self.kind
        return document

    @classmethod
    def from_document(cls, document: Dict[str, Any]) -> "MorphismReport":
        base = CheckReport.from_document(document)
        return cls(subject=base.subject, clauses=base.clauses, values=base.values, kind=document.get("kind", "strict"))
