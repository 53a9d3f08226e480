"""Structured pass/fail reports shared by the CLI and the test suite."""

import json


def _jsonable(value):
    """Coerce numpy scalars and containers to plain JSON-friendly types."""
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "item") and not isinstance(value, (str, bytes)):
        try:
            return value.item()
        except (AttributeError, ValueError):
            pass
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    return value


class VerificationReport:
    """An ordered collection of named checks with a single verdict."""

    def __init__(self, suite, params=None):
        self.suite = suite
        self.params = dict(params or {})
        self.checks = []

    def add(self, name, passed, **details):
        self.checks.append(
            {"name": name, "pass": bool(passed), "details": _jsonable(details)}
        )
        return bool(passed)

    @property
    def passed(self):
        return all(c["pass"] for c in self.checks)

    def to_dict(self):
        return {
            "suite": self.suite,
            "params": _jsonable(self.params),
            "pass": self.passed,
            "checks": self.checks,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render_text(self):
        lines = [f"suite: {self.suite}"]
        if self.params:
            lines.append(
                "params: "
                + ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
            )
        for c in self.checks:
            verdict = "PASS" if c["pass"] else "FAIL"
            summary = ", ".join(
                f"{k}={_brief(v)}" for k, v in c["details"].items()
            )
            lines.append(f"[{verdict}] {c['name']}" + (f"  ({summary})" if summary else ""))
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _brief(v):
    if isinstance(v, float):
        return f"{v:.3e}"
    if isinstance(v, (list, dict)) and len(str(v)) > 60:
        return f"<{type(v).__name__}:{len(v)}>"
    return v
