"""
Verification reports and the suite runner

A suite is a list of Jobs. Each job checks one instance and returns a list of
(check name, expected, got) triples; the runner turns exceptions into failures or
inconclusive entries, runs jobs on a process pool when asked, and aggregates the
results in key order so the report does not depend on scheduling.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from tqdm import tqdm

from core.errors import AslkitError, BadArguments, Inconclusive, SizeCapExceeded
from data.formats import to_json

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INCONCLUSIVE = 2


@dataclass(frozen=True)
class Job:
    key: str                # sort key; unique within a suite
    instance: str           # human-readable serialization of the instance
    func: object            # module-level callable, picklable for worker processes
    args: tuple = ()


@dataclass
class Outcome:
    checks: list = field(default_factory=list)      # (name, expected, got)
    notes: list = field(default_factory=list)

    def expect(self, name, expected, got):
        self.checks.append((name, expected, got))
        return got == expected

    def note(self, text):
        self.notes.append(text)


@dataclass
class VerificationReport:
    suite: str
    config: dict = field(default_factory=dict)
    instances: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def exit_code(self):
        if self.failures:
            return EXIT_COUNTEREXAMPLE
        if self.inconclusive:
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    def add_failure(self, instance, expected, got):
        self.instances += 1
        self.failures.append({"instance": instance, "expected": expected, "got": got})

    def add_inconclusive(self, instance, cap, detail):
        self.instances += 1
        self.inconclusive.append({"instance": instance, "cap": cap, "detail": detail})

    def add_pass(self):
        self.instances += 1
        self.passed += 1

    def check_totals(self):
        return self.passed + len(self.failures) + len(self.inconclusive) == self.instances

    def merge(self, other):
        """Fold a sub-suite into this report"""
        self.instances += other.instances
        self.passed += other.passed
        self.failures.extend(other.failures)
        self.inconclusive.extend(other.inconclusive)
        self.notes.extend(other.notes)
        return self

    def to_json(self):
        return {
            "suite": self.suite,
            "instances": self.instances,
            "passed": self.passed,
            "failures": self.failures,
            "inconclusive": self.inconclusive,
            "notes": self.notes,
            "config": self.config,
            "exit_code": self.exit_code,
        }

    def write(self, path):
        return to_json(self.to_json(), path)

    def summary_line(self):
        return (
            f"{self.suite}: {self.instances} instances, {self.passed} passed, "
            f"{len(self.failures)} failed, {len(self.inconclusive)} inconclusive"
        )


def _jsonable(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = [_jsonable(v) for v in value]
        return sorted(items, key=str) if isinstance(value, (set, frozenset)) else items
    return str(value)


def execute(job):
    """Run one job; never raises for library errors"""
    try:
        outcome = job.func(*job.args)
    except (Inconclusive, SizeCapExceeded) as exc:
        return job.key, "inconclusive", {"cap": exc.cap, "detail": str(exc)}
    except AslkitError as exc:
        return job.key, "error", {"error": type(exc).__name__, "detail": str(exc)}
    bad = [(name, exp, got) for name, exp, got in outcome.checks if exp != got]
    payload = {
        "notes": list(outcome.notes),
        "expected": {name: _jsonable(exp) for name, exp, _ in bad},
        "got": {name: _jsonable(got) for name, _, got in bad},
    }
    return job.key, "fail" if bad else "pass", payload


def run_jobs(suite, jobs, config=None, workers=1, progress=False):
    """Execute jobs, in worker processes when workers > 1, and build the report"""
    report = VerificationReport(suite=suite, config=dict(config or {}))
    by_key = {job.key: job for job in jobs}
    if len(by_key) != len(jobs):
        raise BadArguments(f"{suite}: duplicate job keys")
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(tqdm(pool.map(execute, jobs, chunksize=4), total=len(jobs), disable=not progress, desc=suite))
    else:
        results = [execute(job) for job in tqdm(jobs, disable=not progress, desc=suite)]

    for key, kind, payload in sorted(results, key=lambda r: r[0]):
        instance = by_key[key].instance
        if kind == "inconclusive":
            logger.warning("%s: inconclusive on %s (%s)", suite, key, payload["cap"])
            report.add_inconclusive(instance, payload["cap"], payload["detail"])
            continue
        if kind == "error":
            logger.error("%s: %s on %s: %s", suite, payload["error"], key, payload["detail"])
            report.add_failure(instance, "no error", f"{payload['error']}: {payload['detail']}")
            continue
        report.notes.extend(f"{key}: {n}" for n in payload["notes"])
        if kind == "fail":
            logger.error("%s: counterexample %s", suite, key)
            report.add_failure(instance, payload["expected"], payload["got"])
        else:
            report.add_pass()
    logger.info(report.summary_line())
    return report


def implication_ladder(outcome, vd, shellable, cm, pure):
    """vertex decomposable => shellable => Cohen-Macaulay => pure"""
    outcome.expect("vd => shellable", True, not vd or shellable)
    outcome.expect("shellable => cm", True, not shellable or cm)
    outcome.expect("cm => pure", True, not cm or pure)


def suite_config(caps, field, **params):
    return {"caps": caps.to_dict(), "field": str(field), **params}
