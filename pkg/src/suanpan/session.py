"""Task definitions, attempt evaluation, and session persistence.

Three task kinds: set a number on the abacus, read a printed inscription,
or set a number and say it in a given language. The service never trusts
client-side results: every attempt's trace is replayed and classified
here, and persisted sessions are re-evaluated from their traces on load
(stored reports are a cache, never authoritative).

Sessions append to one JSON-lines file each under the data directory;
writes are serialized per session, reads are free.
"""

from __future__ import annotations

import enum
import json
import threading
import time
import uuid
from dataclasses import dataclass, field
from pathlib import Path

from .classify import TechniqueReport, classify
from .core import DEFAULT_ROD_COUNT, AbacusConfig, read_value
from .errors import Overflow
from .gestures import IconSeeNumber, Register, Trace, gesture_count
from .verbal import Language, parse_words


class TaskKind(enum.Enum):
    SET_NUMBER = "set_number"
    READ_NUMBER = "read_number"
    SET_AND_SAY = "set_and_say"


@dataclass(frozen=True)
class Task:
    kind: TaskKind
    register: Register = Register.VIRTUAL_ABACUS
    rod_count: int = DEFAULT_ROD_COUNT
    target: int | None = None  # SET_NUMBER and SET_AND_SAY
    printed: AbacusConfig | None = None  # READ_NUMBER
    language: Language | None = None  # SET_AND_SAY only

    def __post_init__(self):
        if self.kind is TaskKind.READ_NUMBER:
            if self.printed is None:
                raise ValueError("a read task needs the printed inscription")
        elif self.target is None:
            raise ValueError(f"a {self.kind.value} task needs a target")
        elif self.target >= 10**self.rod_count:
            raise Overflow(f"{self.target} does not fit on {self.rod_count} rod(s)")
        if (self.language is not None) != (self.kind is TaskKind.SET_AND_SAY):
            raise ValueError("language is given exactly for set-and-say tasks")

    @property
    def expected_value(self) -> int:
        if self.kind is TaskKind.READ_NUMBER:
            return read_value(self.printed)
        return self.target

    def to_json(self) -> dict:
        data: dict = {
            "kind": self.kind.value,
            "register": self.register.value,
            "rod_count": self.rod_count,
        }
        if self.target is not None:
            data["target"] = self.target
        if self.printed is not None:
            data["config"] = self.printed.to_json()
        if self.language is not None:
            data["language"] = self.language.value
        return data

    @classmethod
    def from_json(cls, data: dict) -> "Task":
        kind = TaskKind(data["kind"])
        printed = AbacusConfig.from_json(data["config"]) if "config" in data else None
        language = Language(data["language"]) if "language" in data else None
        return cls(
            kind=kind,
            register=Register(data.get("register", Register.VIRTUAL_ABACUS.value)),
            rod_count=int(data.get("rod_count", DEFAULT_ROD_COUNT)),
            target=int(data["target"]) if data.get("target") is not None else None,
            printed=printed,
            language=language,
        )


def evaluate_attempt(task: Task, trace: Trace, answer=None) -> tuple[bool, TechniqueReport]:
    """Replay, classify, and judge one attempt.

    Correctness: a set task must leave the abacus at the target; a read
    task needs the right answer for the printed inscription; set-and-say
    needs both the inscription and the words.
    """
    report = classify(trace, target=task.expected_value, rod_count=task.rod_count)
    if task.kind is TaskKind.SET_NUMBER:
        correct = report.correct
    elif task.kind is TaskKind.READ_NUMBER:
        correct = answer is not None and int(answer) == task.expected_value
    else:
        said = parse_words(str(answer), task.language) if answer is not None else None
        correct = report.correct and said == task.target
    return correct, report


@dataclass(frozen=True)
class Attempt:
    attempt_id: str
    task: Task
    trace: Trace
    answer: str | int | None
    correct: bool
    report: TechniqueReport
    created_at: float

    def to_json(self) -> dict:
        return {
            "attempt_id": self.attempt_id,
            "task": self.task.to_json(),
            "trace": self.trace.to_json(),
            "answer": self.answer,
            "correct": self.correct,
            "report": self.report.to_json(),
            "created_at": self.created_at,
        }


@dataclass
class Session:
    id: str
    participant: str
    created_at: float
    attempts: list[Attempt] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "participant": self.participant,
            "created_at": self.created_at,
            "attempts": [a.to_json() for a in self.attempts],
        }


@dataclass(frozen=True)
class SessionReport:
    attempts: int
    correct: int
    per_kind: dict
    tag_frequencies: dict
    gesture_counts: tuple[int, ...]
    see_number_uses: int

    def to_json(self) -> dict:
        return {
            "attempts": self.attempts,
            "correct": self.correct,
            "per_kind": self.per_kind,
            "tag_frequencies": self.tag_frequencies,
            "gesture_counts": list(self.gesture_counts),
            "see_number_uses": self.see_number_uses,
        }


def session_report(session: Session) -> SessionReport:
    """Teacher-facing aggregate of one session."""
    per_kind: dict = {}
    tag_frequencies: dict = {}
    counts = []
    see_number = 0
    correct = 0
    for attempt in session.attempts:
        kind = attempt.task.kind.value
        slot = per_kind.setdefault(kind, {"attempts": 0, "correct": 0})
        slot["attempts"] += 1
        if attempt.correct:
            slot["correct"] += 1
            correct += 1
        for tag in attempt.report.tags:
            tag_frequencies[tag.value] = tag_frequencies.get(tag.value, 0) + 1
        counts.append(gesture_count(attempt.trace))
        see_number += sum(1 for g in attempt.trace.gestures if isinstance(g, IconSeeNumber))
        if attempt.trace.see_number_initially_on:
            see_number += 1
    return SessionReport(
        attempts=len(session.attempts),
        correct=correct,
        per_kind=per_kind,
        tag_frequencies=tag_frequencies,
        gesture_counts=tuple(counts),
        see_number_uses=see_number,
    )


class SessionStore:
    """Append-only JSON-lines persistence, one file per session."""

    def __init__(self, data_dir: str | Path):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def _lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def _path(self, session_id: str) -> Path:
        if not session_id.isalnum():
            raise KeyError(session_id)
        return self.data_dir / f"{session_id}.jsonl"

    def create(self, participant: str = "anonymous") -> Session:
        session = Session(id=uuid.uuid4().hex[:12], participant=participant, created_at=time.time())
        line = {
            "event": "created",
            "id": session.id,
            "participant": session.participant,
            "created_at": session.created_at,
        }
        with self._lock(session.id):
            with self._path(session.id).open("a", encoding="utf-8") as handle:
                handle.write(json.dumps(line) + "\n")
        return session

    def load(self, session_id: str) -> Session:
        """Rebuild the session, re-evaluating every attempt from its trace."""
        path = self._path(session_id)
        if not path.exists():
            raise KeyError(session_id)
        session: Session | None = None
        for raw in path.read_text(encoding="utf-8").splitlines():
            if not raw.strip():
                continue
            line = json.loads(raw)
            if line["event"] == "created":
                session = Session(
                    id=line["id"],
                    participant=line["participant"],
                    created_at=line["created_at"],
                )
            elif line["event"] == "attempt" and session is not None:
                task = Task.from_json(line["task"])
                trace = Trace.from_json(line["trace"])
                answer = line.get("answer")
                correct, report = evaluate_attempt(task, trace, answer)
                session.attempts.append(
                    Attempt(
                        attempt_id=line["attempt_id"],
                        task=task,
                        trace=trace,
                        answer=answer,
                        correct=correct,
                        report=report,
                        created_at=line["created_at"],
                    )
                )
        if session is None:
            raise KeyError(session_id)
        return session

    def add_attempt(
        self,
        session_id: str,
        task: Task,
        trace: Trace,
        answer=None,
        attempt_id: str | None = None,
    ) -> Attempt:
        """Evaluate and persist; retrying with the same attempt_id is a no-op."""
        with self._lock(session_id):
            session = self.load(session_id)
            if attempt_id is not None:
                for existing in session.attempts:
                    if existing.attempt_id == attempt_id:
                        return existing
            correct, report = evaluate_attempt(task, trace, answer)
            attempt = Attempt(
                attempt_id=attempt_id or uuid.uuid4().hex[:12],
                task=task,
                trace=trace,
                answer=answer,
                correct=correct,
                report=report,
                created_at=time.time(),
            )
            line = {
                "event": "attempt",
                "attempt_id": attempt.attempt_id,
                "task": task.to_json(),
                "trace": trace.to_json(),
                "answer": answer,
                "created_at": attempt.created_at,
                # cached verdict for humans reading the file; load() recomputes
                "correct": correct,
                "report": report.to_json(),
            }
            with self._path(session_id).open("a", encoding="utf-8") as handle:
                handle.write(json.dumps(line) + "\n")
            return attempt
