"""HTTP session service for interactive elicitation.

Each session holds one growing assessment.  Pairs can be added and
removed; consistency, choice queries and generator statistics are served
from a cached materialised generator that is invalidated on every
mutation.  Errors use the shape ``{"error": "message"}``.
"""

from __future__ import annotations

import json
import os
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .choice import (
    Method,
    full_generator,
    is_consistent_generator,
    natural_extension,
)
from .core import Assessment, AssessmentPair, InputError, ToleranceConfig, as_options
from .generators import (
    BuildTimeout,
    assessment_to_conjunctive,
    assessment_to_conjunctive_naive,
    disjunctive_size,
)

DEFAULT_REBUILD_TIMEOUT_S = 30.0


class ApiError(Exception):
    def __init__(self, status: int, message: str, payload: dict | None = None):
        super().__init__(message)
        self.status = status
        self.message = message
        self.payload = payload or {}


class CreateSessionRequest(BaseModel):
    dimension: int = Field(ge=1)


class SessionCreated(BaseModel):
    id: str
    dimension: int


class PairBody(BaseModel):
    chosen: list[list[float]]
    rejected: list[list[float]] = []


class PairView(BaseModel):
    chosen: list[list[float]]
    rejected: list[list[float]]


class SessionView(BaseModel):
    id: str
    dimension: int
    pairs: list[PairView]


class ConsistencyView(BaseModel):
    consistent: bool


class ChooseBody(BaseModel):
    options: list[list[float]]


class ChooseView(BaseModel):
    chosen: list[list[float]]
    rejected: list[list[float]]
    consistent: bool


class StatsView(BaseModel):
    h_naive: int
    h_simplified: int
    g_naive_size: str
    g_full_size: int


@dataclass
class Session:
    id: str
    dimension: int
    pairs: list[AssessmentPair] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    def assessment(self) -> Assessment:
        return Assessment(dimension=self.dimension, pairs=tuple(self.pairs))


def _pair_view(p: AssessmentPair) -> PairView:
    return PairView(
        chosen=[list(v) for v in p.chosen],
        rejected=[list(v) for v in p.rejected],
    )


def create_app(
    tolerance: ToleranceConfig | None = None,
    rebuild_timeout_s: float | None = None,
    session_dir: str | None = None,
) -> FastAPI:
    """Build the service app.

    ``session_dir`` (or the CHOIX_SESSION_DIR environment variable)
    enables JSON snapshot persistence, one file per session.
    """
    cfg = tolerance or ToleranceConfig()
    if rebuild_timeout_s is None:
        rebuild_timeout_s = float(
            os.environ.get("CHOIX_REBUILD_TIMEOUT_S", DEFAULT_REBUILD_TIMEOUT_S)
        )
    if session_dir is None:
        session_dir = os.environ.get("CHOIX_SESSION_DIR")

    app = FastAPI(title="choix session service")
    sessions: dict[str, Session] = {}

    def snapshot_path(sid: str) -> str:
        return os.path.join(session_dir, f"{sid}.json")

    def persist(session: Session) -> None:
        if not session_dir:
            return
        os.makedirs(session_dir, exist_ok=True)
        doc = {
            "id": session.id,
            "dimension": session.dimension,
            "pairs": [
                {"chosen": [list(v) for v in p.chosen],
                 "rejected": [list(v) for v in p.rejected]}
                for p in session.pairs
            ],
        }
        with open(snapshot_path(session.id), "w", encoding="utf-8") as fh:
            json.dump(doc, fh)

    def forget(sid: str) -> None:
        if session_dir:
            try:
                os.remove(snapshot_path(sid))
            except OSError:
                pass

    if session_dir and os.path.isdir(session_dir):
        for name in os.listdir(session_dir):
            if not name.endswith(".json"):
                continue
            try:
                with open(os.path.join(session_dir, name), encoding="utf-8") as fh:
                    doc = json.load(fh)
                session = Session(id=doc["id"], dimension=int(doc["dimension"]))
                for raw in doc["pairs"]:
                    session.pairs.append(
                        AssessmentPair(
                            chosen=as_options(raw["chosen"]),
                            rejected=as_options(raw["rejected"]),
                        )
                    )
                sessions[session.id] = session
            except (OSError, KeyError, ValueError, InputError):
                continue

    def get_session(sid: str) -> Session:
        session = sessions.get(sid)
        if session is None:
            raise ApiError(404, f"no session {sid}")
        return session

    def generator_or_503(session: Session):
        """Cached materialised generator; 503 with partial stats when the
        rebuild misses its deadline."""
        deadline = time.monotonic() + rebuild_timeout_s
        try:
            return full_generator(session.assessment(), cfg, deadline)
        except BuildTimeout:
            raise ApiError(
                503,
                "generator rebuild timed out",
                payload=_partial_stats(session),
            ) from None

    def _partial_stats(session: Session) -> dict:
        a = session.assessment()
        naive = assessment_to_conjunctive_naive(a)
        conj = assessment_to_conjunctive(a, cfg)
        return {
            "h_naive": len(naive.sets),
            "h_simplified": len(conj.sets),
            "g_naive_size": str(disjunctive_size(naive)),
        }

    @app.exception_handler(ApiError)
    async def handle_api_error(_request: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status, content={"error": exc.message, **exc.payload}
        )

    @app.exception_handler(RequestValidationError)
    async def handle_validation_error(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors())})

    @app.post("/api/sessions", response_model=SessionCreated, status_code=201)
    def create_session(body: CreateSessionRequest):
        session = Session(id=uuid.uuid4().hex, dimension=body.dimension)
        sessions[session.id] = session
        persist(session)
        return SessionCreated(id=session.id, dimension=session.dimension)

    @app.get("/api/sessions/{sid}", response_model=SessionView)
    def read_session(sid: str):
        session = get_session(sid)
        with session.lock:
            return SessionView(
                id=session.id,
                dimension=session.dimension,
                pairs=[_pair_view(p) for p in session.pairs],
            )

    @app.delete("/api/sessions/{sid}", status_code=204)
    def delete_session(sid: str):
        get_session(sid)
        del sessions[sid]
        forget(sid)

    @app.post("/api/sessions/{sid}/pairs", response_model=SessionView)
    def add_pair(sid: str, body: PairBody):
        session = get_session(sid)
        with session.lock:
            try:
                pair = AssessmentPair(
                    chosen=as_options(body.chosen), rejected=as_options(body.rejected)
                )
            except InputError as exc:
                raise ApiError(400, str(exc)) from exc
            if pair.dimension != session.dimension:
                raise ApiError(
                    400,
                    f"pair of dimension {pair.dimension} in a session of "
                    f"dimension {session.dimension}",
                )
            session.pairs.append(pair)
            persist(session)
            return SessionView(
                id=session.id,
                dimension=session.dimension,
                pairs=[_pair_view(p) for p in session.pairs],
            )

    @app.delete("/api/sessions/{sid}/pairs/{index}", response_model=SessionView)
    def delete_pair(sid: str, index: int):
        session = get_session(sid)
        with session.lock:
            if not 0 <= index < len(session.pairs):
                raise ApiError(404, f"no pair {index} in session {sid}")
            session.pairs.pop(index)
            persist(session)
            return SessionView(
                id=session.id,
                dimension=session.dimension,
                pairs=[_pair_view(p) for p in session.pairs],
            )

    @app.get("/api/sessions/{sid}/consistency", response_model=ConsistencyView)
    def consistency(sid: str):
        session = get_session(sid)
        with session.lock:
            g = generator_or_503(session)
            consistent = is_consistent_generator(iter(g.sets), session.dimension, cfg)
            return ConsistencyView(consistent=consistent)

    @app.post("/api/sessions/{sid}/choose", response_model=ChooseView)
    def choose(sid: str, body: ChooseBody):
        session = get_session(sid)
        with session.lock:
            try:
                options = as_options(body.options)
                if not options:
                    raise InputError("the query set must be non-empty")
            except InputError as exc:
                raise ApiError(400, str(exc)) from exc
            if options and len(options[0]) != session.dimension:
                raise ApiError(
                    400,
                    f"query options of dimension {len(options[0])} in a session "
                    f"of dimension {session.dimension}",
                )
            generator_or_503(session)
            try:
                result = natural_extension(
                    options, session.assessment(), Method.FULL, cfg
                )
            except InputError as exc:
                raise ApiError(400, str(exc)) from exc
            return ChooseView(
                chosen=[list(v) for v in result.chosen],
                rejected=[list(v) for v in result.rejected],
                consistent=result.consistent,
            )

    @app.get("/api/sessions/{sid}/stats", response_model=StatsView)
    def stats(sid: str):
        session = get_session(sid)
        with session.lock:
            g = generator_or_503(session)
            partial = _partial_stats(session)
            return StatsView(g_full_size=len(g.sets), **partial)

    return app


app = create_app()
