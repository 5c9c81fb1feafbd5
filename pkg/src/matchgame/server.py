"""HTTP play service: sessions of one game each, a human on one seat and the
engine on the other.

A full move has two halves — an initiation and a response — so a session is
always in one of three states: awaiting_initiation, awaiting_response, or
finished.  ``POST /games`` creates a session (auto-playing the engine's
initiation when the human sits on the responder seat), ``POST
/games/{id}/move`` plays the human's pending half, and ``POST
/games/{id}/engine-move`` plays the pending half with the engine, whichever
seat it belongs to, so a client may also delegate both seats and watch
optimal self-play.  Within the exact cap the engine plays optimally; above it
a documented greedy fallback takes over and is flagged in every view.

All errors share the shape ``{"error": code, "detail": text}``.
"""

from __future__ import annotations

import json
import threading
import time
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import engine, families, solver
from .engine import GameSpec, GameState, Move, Pattern
from .errors import InvalidInput
from .graphs import Graph, VertexSet, bits_of, graph_from_json

AWAITING_INITIATION = "awaiting_initiation"
AWAITING_RESPONSE = "awaiting_response"
FINISHED = "finished"

HUMAN_SEATS = ("initiator", "responder")


class ApiError(Exception):
    """Error carrying the wire shape: an error code and a detail string."""

    def __init__(self, status: int, code: str, detail: str):
        super().__init__(detail)
        self.status = status
        self.code = code
        self.detail = detail


def _not_found(sid: str) -> ApiError:
    return ApiError(404, "not_found", f"no session {sid!r}")


def _out_of_turn(detail: str) -> ApiError:
    return ApiError(409, "out_of_turn", detail)


def _illegal(detail: str) -> ApiError:
    return ApiError(422, "illegal_move", detail)


def _invalid(detail: str) -> ApiError:
    return ApiError(422, "invalid_input", detail)


@dataclass
class Session:
    """One game in progress; all mutation happens under the lock."""

    id: str
    spec: GameSpec
    graph: Graph
    family: str | None
    human_seat: str
    exact: bool
    analyzer: solver.Analyzer | None
    state: GameState
    pending_initiation: int | None = None
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def status(self) -> str:
        if self.pending_initiation is not None:
            return AWAITING_RESPONSE
        if engine.is_terminal(self.state, self.spec):
            return FINISHED
        return AWAITING_INITIATION

    def pending_seat(self) -> str | None:
        status = self.status
        if status == AWAITING_INITIATION:
            return "initiator"
        if status == AWAITING_RESPONSE:
            return "responder"
        return None

    # -- engine policies -------------------------------------------------

    def _greedy_proxy(self, avail: int) -> int:
        """Number of legal initiations remaining: a cheap stand-in for how
        much play is left, used only above the exact cap."""
        return engine.initiation_mask(self.graph, avail, self.spec.pattern).bit_count()

    def engine_initiation(self) -> int:
        avail = self.state.available.bits
        if self.exact:
            v = self.analyzer.best_initiation(avail)
            if v is None:
                raise _out_of_turn("no legal initiation remains")
            return v
        want_max = self.spec.initiator == engine.MAXIMIZER
        best_v = None
        best_score = None
        for v in self.state.available:
            images = engine.image_masks(self.graph, avail, self.spec.pattern, v)
            if not images:
                continue
            # one-ply lookahead: assume the responder's own greedy reply
            reply = self._greedy_image(avail, v)
            score = self._greedy_proxy(avail & ~reply)
            better = (
                best_score is None
                or (want_max and score > best_score)
                or (not want_max and score < best_score)
            )
            if better:
                best_v, best_score = v, score
        if best_v is None:
            raise _out_of_turn("no legal initiation remains")
        return best_v

    def _greedy_image(self, avail: int, v: int) -> int:
        images = engine.image_masks(self.graph, avail, self.spec.pattern, v)
        responder_max = self.spec.responder == engine.MAXIMIZER
        best_img = None
        best_score = None
        for img in images:  # tuple-sorted, so ties keep the smallest image
            score = self._greedy_proxy(avail & ~img)
            better = (
                best_score is None
                or (responder_max and score > best_score)
                or (not responder_max and score < best_score)
            )
            if better:
                best_img, best_score = img, score
        if best_img is None:
            raise _illegal(f"vertex {v} has no response image")
        return best_img

    def engine_response(self, v: int) -> int:
        avail = self.state.available.bits
        if self.exact:
            return self.analyzer.best_response(avail, v)
        return self._greedy_image(avail, v)

    # -- view ------------------------------------------------------------

    def view(self) -> dict:
        avail = self.state.available.bits
        legal = (
            []
            if self.status != AWAITING_INITIATION
            else engine.legal_initiations(self.state, self.spec).to_list()
        )
        pending_responses = (
            [
                VertexSet(mk, self.graph.n).to_list()
                for mk in engine.image_masks(
                    self.graph, avail, self.spec.pattern, self.pending_initiation
                )
            ]
            if self.pending_initiation is not None
            else []
        )
        moves = list(self.state.history)
        return {
            "id": self.id,
            "status": self.status,
            "spec": self.spec.to_dict(),
            "family": self.family,
            "n": self.graph.n,
            "edges": [[u, w] for u, w in self.graph.edges],
            "human_role": self.human_seat,
            "engine": "exact" if self.exact else "greedy",
            "available": self.state.available.to_list(),
            "legal_initiations": legal,
            "pending_initiation": self.pending_initiation,
            "pending_responses": pending_responses,
            "history": [mv.to_dict() for mv in moves],
            "moves": len(moves),
            "taken": self.graph.n - len(self.state.available),
            "value": len(moves) if self.status == FINISHED else None,
            "created": self.created,
            "updated": self.updated,
        }


class SessionStore:
    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._sessions: dict[str, Session] = {}

    def add(self, session: Session) -> None:
        with self._lock:
            self._sessions[session.id] = session

    def get(self, sid: str) -> Session:
        with self._lock:
            session = self._sessions.get(sid)
        if session is None:
            raise _not_found(sid)
        return session


def _parse_create(body: dict) -> tuple[GameSpec, Graph, str | None, str]:
    if not isinstance(body, dict):
        raise _invalid("request body must be a JSON object")
    kind = body.get("pattern")
    if kind not in (engine.STAR, engine.STRIPE, engine.UNROOTED):
        raise _invalid("pattern must be star, stripe, or unrooted")
    initiator = body.get("initiator")
    if initiator not in (engine.MAXIMIZER, engine.MINIMIZER):
        raise _invalid("initiator must be max or min")
    seat = body.get("human_role", "initiator")
    if seat not in HUMAN_SEATS:
        raise _invalid("human_role must be initiator or responder")
    family = body.get("family")
    graph_obj = body.get("graph")
    if (family is None) == (graph_obj is None):
        raise _invalid("provide exactly one of family or graph")
    try:
        if family is not None:
            inst = families.parse_family(str(family))
            g = inst.graph
            family = str(family)
        else:
            g = graph_from_json(graph_obj)
    except (InvalidInput, ValueError) as exc:
        raise _invalid(str(exc)) from exc
    return GameSpec(Pattern(kind), initiator), g, family, seat


def create_app(cap: int = solver.DEFAULT_CAP, replay_log: str | None = None) -> FastAPI:
    app = FastAPI(title="matchgame server")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore()
    app.state.store = store
    app.state.cap = cap
    replay_lock = threading.Lock()

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        return JSONResponse(
            status_code=exc.status,
            content={"error": exc.code, "detail": exc.detail},
        )

    @app.exception_handler(RequestValidationError)
    async def _validation_error(_req: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"error": "invalid_input", "detail": str(exc)},
        )

    def _log_replay(session: Session) -> None:
        if replay_log is None or session.status != FINISHED:
            return
        record = {
            "id": session.id,
            "spec": session.spec.to_dict(),
            "family": session.family,
            "n": session.graph.n,
            "edges": [[u, w] for u, w in session.graph.edges],
            "history": [mv.to_dict() for mv in session.state.history],
            "value": len(session.state.history),
        }
        with replay_lock:
            with open(replay_log, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(record) + "\n")

    def _apply_response(session: Session, image_bits: int) -> None:
        move = Move(
            session.pending_initiation, VertexSet(image_bits, session.graph.n)
        )
        session.state = engine.apply_move(session.state, session.spec, move)
        session.pending_initiation = None
        session.updated = time.time()
        _log_replay(session)

    def _apply_initiation(session: Session, v: int) -> None:
        if v not in engine.legal_initiations(session.state, session.spec):
            raise _illegal(f"vertex {v} is not a legal initiation")
        session.pending_initiation = v
        session.updated = time.time()

    @app.post("/games", status_code=201)
    def create_game(body: dict) -> dict:
        spec, g, family, seat = _parse_create(body)
        exact = g.n <= cap
        analyzer = solver.Analyzer(g, spec, cap=cap) if exact else None
        session = Session(
            id=uuid.uuid4().hex[:12],
            spec=spec,
            graph=g,
            family=family,
            human_seat=seat,
            exact=exact,
            analyzer=analyzer,
            state=GameState.initial(g),
        )
        with session.lock:
            if seat == "responder" and session.status == AWAITING_INITIATION:
                _apply_initiation(session, session.engine_initiation())
            view = session.view()
        store.add(session)
        return view

    @app.get("/games/{sid}")
    def get_game(sid: str) -> dict:
        session = store.get(sid)
        with session.lock:
            return session.view()

    @app.get("/games/{sid}/options")
    def get_options(sid: str, vertex: int) -> dict:
        session = store.get(sid)
        with session.lock:
            avail = session.state.available.bits
            if session.status == FINISHED:
                raise _out_of_turn("game is finished")
            images = engine.image_masks(
                session.graph, avail, session.spec.pattern, vertex
            )
            if not images:
                raise _illegal(f"vertex {vertex} is not a legal initiation")
            return {
                "vertex": vertex,
                "images": [VertexSet(mk, session.graph.n).to_list() for mk in images],
            }

    @app.post("/games/{sid}/move")
    def post_move(sid: str, body: dict) -> dict:
        session = store.get(sid)
        with session.lock:
            status = session.status
            if status == FINISHED:
                raise _out_of_turn("game is finished")
            if session.pending_seat() != session.human_seat:
                raise _out_of_turn(
                    f"the {session.pending_seat()} half belongs to the engine"
                )
            if status == AWAITING_INITIATION:
                if "vertex" not in body:
                    if "image" in body:
                        raise _out_of_turn("an initiation is pending, not a response")
                    raise _invalid("initiation requires a 'vertex' field")
                v = body["vertex"]
                if not isinstance(v, int):
                    raise _invalid("'vertex' must be an integer")
                _apply_initiation(session, v)
            else:
                if "image" not in body:
                    if "vertex" in body:
                        raise _out_of_turn("a response is pending, not an initiation")
                    raise _invalid("response requires an 'image' field")
                image = body["image"]
                if not (
                    isinstance(image, list)
                    and all(isinstance(x, int) and 0 <= x < session.graph.n for x in image)
                ):
                    raise _invalid("'image' must be a list of vertex ids")
                bits = 0
                for x in image:
                    bits |= 1 << x
                options = engine.image_masks(
                    session.graph,
                    session.state.available.bits,
                    session.spec.pattern,
                    session.pending_initiation,
                )
                if bits not in options:
                    raise _illegal(
                        f"{sorted(image)} is not a legal image for vertex"
                        f" {session.pending_initiation}"
                    )
                _apply_response(session, bits)
            return session.view()

    @app.post("/games/{sid}/engine-move")
    def engine_move(sid: str) -> dict:
        session = store.get(sid)
        with session.lock:
            status = session.status
            if status == FINISHED:
                raise _out_of_turn("game is finished")
            if status == AWAITING_INITIATION:
                _apply_initiation(session, session.engine_initiation())
            else:
                _apply_response(
                    session, session.engine_response(session.pending_initiation)
                )
            return session.view()

    @app.get("/games/{sid}/hint")
    def get_hint(sid: str) -> dict:
        session = store.get(sid)
        with session.lock:
            if session.status == FINISHED:
                raise _out_of_turn("game is finished")
            if not session.exact:
                return {
                    "available": False,
                    "detail": "exact hints need the solver; this session runs "
                    "the greedy fallback",
                }
            avail = session.state.available.bits
            if session.status == AWAITING_INITIATION:
                options = [
                    {"vertex": v, "total": total}
                    for v, total in session.analyzer.initiation_values(avail)
                ]
                best = session.analyzer.best_initiation(avail)
                return {
                    "available": True,
                    "kind": "initiation",
                    "options": options,
                    "best": best,
                }
            v = session.pending_initiation
            options = [
                {
                    "image": VertexSet(mk, session.graph.n).to_list(),
                    "total": session.analyzer.value_after(avail, mk),
                }
                for mk in engine.image_masks(
                    session.graph, avail, session.spec.pattern, v
                )
            ]
            best = session.analyzer.best_response(avail, v)
            return {
                "available": True,
                "kind": "response",
                "options": options,
                "best": VertexSet(best, session.graph.n).to_list(),
            }

    return app
