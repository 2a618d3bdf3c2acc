"""Pydantic request/response models of the HTTP API.

Every exact rational crosses the wire as a string ("p/q", integers
without the "/1"); cycles as comma-separated rational strings.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class GraphRequest(BaseModel):
    graph: str = Field(description="graph file contents")


class ClassesRequest(GraphRequest):
    cap: int = 10000


class CycleRequest(GraphRequest):
    cycle: str = Field(description='"p/q,..." in E-basis or "dual:a1,...,an"')
    trace: bool = False


class CurveRequest(GraphRequest):
    curve: str
    force: bool = False


class CurvePairRequest(GraphRequest):
    curves: tuple[str, str]


class DualityRequest(GraphRequest):
    cap: int = 10000


class GenCyclicRequest(BaseModel):
    d: int
    q: int


class OracleShRequest(GraphRequest):
    cycle: str
    bound: int = 12


class FailureItem(BaseModel):
    rule: str
    message: str
    element: str


class ValidateResponse(BaseModel):
    ok: bool
    failures: list[FailureItem]


class InfoResponse(BaseModel):
    labels: list[str]
    det: str
    order_h: int
    invariant_factors: list[int]
    zk: str
    zmin: str
    rational: bool
    kulikov: bool
    rv: list[int]


class ClassesResponse(BaseModel):
    order_h: int
    classes: list[str]


class TraceStep(BaseModel):
    step: int
    vertex: str
    pairing: str


class CycleResponse(BaseModel):
    cycle: str
    trace: list[TraceStep] | None = None


class DeltaResponse(BaseModel):
    curve: str
    curve_cycle: str
    h: str
    branches: int
    chi_neg_cycle: str
    s_term: str
    chi_s_term: str
    rational: bool
    delta: str | None = None
    blache_a: str | None = None
    label: str | None = None


class ValueResponse(BaseModel):
    value: str
    label: str | None = None


class DualityFailure(BaseModel):
    h: str
    chi_s_neg_h: str
    chi_s_zk_plus_h: str


class DualityResponse(BaseModel):
    ok: bool
    order_h: int
    failures: list[DualityFailure]


class GenCyclicResponse(BaseModel):
    graph: str
    d: int
    q: int
    q_prime: int
    hj_digits: list[int]


class ErrorDetail(BaseModel):
    category: str
    message: str
