"""FastAPI application exposing the lattice machinery.

All endpoints are POST and stateless: the graph file travels in the
request body, so the service needs no storage and can serve many clients
concurrently (every computation works on immutable data).

Error mapping: input problems (parse/validation/bad vectors) are 422,
domain refusals (non-rational delta, exceeded caps) are 409, failed
internal identities are 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import cyclic, invariants, laufer, lattice
from ..errors import DomainRefusal, InputError, InternalCheckError
from ..graph import parse_graph, serialize, validate
from ..textio import fmt_cycle, fmt_q, parse_cycle
from . import models as m


def create_app() -> FastAPI:
    app = FastAPI(
        title="plumbinv",
        description="Exact lattice invariants of curve germs on "
                    "resolution graphs of normal surface singularities.",
        version="0.1.0",
    )

    @app.exception_handler(InputError)
    async def _input_error(request: Request, exc: InputError):
        return _error_response(422, "input", exc)

    @app.exception_handler(DomainRefusal)
    async def _refusal(request: Request, exc: DomainRefusal):
        return _error_response(409, "refusal", exc)

    @app.exception_handler(InternalCheckError)
    async def _internal(request: Request, exc: InternalCheckError):
        return _error_response(500, "internal", exc)

    @app.post("/validate", response_model=m.ValidateResponse)
    def validate_graph(req: m.GraphRequest):
        report = validate(parse_graph(req.graph))
        return m.ValidateResponse(
            ok=report.ok,
            failures=[m.FailureItem(rule=f.rule, message=f.message,
                                    element=f.element)
                      for f in report.failures],
        )

    @app.post("/info", response_model=m.InfoResponse)
    def info(req: m.GraphRequest):
        ctx = _ctx(req)
        zmin = laufer.fundamental_cycle(ctx)
        kulikov, rv = invariants.kulikov_check(ctx)
        return m.InfoResponse(
            labels=list(ctx.graph.labels),
            det=str(-ctx.det_abs if ctx.n % 2 else ctx.det_abs),
            order_h=ctx.det_abs,
            invariant_factors=list(ctx.snf.nontrivial_factors),
            zk=fmt_cycle(ctx.zk),
            zmin=fmt_cycle(zmin),
            rational=invariants.is_rational(ctx),
            kulikov=kulikov,
            rv=list(rv),
        )

    @app.post("/classes", response_model=m.ClassesResponse)
    def classes(req: m.ClassesRequest):
        ctx = _ctx(req)
        reps = lattice.enumerate_classes(ctx, cap=req.cap)
        return m.ClassesResponse(
            order_h=ctx.det_abs,
            classes=[fmt_cycle(h) for h in reps],
        )

    @app.post("/zk", response_model=m.CycleResponse)
    def zk(req: m.GraphRequest):
        ctx = _ctx(req)
        return m.CycleResponse(cycle=fmt_cycle(ctx.zk))

    @app.post("/zmin", response_model=m.CycleResponse)
    def zmin(req: m.GraphRequest):
        ctx = _ctx(req)
        return m.CycleResponse(cycle=fmt_cycle(laufer.fundamental_cycle(ctx)))

    @app.post("/sh", response_model=m.CycleResponse)
    def sh(req: m.CycleRequest):
        ctx = _ctx(req)
        h = lattice.class_of(ctx, parse_cycle(ctx, req.cycle))
        s, trace = laufer.antinef_closure(ctx, h)
        return _cycle_response(ctx, s, trace if req.trace else None)

    @app.post("/closure", response_model=m.CycleResponse)
    def closure(req: m.CycleRequest):
        ctx = _ctx(req)
        s, trace = laufer.antinef_closure(ctx, parse_cycle(ctx, req.cycle))
        return _cycle_response(ctx, s, trace if req.trace else None)

    @app.post("/oracle-sh", response_model=m.CycleResponse)
    def oracle_sh(req: m.OracleShRequest):
        ctx = _ctx(req)
        h = lattice.class_of(ctx, parse_cycle(ctx, req.cycle))
        return m.CycleResponse(
            cycle=fmt_cycle(laufer.oracle_sh(ctx, h, req.bound)))

    @app.post("/delta", response_model=m.DeltaResponse)
    def delta(req: m.CurveRequest):
        ctx = _ctx(req)
        c = ctx.graph.curve(req.curve)
        report = invariants.delta(ctx, c)
        if not report.rational and not req.force:
            invariants.require_rational(ctx, "delta")
        resp = m.DeltaResponse(
            curve=report.curve,
            curve_cycle=fmt_cycle(report.curve_cycle),
            h=fmt_cycle(report.h),
            branches=report.branches,
            chi_neg_cycle=fmt_q(report.chi_neg_cycle),
            s_term=fmt_cycle(report.s_term),
            chi_s_term=fmt_q(report.chi_s_term),
            rational=report.rational,
        )
        if report.rational:
            resp.delta = fmt_q(report.delta)
            resp.blache_a = fmt_q(report.blache_a)
        else:
            resp.delta = fmt_q(report.chi_neg_cycle - report.chi_s_term)
            resp.label = "chi-expression (not delta)"
        return resp

    @app.post("/kappa", response_model=m.ValueResponse)
    def kappa(req: m.CurveRequest):
        ctx = _ctx(req)
        c = ctx.graph.curve(req.curve)
        if req.force and not invariants.is_rational(ctx):
            return m.ValueResponse(
                value=fmt_q(invariants.chi_expression(ctx, c)),
                label="chi-expression (not delta)")
        return m.ValueResponse(value=fmt_q(invariants.kappa_topological(ctx, c)))

    @app.post("/blache", response_model=m.ValueResponse)
    def blache(req: m.CurveRequest):
        ctx = _ctx(req)
        c = ctx.graph.curve(req.curve)
        if req.force and not invariants.is_rational(ctx):
            report = invariants.delta(ctx, c)
            return m.ValueResponse(value=fmt_q(report.chi_s_term),
                                   label="chi-expression (not Blache A)")
        return m.ValueResponse(value=fmt_q(invariants.blache_A(ctx, c)))

    @app.post("/mumford", response_model=m.ValueResponse)
    def mumford(req: m.CurvePairRequest):
        ctx = _ctx(req)
        c1 = ctx.graph.curve(req.curves[0])
        c2 = ctx.graph.curve(req.curves[1])
        return m.ValueResponse(
            value=fmt_q(invariants.mumford_pairing(ctx, c1, c2)))

    @app.post("/hironaka", response_model=m.ValueResponse)
    def hironaka(req: m.CurvePairRequest):
        ctx = _ctx(req)
        c1 = ctx.graph.curve(req.curves[0])
        c2 = ctx.graph.curve(req.curves[1])
        return m.ValueResponse(
            value=fmt_q(invariants.hironaka_mult(ctx, c1, c2)))

    @app.post("/verify-duality", response_model=m.DualityResponse)
    def verify_duality(req: m.DualityRequest):
        ctx = _ctx(req)
        failures = invariants.verify_duality(ctx, cap=req.cap)
        return m.DualityResponse(
            ok=not failures,
            order_h=ctx.det_abs,
            failures=[m.DualityFailure(h=fmt_cycle(h),
                                       chi_s_neg_h=fmt_q(lhs),
                                       chi_s_zk_plus_h=fmt_q(rhs))
                      for h, lhs, rhs in failures],
        )

    @app.post("/gen-cyclic", response_model=m.GenCyclicResponse)
    def gen_cyclic(req: m.GenCyclicRequest):
        ct = cyclic.cyclic_type(req.d, req.q)
        g = cyclic.build_cyclic_graph(req.d, req.q)
        return m.GenCyclicResponse(
            graph=serialize(g),
            d=ct.d,
            q=ct.q,
            q_prime=ct.q_prime,
            hj_digits=list(ct.hj_digits),
        )

    return app


def _ctx(req: m.GraphRequest) -> lattice.LatticeContext:
    return lattice.build_context(parse_graph(req.graph))


def _cycle_response(ctx, s, trace):
    steps = None
    if trace is not None:
        steps = [m.TraceStep(step=k + 1,
                             vertex=ctx.graph.labels[u],
                             pairing=fmt_q(p))
                 for k, (_, u, p) in enumerate(trace.steps)]
    return m.CycleResponse(cycle=fmt_cycle(s), trace=steps)


def _error_response(status, category, exc):
    detail = m.ErrorDetail(category=category, message=str(exc))
    return JSONResponse(status_code=status,
                        content={"detail": detail.model_dump()})


app = create_app()
