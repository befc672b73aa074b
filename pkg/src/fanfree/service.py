"""HTTP service over the library: one endpoint per CLI subcommand.

Every payload is exact — integers stay integers and rationals are "p/q"
strings — and every handler is a thin adapter onto a module operation.
Domain errors map onto status codes: malformed graph6 400, invalid input
422, size limits 413, unmet preconditions 409.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Union

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import __version__
from .constructions import (
    ConstructionSpec,
    Kind,
    build,
    degseq_triangle_bounds,
    ex3_star,
    ex_k3_fan,
)
from .graph import (
    CapacityError,
    Graph,
    Graph6ParseError,
    GraphInputError,
    PreconditionError,
    degree_sequence,
    graph6_decode,
    graph6_encode,
)
from .matching import FanWitness, contains_fan, contains_star
from .search import SearchReport, degseq_enumerate, exhaustive_extremal, hill_climb
from .triangles import TripleSystem, count_triangles, goodman_check, lift, triangle_count
from .weights import Scheme, classify_edges, lemma_suite, weigh

app = FastAPI(title="fanfree", version=__version__)

_TRIANGLE_LIST_CAP = 2000


def _frac(x: Fraction | int) -> str:
    return str(Fraction(x))


def _witness_payload(w: FanWitness | None):
    if w is None:
        return None
    return {"center": w.center, "pairs": [list(p) for p in w.pairs]}


@app.exception_handler(Graph6ParseError)
async def _graph6_error(request: Request, exc: Graph6ParseError):
    return JSONResponse(
        status_code=400,
        content={"error": str(exc), "offset": getattr(exc, "offset", None)},
    )


@app.exception_handler(GraphInputError)
async def _input_error(request: Request, exc: GraphInputError):
    return JSONResponse(status_code=422, content={"error": str(exc)})


@app.exception_handler(CapacityError)
async def _capacity_error(request: Request, exc: CapacityError):
    return JSONResponse(status_code=413, content={"error": str(exc)})


@app.exception_handler(PreconditionError)
async def _precondition_error(request: Request, exc: PreconditionError):
    witness = getattr(exc, "witness", None)
    if isinstance(witness, FanWitness):
        witness = _witness_payload(witness)
    elif witness is not None and not isinstance(witness, (int, str)):
        witness = repr(witness)
    return JSONResponse(status_code=409, content={"error": str(exc), "witness": witness})


# -- request / response models ------------------------------------------


class FormulaRequest(BaseModel):
    n: int
    k: int


class FormulaResponse(BaseModel):
    value: int
    valid_from: Optional[int]
    formula_id: str


class ConstructRequest(BaseModel):
    kind: str
    k: int
    n: Optional[int] = None


class ConstructResponse(BaseModel):
    graph6: str
    n: int
    edges: int
    triangles: int


class GraphRequest(BaseModel):
    graph6: str


class CountResponse(BaseModel):
    n: int
    edges: int
    triangle_count: int
    degree_sequence: list[int]
    triangles: Optional[list[list[int]]]
    triangles_truncated: bool


class ClassifyRequest(BaseModel):
    graph6: str
    k: int


class EdgeInfo(BaseModel):
    u: int
    v: int
    codegree: int
    label: str
    zero_flagged: bool


class ClassifyResponse(BaseModel):
    k: int
    counts: dict[str, int]
    edges: list[EdgeInfo]


class WeightsRequest(BaseModel):
    graph6: str
    k: int
    scheme: str = "basic"
    lemmas: bool = True


class LemmaVerdict(BaseModel):
    ok: bool
    violations: list[str]
    vertex_checks: int
    edge_checks: int
    tight_vertices: list[int]


class WeightsResponse(BaseModel):
    k: int
    scheme: str
    triangle_count: int
    classes: dict[str, int]
    f: dict[str, str]
    loss: dict[str, str]
    total: str
    lemmas: Optional[LemmaVerdict]


class CheckFanRequest(BaseModel):
    graph6: str
    k: int


class CheckFanResponse(BaseModel):
    k: int
    fan_free: bool
    verdict: str
    witness: Optional[dict]


class CheckStarRequest(BaseModel):
    k: int
    triples: Optional[str] = None
    graph6: Optional[str] = None
    n: Optional[int] = None


class CheckStarResponse(BaseModel):
    k: int
    star_free: bool
    verdict: str
    triple_count: int
    witness: Optional[dict]


class SearchRequest(BaseModel):
    mode: str
    k: int
    n: Optional[int] = None
    budget: Optional[int] = None
    seed: int = 0
    restarts: int = 8
    steps: int = 1200
    degrees: Optional[list[int]] = None
    workers: Optional[int] = None


class SearchResponse(BaseModel):
    mode: str
    n: int
    k: int
    best_value: Optional[int]
    witnesses: list[str]
    explored: int
    pruned: int
    exact: bool
    wall_time_s: float
    params: dict


class DegseqBoundsRequest(BaseModel):
    k: int
    s: int = 0


class DegseqBoundsResponse(BaseModel):
    k: int
    s: int
    max_value: Union[int, str]
    min_value: Optional[int]
    dichotomy_floor: Optional[int]
    max_witness: Optional[str]
    min_witness: Optional[str]


class GoodmanResponse(BaseModel):
    n: int
    lhs: int
    rhs: int
    holds: bool
    triangles: int
    complement_triangles: int


class VerifyRequest(BaseModel):
    criteria: Optional[list[int]] = None


class CriterionPayload(BaseModel):
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    budget_s: Optional[float]


class VerifyResponse(BaseModel):
    all_passed: bool
    results: list[CriterionPayload]


class CorpusRequest(BaseModel):
    lines: list[str]
    k: int


class CorpusRow(BaseModel):
    line: int
    graph6: Optional[str]
    n: Optional[int]
    edges: Optional[int]
    triangles: Optional[int]
    fan_free: Optional[bool]
    max_f: Optional[str]
    lemma_ok: Optional[bool]
    error: Optional[str]


class CorpusResponse(BaseModel):
    k: int
    rows: list[CorpusRow]


# -- endpoints -----------------------------------------------------------


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/formula", response_model=FormulaResponse)
def formula(req: FormulaRequest):
    r = ex_k3_fan(req.n, req.k)
    return FormulaResponse(value=r.value, valid_from=r.valid_from, formula_id=r.formula_id)


@app.post("/ex3", response_model=FormulaResponse)
def ex3(req: FormulaRequest):
    r = ex3_star(req.n, req.k)
    return FormulaResponse(value=r.value, valid_from=r.valid_from, formula_id=r.formula_id)


@app.post("/construct", response_model=ConstructResponse)
def construct(req: ConstructRequest):
    try:
        kind = Kind(req.kind)
    except ValueError:
        raise GraphInputError(
            f"unknown kind {req.kind!r}; choose from "
            + ", ".join(k.value for k in Kind)
        ) from None
    g = build(ConstructionSpec(kind, req.k, req.n))
    return ConstructResponse(
        graph6=graph6_encode(g), n=g.n, edges=g.num_edges, triangles=triangle_count(g)
    )


@app.post("/count", response_model=CountResponse)
def count(req: GraphRequest):
    g = graph6_decode(req.graph6)
    table = count_triangles(g)
    truncated = table.count > _TRIANGLE_LIST_CAP
    return CountResponse(
        n=g.n,
        edges=g.num_edges,
        triangle_count=table.count,
        degree_sequence=list(degree_sequence(g)),
        triangles=None if truncated else [list(t) for t in table.triangles],
        triangles_truncated=truncated,
    )


@app.post("/classify", response_model=ClassifyResponse)
def classify(req: ClassifyRequest):
    g = graph6_decode(req.graph6)
    cls = classify_edges(g, req.k)
    counts = {"heavy": 0, "medium": 0, "light": 0}
    edges = []
    for (u, v), label in sorted(cls.classes.items()):
        counts[label.value] += 1
        edges.append(
            EdgeInfo(
                u=u,
                v=v,
                codegree=cls.codegree[(u, v)],
                label=label.value,
                zero_flagged=(u, v) in cls.flagged_zero,
            )
        )
    return ClassifyResponse(k=req.k, counts=counts, edges=edges)


@app.post("/weights", response_model=WeightsResponse)
def weights(req: WeightsRequest):
    g = graph6_decode(req.graph6)
    try:
        scheme = Scheme(req.scheme)
    except ValueError:
        raise GraphInputError(
            f"unknown scheme {req.scheme!r}; choose basic or refined"
        ) from None
    table = count_triangles(g)
    cls = classify_edges(g, req.k, table)
    ledger = weigh(g, req.k, scheme, cls, table)
    counts = {"heavy": 0, "medium": 0, "light": 0}
    for label in cls.classes.values():
        counts[label.value] += 1
    verdict = None
    if req.lemmas:
        report = lemma_suite(g, req.k)  # 409 if the graph contains a k-fan
        verdict = LemmaVerdict(
            ok=report.ok,
            violations=report.violations,
            vertex_checks=report.vertex_checks,
            edge_checks=report.edge_checks,
            tight_vertices=report.tight_vertices,
        )
    return WeightsResponse(
        k=req.k,
        scheme=scheme.value,
        triangle_count=table.count,
        classes=counts,
        f={str(v): _frac(ledger.f[v]) for v in range(g.n)},
        loss={str(v): _frac(ledger.loss[v]) for v in range(g.n)},
        total=_frac(ledger.total),
        lemmas=verdict,
    )


@app.post("/check-fan", response_model=CheckFanResponse)
def check_fan(req: CheckFanRequest):
    g = graph6_decode(req.graph6)
    wit = contains_fan(g, req.k)
    free = wit is None
    return CheckFanResponse(
        k=req.k,
        fan_free=free,
        verdict=f"F{req.k}-free" if free else f"contains F{req.k}",
        witness=_witness_payload(wit),
    )


@app.post("/check-star", response_model=CheckStarResponse)
def check_star(req: CheckStarRequest):
    if (req.triples is None) == (req.graph6 is None):
        raise GraphInputError("provide exactly one of 'triples' or 'graph6'")
    if req.graph6 is not None:
        ts = lift(graph6_decode(req.graph6))
    else:
        ts = TripleSystem.from_text(req.triples, req.n)
    wit = contains_star(ts, req.k)
    free = wit is None
    return CheckStarResponse(
        k=req.k,
        star_free=free,
        verdict=f"F{req.k}-star-free" if free else f"contains an F{req.k}-star",
        triple_count=len(ts.triples),
        witness=_witness_payload(wit),
    )


def _report_payload(report: SearchReport) -> SearchResponse:
    return SearchResponse(
        mode=report.mode,
        n=report.n,
        k=report.k,
        best_value=report.best_value,
        witnesses=list(report.witnesses),
        explored=report.explored,
        pruned=report.pruned,
        exact=report.exact,
        wall_time_s=report.wall_time_s,
        params=report.params,
    )


@app.post("/search", response_model=SearchResponse)
def search(req: SearchRequest):
    if req.mode == "exhaustive":
        if req.n is None:
            raise GraphInputError("exhaustive search needs n")
        return _report_payload(
            exhaustive_extremal(req.n, req.k, budget=req.budget, workers=req.workers)
        )
    if req.mode == "hill":
        if req.n is None:
            raise GraphInputError("hill climbing needs n")
        return _report_payload(
            hill_climb(req.n, req.k, restarts=req.restarts, steps=req.steps, seed=req.seed)
        )
    if req.mode == "degseq":
        degrees = req.degrees
        if degrees is None:
            if req.k < 2:
                raise GraphInputError("degree-sequence mode needs k >= 2 or explicit degrees")
            degrees = [req.k - 1] * (2 * req.k - 2) + [req.k - 2]
        stats = degseq_enumerate(tuple(degrees))
        return SearchResponse(
            mode="degseq",
            n=len(stats.degrees),
            k=req.k,
            best_value=stats.max_triangles,
            witnesses=list(stats.max_witnesses),
            explored=stats.classes,
            pruned=0,
            exact=True,
            wall_time_s=0.0,
            params={
                "degrees": list(stats.degrees),
                "classes": stats.classes,
                "min_triangles": stats.min_triangles,
                "min_witnesses": list(stats.min_witnesses),
            },
        )
    raise GraphInputError(f"unknown mode {req.mode!r}; choose exhaustive, degseq or hill")


@app.post("/degseq", response_model=DegseqBoundsResponse)
def degseq(req: DegseqBoundsRequest):
    b = degseq_triangle_bounds(req.k, req.s)
    max_value = b.max_value if isinstance(b.max_value, int) else _frac(b.max_value)
    return DegseqBoundsResponse(
        k=b.k,
        s=b.s,
        max_value=max_value,
        min_value=b.min_value,
        dichotomy_floor=b.dichotomy_floor,
        max_witness=graph6_encode(b.max_witness) if b.max_witness else None,
        min_witness=graph6_encode(b.min_witness) if b.min_witness else None,
    )


@app.post("/goodman", response_model=GoodmanResponse)
def goodman(req: GraphRequest):
    g = graph6_decode(req.graph6)
    rep = goodman_check(g)
    return GoodmanResponse(
        n=g.n,
        lhs=rep.lhs,
        rhs=rep.rhs,
        holds=rep.holds,
        triangles=rep.triangles,
        complement_triangles=rep.complement_triangles,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(req: VerifyRequest):
    from . import acceptance  # deferred: acceptance drives the CLI, which wraps this app

    try:
        results = acceptance.run_all(req.criteria)
    except ValueError as exc:
        raise GraphInputError(str(exc)) from None
    payload = [
        CriterionPayload(
            number=r.number,
            title=r.title,
            passed=r.passed,
            detail=r.detail,
            seconds=r.seconds,
            budget_s=r.budget_s,
        )
        for r in results
    ]
    return VerifyResponse(all_passed=all(r.passed for r in results), results=payload)


@app.post("/verify-corpus", response_model=CorpusResponse)
def verify_corpus(req: CorpusRequest):
    if req.k < 2:
        raise GraphInputError("corpus verification needs k >= 2")
    rows = []
    for lineno, raw in enumerate(req.lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            g = graph6_decode(line)
            table = count_triangles(g)
            free = contains_fan(g, req.k) is None
            ledger = weigh(g, req.k, Scheme.BASIC, table=table)
            max_f = max(ledger.f.values(), default=Fraction(0))
            lemma_ok = lemma_suite(g, req.k).ok if free else None
            rows.append(
                CorpusRow(
                    line=lineno,
                    graph6=line,
                    n=g.n,
                    edges=g.num_edges,
                    triangles=table.count,
                    fan_free=free,
                    max_f=_frac(max_f),
                    lemma_ok=lemma_ok,
                    error=None,
                )
            )
        except (Graph6ParseError, GraphInputError, CapacityError) as exc:
            rows.append(
                CorpusRow(
                    line=lineno,
                    graph6=line,
                    n=None,
                    edges=None,
                    triangles=None,
                    fan_free=None,
                    max_f=None,
                    lemma_ok=None,
                    error=str(exc),
                )
            )
    return CorpusResponse(k=req.k, rows=rows)
