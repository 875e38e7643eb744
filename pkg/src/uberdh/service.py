"""FastAPI service exposing the homology engine.

The CLI talks to this app in-process by default; running it under uvicorn
gives the same API over HTTP, which lets one warm process reuse its
subset-homology caches across many queries.
"""

from __future__ import annotations

import random

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import scomplex
from .doubleh import diagonal_euler, double_homology, hochster_table
from .domination import domination_polynomial
from .errors import SizeCap, TorsionObstruction, UberdhError
from .exactla import parse_coeffs
from .homology import homology, subset_homology_table
from .models import (ComplexModel, DominationRequest, DominationResponse,
                     DoubleRequest, DoubleResponse, GenerateRequest,
                     HomologyRequest, HomologyResponse, MvssRequest,
                     UberRequest, UberResponse, VerifyRequest, VerifyResponse)
from .mvss import REDUCED, UNREDUCED, e1_page, e2_page
from .randgen import random_complex
from .scomplex import Graph, flag_complex, one_skeleton
from .uber import uber_B, uberhomology
from .verify import verify_all

app = FastAPI(title="uberdh", version="1.0.0")


@app.exception_handler(UberdhError)
def _uberdh_error(request: Request, exc: UberdhError):
    if isinstance(exc, TorsionObstruction):
        status, kind = 409, "torsion"
    elif isinstance(exc, SizeCap):
        status, kind = 413, "sizecap"
    else:
        status, kind = 422, "input"
    return JSONResponse(status_code=status,
                        content={"error": str(exc), "kind": kind})


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/api/generate", response_model=ComplexModel, response_model_by_alias=True)
def generate(req: GenerateRequest):
    shape = req.shape
    if shape == "simplex":
        K = scomplex.simplex(_need_n(req))
    elif shape == "boundary-simplex":
        K = scomplex.boundary_simplex(_need_n(req))
    elif shape == "cycle":
        K = scomplex.cycle(_need_n(req))
    elif shape == "icosahedron":
        K = scomplex.icosahedron()
    elif shape == "flag":
        if not req.edges:
            raise UberdhError("flag shape needs an edge list")
        n = req.n or (max(v for e in req.edges for v in e) + 1)
        K = flag_complex(Graph.from_edges(n, [tuple(e) for e in req.edges]))
    elif shape == "random":
        rng = random.Random(req.seed if req.seed is not None else 0)
        K = random_complex(rng, _need_n(req))
    else:
        raise UberdhError(f"unknown shape {shape!r}")
    return ComplexModel.from_complex(K)


def _need_n(req: GenerateRequest) -> int:
    if req.n is None:
        raise UberdhError(f"shape {req.shape!r} needs --n")
    return req.n


@app.post("/api/homology", response_model=HomologyResponse)
def homology_endpoint(req: HomologyRequest):
    K = req.complex.to_complex()
    coeffs = parse_coeffs(req.coeffs)
    groups = homology(K, reduced=req.reduced, coeffs=coeffs)
    return HomologyResponse(
        coeffs=req.coeffs, reduced=req.reduced,
        groups=[{"degree": d, "rank": cls.rank, "torsion": list(cls.torsion)}
                for d, cls in sorted(groups.items())])


@app.post("/api/uber", response_model=UberResponse)
def uber_endpoint(req: UberRequest):
    K = req.complex.to_complex()
    coeffs = parse_coeffs(req.coeffs)
    if req.zero_degree:
        table = subset_homology_table(K, reduced=False, coeffs=coeffs,
                                      workers=req.workers, cache_path=req.cache_path)
        B = uber_B(K, coeffs, table=table)
        entries = [{"j": j, "i": i, "rank": cls.rank, "torsion": list(cls.torsion)}
                   for (j, i), cls in sorted(B.items())]
    else:
        full = uberhomology(K, coeffs)
        entries = [{"j": j, "k": k, "i": i, "rank": cls.rank,
                    "torsion": list(cls.torsion)}
                   for (j, k, i), cls in sorted(full.items())]
    return UberResponse(coeffs=req.coeffs, zero_degree=req.zero_degree, entries=entries)


@app.post("/api/double", response_model=DoubleResponse)
def double_endpoint(req: DoubleRequest):
    K = req.complex.to_complex()
    coeffs = parse_coeffs(req.coeffs)
    if req.table not in ("double", "hochster"):
        raise UberdhError(f"unknown table {req.table!r}")
    table = subset_homology_table(K, reduced=True, coeffs=coeffs,
                                  workers=req.workers, cache_path=req.cache_path)
    if req.table == "hochster":
        dh = hochster_table(K, coeffs, table=table)
        diag = None
    else:
        dh = double_homology(K, coeffs, table=table)
        diag = diagonal_euler(K, coeffs, dh=dh)
    return DoubleResponse(coeffs=req.coeffs, table=req.table,
                          entries=dh.to_records(), diagonal_euler=diag)


@app.post("/api/mvss")
def mvss_endpoint(req: MvssRequest):
    K = req.complex.to_complex()
    coeffs = parse_coeffs(req.coeffs)
    variant = {"reduced": REDUCED, "unreduced": UNREDUCED}.get(req.variant)
    if variant is None:
        raise UberdhError(f"unknown variant {req.variant!r}")
    if req.page not in (1, 2):
        raise UberdhError("page must be 1 or 2")
    table = subset_homology_table(K, reduced=(variant == REDUCED), coeffs=coeffs,
                                  workers=req.workers, cache_path=req.cache_path)
    if req.page == 1:
        page = e1_page(K, variant, coeffs, table=table, with_diffs=False)
    else:
        page = e2_page(K, variant, coeffs, table=table)
    return page.to_records()


@app.post("/api/domination", response_model=DominationResponse)
def domination_endpoint(req: DominationRequest):
    K = req.complex.to_complex()
    poly = domination_polynomial(one_skeleton(K))
    value = poly.eval(req.eval_at) if req.eval_at is not None else None
    return DominationResponse(coefficients=list(poly.coeffs), text=str(poly),
                              value=value)


@app.post("/api/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest):
    K = req.complex.to_complex()
    coeffs = parse_coeffs(req.coeffs)
    report = verify_all(K, coeffs, workers=req.workers)
    return VerifyResponse(ok=report.ok, coeffs=req.coeffs,
                          claims=report.to_records())
