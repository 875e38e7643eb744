"""Pydantic request/response models shared by the service and the CLI."""

from __future__ import annotations

from pydantic import BaseModel, Field

from . import scomplex
from .scomplex import SimplicialComplex


class ComplexModel(BaseModel):
    schema_version: int = Field(default=1, alias="schema")
    m: int
    facets: list[list[int]]

    model_config = {"populate_by_name": True}

    def to_complex(self) -> SimplicialComplex:
        return scomplex.from_json_obj(self.model_dump(by_alias=True))

    @classmethod
    def from_complex(cls, K: SimplicialComplex) -> "ComplexModel":
        return cls.model_validate(scomplex.to_json_obj(K))


class GenerateRequest(BaseModel):
    shape: str  # simplex | boundary-simplex | cycle | icosahedron | flag | random
    n: int | None = None
    edges: list[list[int]] | None = None  # flag shape only
    seed: int | None = None               # random shape only


class ComputeOptions(BaseModel):
    coeffs: str = "q"  # z | q | f2 | fp:<prime>
    workers: int | None = None
    cache_path: str | None = None


class HomologyRequest(ComputeOptions):
    complex: ComplexModel
    reduced: bool = False


class GroupRecord(BaseModel):
    rank: int
    torsion: list[int] = []


class HomologyResponse(BaseModel):
    coeffs: str
    reduced: bool
    groups: list[dict]  # {"degree":, "rank":, "torsion": []}


class UberRequest(ComputeOptions):
    complex: ComplexModel
    zero_degree: bool = False


class UberResponse(BaseModel):
    coeffs: str
    zero_degree: bool
    entries: list[dict]  # {"j","k","i","rank","torsion"} or {"j","i",...}


class DoubleRequest(ComputeOptions):
    complex: ComplexModel
    table: str = "double"  # double | hochster


class DoubleResponse(BaseModel):
    coeffs: str
    table: str
    entries: list[dict]
    diagonal_euler: int | None = None


class MvssRequest(ComputeOptions):
    complex: ComplexModel
    variant: str = "reduced"  # reduced | unreduced
    page: int = 2


class DominationRequest(BaseModel):
    complex: ComplexModel
    eval_at: int | None = Field(default=None, alias="eval")

    model_config = {"populate_by_name": True}


class DominationResponse(BaseModel):
    coefficients: list[int]
    text: str
    value: int | None = None


class VerifyRequest(ComputeOptions):
    complex: ComplexModel


class VerifyResponse(BaseModel):
    ok: bool
    coeffs: str
    claims: list[dict]


class ErrorBody(BaseModel):
    error: str
    kind: str  # input | torsion | sizecap
